#include "swh/json_io.hpp"

#include "swh/deformation.hpp"
#include "swh/errors.hpp"
#include "swh/milnor.hpp"

namespace swh {

namespace {

Error bad(const std::string& msg) { return Error(ErrorKind::Validation, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const json& j, const char* key, bool dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_boolean()) throw bad(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

json monomial_to_json(const Monomial& m) { return json(m); }

json term_to_json(const GMTerm& t) {
  json o;
  o["nu"] = monomial_to_json(t.nu);
  o["k"] = t.k;
  o["coeff"] = to_json(t.coeff);
  return o;
}

LengthOptions length_options(const json& job) {
  LengthOptions o;
  o.allow_engine = bool_field(job, "engine", true);
  if (job.contains("branches")) {
    const json& b = job.at("branches");
    if (!b.is_number_unsigned() && !(b.is_number_integer() && b.get<long long>() >= 0))
      throw bad("field 'branches' must be a non-negative integer");
    o.branches_override = b.get<uint64_t>();
  }
  return o;
}

json witness_to_json(const std::optional<ConditionWitness>& w) {
  if (!w) return nullptr;
  json o;
  o["kind"] = witness_kind_name(w->kind);
  o["alpha"] = to_json(w->alpha);
  o["r"] = w->r;
  o["h"] = monomial_to_json(w->h);
  o["image"] = monomial_to_json(w->image);
  o["relation"] = w->relation;
  return o;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw bad("rationals must be strings \"p/q\" or integers");
}

json to_json(const Rational& r) { return r.str(); }

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw bad("monomial must be an integer array");
  Monomial m;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw bad("monomial must be an integer array");
    m.push_back(v.get<int>());
  }
  return m;
}

Singularity singularity_from_json(const json& j) {
  std::vector<int> e = monomial_from_json(field(j, "exponents"));
  std::vector<Term> pert;
  if (j.contains("perturbation")) {
    const json& p = j.at("perturbation");
    if (!p.is_array()) throw bad("'perturbation' must be an array");
    for (const auto& t : p) pert.push_back({monomial_from_json(field(t, "m")), rational_from_json(field(t, "c"))});
  }
  std::vector<Rational> coeffs;
  if (j.contains("coefficients")) {
    const json& c = j.at("coefficients");
    if (!c.is_array()) throw bad("'coefficients' must be an array");
    for (const auto& v : c) coeffs.push_back(rational_from_json(v));
    if (coeffs.size() != e.size()) throw bad("'coefficients' length does not match 'exponents'");
  }
  Singularity s(std::move(e), std::move(pert), std::move(coeffs));
  s.require_valid();
  return s;
}

json singularity_to_json(const Singularity& s) {
  json o;
  o["exponents"] = s.exponents();
  json c = json::array();
  for (const auto& x : s.base_coefficients()) c.push_back(to_json(x));
  o["coefficients"] = c;
  json p = json::array();
  for (const auto& t : s.perturbation()) p.push_back({{"m", t.m}, {"c", to_json(t.c)}});
  o["perturbation"] = p;
  return o;
}

json spectrum_to_json(const SpectrumSeries& sp) {
  json o;
  o["mu"] = sp.total();
  json es = json::array();
  for (const auto& [a, m] : sp.entries) es.push_back({{"alpha", to_json(a)}, {"mult", m}});
  o["entries"] = es;
  o["pg"] = geometric_genus(sp);
  o["reduced_genus"] = reduced_genus(sp);
  return o;
}

json shifts_to_json(const ShiftTable& t, const BSRootSet& roots, const char* source) {
  json o;
  json sh = json::array();
  for (const auto& en : t.entries)
    sh.push_back({{"nu", monomial_to_json(en.xi)}, {"alpha", to_json(en.alpha)}, {"r", en.r}});
  o["shifted"] = sh;
  json re = json::array();
  for (const auto& a : roots.exponents) re.push_back(to_json(a));
  o["root_exponents"] = re;
  o["source"] = source;
  return o;
}

json length_to_json(const LengthReport& r) {
  json o;
  o["alpha"] = to_json(r.alpha);
  o["nu_tilde"] = r.nu_tilde;
  o["branches"] = r.branches;
  o["delta_tilde"] = r.delta_tilde;
  o["length"] = r.length;
  o["path"] = path_name(r.path);
  return o;
}

json components_to_json(const std::vector<Component>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    json terms = json::array();
    for (const auto& t : c.terms) terms.push_back(term_to_json(t));
    out.push_back({{"alpha", to_json(c.alpha)}, {"terms", terms}});
  }
  return out;
}

json verify_to_json(const VerifyReport& r) {
  json o;
  json an = json::array();
  for (const auto& a : r.anchors) {
    json x;
    x["name"] = a.name;
    x["description"] = a.description;
    x["status"] = anchor_status_name(a.status);
    if (a.status == AnchorStatus::Fail) {
      x["expected"] = a.expected;
      x["actual"] = a.actual;
    }
    an.push_back(x);
  }
  o["anchors"] = an;
  o["passed"] = r.all_passed();
  return o;
}

json error_to_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return 2;
    case ErrorKind::PathUnavailable: return 3;
    case ErrorKind::CutoffExhausted: return 4;
    default: return 5;
  }
}

json run_job(const json& job) {
  if (!job.is_object()) throw bad("job must be a JSON object");
  const std::string cmd = field(job, "command").get<std::string>();
  const bool engine = bool_field(job, "engine", true);

  if (cmd == "fermat-witnesses") {
    int n = int_field(job, "n"), d = int_field(job, "d");
    auto [m2, m1] = fermat_witnesses(n, d);
    std::vector<int> e(n, d);
    Singularity s2(e, {{m2, Rational(1)}}), s1(e, {{m1, Rational(1)}});
    auto w = check_condition_ii(s2, Rational(1), 1);
    auto c = check_condition_i(s1, Rational(1));
    json o;
    o["n"] = n;
    o["d"] = d;
    o["condition_ii"] = {{"monomial", m2}, {"degree", 2 * d - n}, {"witness", witness_to_json(w)}};
    o["condition_i"] = {{"monomial", m1}, {"degree", 2 * d - n + 1}, {"holds", c.holds}, {"bound", to_json(c.bound)}};
    return o;
  }
  if (cmd == "verify-examples") {
    VerifyOptions vo;
    vo.engine = engine;
    return verify_to_json(verify_reference_examples(vo));
  }

  Singularity s = singularity_from_json(job);

  if (cmd == "spectrum") {
    std::string algo = job.contains("algorithm") ? job.at("algorithm").get<std::string>() : "product";
    if (algo == "product") return spectrum_to_json(spectrum_bp(s.exponents()));
    if (algo == "generating") return spectrum_to_json(spectrum_weighted(s.weights()));
    throw bad("unknown spectrum algorithm '" + algo + "'");
  }
  if (cmd == "bs-roots") {
    if (s.perturbation().size() <= 1) {
      ShiftTable t = shift_table(s);
      return shifts_to_json(t, reduced_bs_roots(t), "combinatorial");
    }
    if (!engine) throw Error(ErrorKind::PathUnavailable, "multi-monomial perturbation needs the engine");
    ShiftTable t = engine_shift_table(s);
    return shifts_to_json(t, engine_bs_roots(s), "engine");
  }
  if (cmd == "length") {
    LengthOptions lo = length_options(job);
    if (job.contains("beta")) {
      Rational beta = rational_from_json(job.at("beta"));
      long long k = field(job, "k").get<long long>();
      return json{{"beta", to_json(beta)}, {"k", k}, {"length", length_beta_k(s, beta, k, lo)}};
    }
    if (job.contains("alpha_min") || job.contains("alpha_max")) {
      json rows = json::array();
      for (const auto& r :
           length_table(s, rational_from_json(field(job, "alpha_min")), rational_from_json(field(job, "alpha_max")), lo))
        rows.push_back(length_to_json(r));
      return json{{"rows", rows}};
    }
    return length_to_json(length(s, rational_from_json(field(job, "alpha")), lo));
  }
  if (cmd == "quotient-length") {
    Rational a = rational_from_json(field(job, "alpha"));
    return json{{"alpha", to_json(a)}, {"quotient_length", quotient_length(s, a, length_options(job))}};
  }
  if (cmd == "check-conditions") {
    Rational a = rational_from_json(field(job, "alpha"));
    int r = job.contains("r") ? int_field(job, "r") : 1;
    auto ci = check_condition_i(s, a);
    json o;
    o["alpha"] = to_json(a);
    o["condition_i"] = {{"holds", ci.holds}, {"bound", to_json(ci.bound)}, {"margin", to_json(ci.margin)}};
    o["r"] = r;
    o["condition_ii"] = witness_to_json(check_condition_ii(s, a, r));
    return o;
  }
  if (cmd == "expand") {
    if (!engine) throw Error(ErrorKind::PathUnavailable, "expand needs the engine");
    Monomial h = job.contains("monomial") ? monomial_from_json(job.at("monomial")) : Monomial(s.n(), 0);
    Rational cut = rational_from_json(field(job, "cutoff"));
    return components_to_json(expand(s, h, cut).components);
  }
  throw bad("unknown command '" + cmd + "'");
}

}  // namespace swh
