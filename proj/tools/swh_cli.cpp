#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "swh/errors.hpp"
#include "swh/json_io.hpp"

using swh::json;

namespace {

struct Outcome {
  json value;
  int code = 0;
};

Outcome run_safely(const json& job) {
  try {
    return {swh::run_job(job), 0};
  } catch (const swh::Error& e) {
    return {swh::error_to_json(swh::error_kind_name(e.kind()), e.what()), swh::exit_code_for(e.kind())};
  } catch (const json::exception& e) {
    return {swh::error_to_json("validation", e.what()), 2};
  } catch (const std::bad_alloc&) {
    return {swh::error_to_json("resource_exhausted", "out of memory"), 5};
  } catch (const std::exception& e) {
    return {swh::error_to_json("internal", e.what()), 5};
  }
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// one row per array element for list-shaped payloads, key/value pairs otherwise
std::string to_tsv(const std::string& cmd, const json& v) {
  std::ostringstream os;
  auto rows = [&](const json& arr) {
    if (!arr.is_array() || arr.empty()) return;
    bool first = true;
    for (const auto& [k, x] : arr.front().items()) {
      os << (first ? "" : "\t") << k;
      first = false;
    }
    os << "\n";
    for (const auto& row : arr) {
      first = true;
      for (const auto& [k, x] : row.items()) {
        os << (first ? "" : "\t") << scalar_str(x);
        first = false;
      }
      os << "\n";
    }
  };
  if (v.contains("error")) {
    os << "error\t" << scalar_str(v["error"]["kind"]) << "\t" << scalar_str(v["error"]["message"]) << "\n";
  } else if (cmd == "spectrum") {
    rows(v["entries"]);
  } else if (cmd == "bs-roots") {
    rows(v["shifted"]);
  } else if (v.is_object() && v.contains("rows")) {
    rows(v["rows"]);
  } else if (cmd == "verify-examples") {
    rows(v["anchors"]);
  } else if (v.is_array()) {
    os << "alpha\tnu\tk\tcoeff\n";
    for (const auto& c : v)
      for (const auto& t : c["terms"])
        os << scalar_str(c["alpha"]) << "\t" << t["nu"].dump() << "\t" << t["k"] << "\t" << scalar_str(t["coeff"]) << "\n";
  } else {
    for (const auto& [k, x] : v.items()) os << k << "\t" << scalar_str(x) << "\n";
  }
  return os.str();
}

json parse_term(const std::string& s) {
  // "2,4" or "2,4:3/5"
  auto colon = s.find(':');
  std::string ms = s.substr(0, colon);
  std::string cs = colon == std::string::npos ? "1" : s.substr(colon + 1);
  json m = json::array();
  std::stringstream ss(ms);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      m.push_back(v);
    } catch (const std::exception&) {
      throw swh::Error(swh::ErrorKind::Validation, "malformed term '" + s + "'");
    }
  }
  return json{{"m", m}, {"c", cs}};
}

json parse_monomial(const std::string& s) { return parse_term(s)["m"]; }

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw swh::Error(swh::ErrorKind::Validation, "cannot open " + path);
  return json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, Bernstein-Sato root exponents and D-module lengths of semi-weighted-homogeneous singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool no_engine = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--no-engine", no_engine, "Disable the Gauss-Manin engine");

  std::vector<int> exponents;
  std::vector<std::string> terms, coeffs;
  std::string job_file, alpha, cutoff, monomial, beta, algorithm = "product";
  std::vector<std::string> table;
  int r = 1, n = 0, d = 0, jobs = 1;
  long long k = 0;
  long long branches_override = -1;

  auto add_sing = [&](CLI::App* sc) {
    sc->add_option("-e,--exponents", exponents, "Exponents e_i of the principal part")->delimiter(',');
    sc->add_option("-t,--term", terms, "Perturbation term m1,...,mn[:coefficient] (repeatable)");
    sc->add_option("--coefficients", coeffs, "Coefficients of x_i^{e_i}")->delimiter(',');
    sc->add_option("--job", job_file, "JSON job file holding the singularity ('-' for stdin)");
  };

  auto* sp = app.add_subcommand("spectrum", "Spectrum with multiplicities, p_g and reduced genus");
  add_sing(sp);
  sp->add_option("--algorithm", algorithm, "product | generating")->check(CLI::IsMember({"product", "generating"}));
  auto* bs = app.add_subcommand("bs-roots", "Saturation shifts and reduced Bernstein-Sato root exponents");
  add_sing(bs);
  auto* ln = app.add_subcommand("length", "Length of D f^{-alpha}");
  add_sing(ln);
  ln->add_option("--alpha", alpha, "alpha as p/q");
  ln->add_option("--table", table, "alpha_min alpha_max")->expected(2);
  ln->add_option("--beta", beta, "beta in [0,1), with --k");
  ln->add_option("--k", k, "k for the (beta, k) form");
  ln->add_option("--branches", branches_override, "Override the number of branches");
  auto* ql = app.add_subcommand("quotient-length", "Length of D f^{-alpha} / D f^{-alpha+1}");
  add_sing(ql);
  ql->add_option("--alpha", alpha, "alpha as p/q")->required();
  ql->add_option("--branches", branches_override, "Override the number of branches");
  auto* ct = app.add_subcommand("check-conditions", "Check the sufficient conditions (i) and (ii) at alpha");
  add_sing(ct);
  ct->add_option("--alpha", alpha, "alpha as p/q")->required();
  ct->add_option("-r", r, "Power r for condition (ii)");
  auto* sc = app.add_subcommand("fermat-witnesses", "Witness monomials for the Fermat polynomial of degree d in n variables");
  sc->add_option("-n", n, "Number of variables")->required();
  sc->add_option("-d", d, "Degree")->required();
  auto* ex = app.add_subcommand("expand", "Asymptotic components of [x^h dx] up to a cutoff");
  add_sing(ex);
  ex->add_option("--monomial", monomial, "h as h1,...,hn (default 0)");
  ex->add_option("--cutoff", cutoff, "V-degree cutoff")->required();
  auto* vp = app.add_subcommand("verify-examples", "Run the built-in reference examples");
  auto* rn = app.add_subcommand("run", "Run one JSON job");
  rn->add_option("job", job_file, "Job file ('-' for stdin)")->required();
  auto* bt = app.add_subcommand("batch", "Run newline-delimited JSON jobs from stdin, results in input order");
  bt->add_option("--jobs", jobs, "Parallel workers")->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const std::string& cmd, const Outcome& o) {
    if (format == "tsv")
      std::cout << to_tsv(cmd, o.value);
    else
      std::cout << o.value.dump(2) << "\n";
    return o.code;
  };

  if (*bt) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(std::cin, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    std::vector<Outcome> out(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i; (i = next.fetch_add(1)) < lines.size();) {
        json job;
        try {
          job = json::parse(lines[i]);
        } catch (const json::exception& e) {
          out[i] = {swh::error_to_json("validation", e.what()), 2};
          continue;
        }
        if (no_engine && job.is_object()) job["engine"] = false;
        out[i] = run_safely(job);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int code = 0;
    for (const auto& o : out) {
      std::cout << o.value.dump() << "\n";
      if (!code) code = o.code;
    }
    return code;
  }

  json job = json::object();
  std::string cmd;
  try {
    if (*rn) {
      job = read_json_file(job_file);
      cmd = job.value("command", "");
    } else {
      CLI::App* chosen = app.get_subcommands().front();
      cmd = chosen->get_name();
      if (!job_file.empty()) job = read_json_file(job_file);
      if (!exponents.empty()) job["exponents"] = exponents;
      if (!terms.empty()) {
        json p = json::array();
        for (const auto& t : terms) p.push_back(parse_term(t));
        job["perturbation"] = p;
      }
      if (!coeffs.empty()) job["coefficients"] = coeffs;
      job["command"] = cmd;
      if (!alpha.empty()) job["alpha"] = alpha;
      if (!cutoff.empty()) job["cutoff"] = cutoff;
      if (!monomial.empty()) job["monomial"] = parse_monomial(monomial);
      if (table.size() == 2) {
        job["alpha_min"] = table[0];
        job["alpha_max"] = table[1];
      }
      if (!beta.empty()) {
        job["beta"] = beta;
        job["k"] = k;
      }
      if (branches_override >= 0) job["branches"] = branches_override;
      if (*sp) job["algorithm"] = algorithm;
      if (*ct) job["r"] = r;
      if (*sc) {
        job["n"] = n;
        job["d"] = d;
      }
      (void)vp;
    }
  } catch (const swh::Error& e) {
    return emit(cmd, {swh::error_to_json(swh::error_kind_name(e.kind()), e.what()), swh::exit_code_for(e.kind())});
  } catch (const json::exception& e) {
    return emit(cmd, {swh::error_to_json("validation", e.what()), 2});
  }
  if (no_engine && job.is_object()) job["engine"] = false;
  Outcome o = run_safely(job);
  if (cmd == "verify-examples" && o.code == 0 && !o.value.value("passed", false)) o.code = 1;
  return emit(cmd, o);
}
