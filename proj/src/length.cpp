#include "swh/length.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "swh/engine.hpp"
#include "swh/errors.hpp"
#include "swh/milnor.hpp"

namespace swh {

const char* path_name(NuTildePath p) {
  switch (p) {
    case NuTildePath::WeightedHomogeneous: return "weighted_homogeneous";
    case NuTildePath::PrincipalPart: return "principal_part";
    case NuTildePath::ShiftTable: return "shift_table";
    case NuTildePath::Engine: return "engine";
    case NuTildePath::Trivial: return "trivial";
  }
  return "unknown";
}

uint64_t branches(const Singularity& s, std::optional<uint64_t> override_value) {
  if (override_value) return *override_value;
  if (s.n() >= 3) return 1;
  return static_cast<uint64_t>(std::gcd(s.exponents()[0], s.exponents()[1]));
}

uint64_t nu_tilde_wh(const SpectrumSeries& sp, const Rational& alpha) {
  uint64_t t = 0;
  Rational cls = alpha.frac();
  for (const auto& [a, m] : sp.entries) {
    if (a > alpha) break;
    if (a.frac() == cls) t += m;
  }
  return t;
}

uint64_t nu_tilde_wh(const std::vector<int>& e, const Rational& alpha) {
  Rational lo;
  for (int x : e) lo += Rational(1, x);
  Rational a = alpha;
  Rational n(static_cast<long long>(e.size()));
  if (a >= n) a -= Rational(mpq_class((a - n).floor() + 1));
  uint64_t t = 0;
  for (; a >= lo; a -= Rational(1)) t += graded_dimension(e, a);
  return t;
}

uint64_t nu_tilde_monomial(const ShiftTable& st, const Rational& alpha) {
  uint64_t t = 0;
  for (const auto& en : st.entries)
    if (en.exponent() <= alpha && (alpha - en.alpha).is_integer()) ++t;
  return t;
}

namespace {

bool positive_integer(const Rational& a) { return a.is_integer() && a.sign() > 0; }

// values grouped by class mod 1; count(alpha) = #{v <= alpha, v = alpha mod 1}
class CosetCounter {
 public:
  void add(const Rational& v) { by_class_[v.frac()].push_back(v); }
  void finish() {
    for (auto& [c, vs] : by_class_) std::sort(vs.begin(), vs.end());
  }
  uint64_t count(const Rational& alpha) const {
    auto it = by_class_.find(alpha.frac());
    if (it == by_class_.end()) return 0;
    return static_cast<uint64_t>(std::upper_bound(it->second.begin(), it->second.end(), alpha) - it->second.begin());
  }

 private:
  std::map<Rational, std::vector<Rational>> by_class_;
};

// precomputed data for repeated queries on one singularity
struct LengthCache {
  std::optional<CosetCounter> spectrum;
  std::optional<CosetCounter> shifted;
  std::unique_ptr<GaussManinEngine> engine;
};

LengthReport length_impl(const Singularity& s, const Rational& alpha, const LengthOptions& opt,
                         LengthCache* cache) {
  LengthReport rep;
  rep.alpha = alpha;
  rep.branches = branches(s, opt.branches_override);
  rep.delta_tilde = positive_integer(alpha) ? 1 : 0;
  auto unperturbed = [&] {
    if (!cache) return nu_tilde_wh(s.exponents(), alpha);
    if (!cache->spectrum) {
      cache->spectrum.emplace();
      for (const auto& [a, m] : spectrum_bp(s.exponents()).entries)
        for (uint64_t i = 0; i < m; ++i) cache->spectrum->add(a);
      cache->spectrum->finish();
    }
    return cache->spectrum->count(alpha);
  };
  if (alpha < s.min_exponent()) {
    // every saturated exponent is >= alpha~_f
    rep.nu_tilde = 0;
    rep.path = NuTildePath::Trivial;
  } else if (s.weighted_homogeneous()) {
    rep.nu_tilde = unperturbed();
    rep.path = NuTildePath::WeightedHomogeneous;
  } else if (alpha < s.min_exponent() + s.rho_or_throw() - Rational(1)) {
    rep.nu_tilde = unperturbed();
    rep.path = NuTildePath::PrincipalPart;
  } else if (s.perturbation().size() == 1) {
    if (cache) {
      if (!cache->shifted) {
        cache->shifted.emplace();
        for (const auto& en : shift_table(s).entries) cache->shifted->add(en.exponent());
        cache->shifted->finish();
      }
      rep.nu_tilde = cache->shifted->count(alpha);
    } else {
      rep.nu_tilde = nu_tilde_monomial(shift_table(s), alpha);
    }
    rep.path = NuTildePath::ShiftTable;
  } else if (opt.allow_engine) {
    if (cache) {
      if (!cache->engine) cache->engine = std::make_unique<GaussManinEngine>(s, max_shifted_degree(s.exponents()));
      rep.nu_tilde = cache->engine->nu_tilde(alpha);
    } else {
      GaussManinEngine eng(s, max_shifted_degree(s.exponents()));
      rep.nu_tilde = eng.nu_tilde(alpha);
    }
    rep.path = NuTildePath::Engine;
  } else {
    throw Error(ErrorKind::PathUnavailable,
                "multi-monomial perturbation needs the Gauss-Manin engine, which is disabled");
  }
  rep.length = rep.nu_tilde + rep.branches * static_cast<uint64_t>(rep.delta_tilde) + 1;
  return rep;
}

}  // namespace

LengthReport length(const Singularity& s, const Rational& alpha, const LengthOptions& opt) {
  s.require_valid();
  return length_impl(s, alpha, opt, nullptr);
}

int64_t quotient_length(const Singularity& s, const Rational& alpha, const LengthOptions& opt) {
  return static_cast<int64_t>(length(s, alpha, opt).length) -
         static_cast<int64_t>(length(s, alpha - Rational(1), opt).length);
}

uint64_t length_beta_k(const Singularity& s, const Rational& beta, long long k, const LengthOptions& opt) {
  if (beta.sign() < 0 || beta >= Rational(1)) throw Error(ErrorKind::Validation, "beta must lie in [0,1)");
  if (k < 0) return 1;
  // assembled from dim P_k H^(beta) = nu~ at 1+k-beta, with delta_{beta,0} in place of delta~
  LengthReport r = length(s, Rational(1 + k) - beta, opt);
  return r.nu_tilde + (beta.is_zero() ? r.branches : 0) + 1;
}

std::vector<LengthReport> length_table(const Singularity& s, const Rational& lo, const Rational& hi,
                                       const LengthOptions& opt) {
  s.require_valid();
  if (hi < lo) throw Error(ErrorKind::Validation, "empty range");
  std::set<Rational> classes{Rational(0)};
  for (const auto& [a, m] : spectrum_bp(s.exponents()).entries) classes.insert(a.frac());
  std::set<Rational> alphas;
  for (const auto& c : classes) {
    Rational a = c + Rational(mpq_class((lo - c).floor()));
    if (a < lo) a += Rational(1);
    for (; a <= hi; a += Rational(1)) alphas.insert(a);
  }
  std::vector<LengthReport> out;
  LengthCache cache;
  for (const auto& a : alphas) out.push_back(length_impl(s, a, opt, &cache));
  return out;
}

}  // namespace swh
