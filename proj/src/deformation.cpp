#include "swh/deformation.hpp"

#include <algorithm>
#include <functional>

#include "swh/engine.hpp"
#include "swh/errors.hpp"
#include "swh/milnor.hpp"

namespace swh {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::ConditionI: return "condition-i";
    case WitnessKind::ConditionII: return "condition-ii";
    case WitnessKind::UnitJump: return "unit-jump";
  }
  return "unknown";
}

ConditionIResult check_condition_i(const Singularity& s, const Rational& alpha) {
  s.require_valid();
  ConditionIResult r;
  r.bound = s.min_exponent() + s.rho_or_throw() - Rational(1);
  r.margin = r.bound - alpha;
  r.holds = alpha < r.bound;
  return r;
}

std::optional<ConditionWitness> check_condition_ii(const Singularity& s, const Rational& alpha, int r) {
  s.require_valid();
  if (r < 1) throw Error(ErrorKind::Validation, "r must be >= 1");
  const Rational rho = s.rho_or_throw();
  std::vector<const Term*> lead;
  for (const auto& t : s.perturbation())
    if (s.unshifted_degree(t.m) == rho) lead.push_back(&t);
  if (lead.size() != 1)
    throw Error(ErrorKind::PathUnavailable, "f_rho has " + std::to_string(lead.size()) + " monomials; engine required");

  const auto& e = s.exponents();
  const size_t n = e.size();
  Monomial fr(n);
  for (size_t i = 0; i < n; ++i) fr[i] = r * lead.front()->m[i];
  std::vector<int> cap(n);
  for (size_t i = 0; i < n; ++i) {
    cap[i] = e[i] - 2 - fr[i];
    if (cap[i] < 0) return std::nullopt;
  }
  // target sum of h_i / e_i
  Rational target = alpha - Rational(r) * (rho - Rational(1)) - s.min_exponent();
  if (target.sign() < 0) return std::nullopt;

  Monomial h(n, 0);
  std::optional<Monomial> found;
  std::function<void(size_t, const Rational&)> dfs = [&](size_t i, const Rational& rest) {
    if (found) return;
    if (i + 1 == n) {
      Rational v = rest * Rational(e[i]);
      if (!v.is_integer()) return;
      long long hv = v.floor_ll();
      if (hv < 0 || hv > cap[i]) return;
      h[i] = static_cast<int>(hv);
      found = h;
      return;
    }
    for (int v = 0; v <= cap[i]; ++v) {
      Rational left = rest - Rational(v, e[i]);
      if (left.sign() < 0) break;
      h[i] = v;
      dfs(i + 1, left);
      if (found) return;
    }
    h[i] = 0;
  };
  dfs(0, target);
  if (!found) return std::nullopt;

  ConditionWitness w;
  w.alpha = alpha;
  w.r = r;
  w.h = *found;
  w.image.resize(n);
  for (size_t i = 0; i < n; ++i) w.image[i] = fr[i] + w.h[i];
  bool h_one = std::all_of(w.h.begin(), w.h.end(), [](int v) { return v == 0; });
  if (h_one && r == 1) {
    w.kind = WitnessKind::UnitJump;
    w.relation = "l(f, alpha) = l(f1, alpha) + 1";
  } else {
    w.kind = WitnessKind::ConditionII;
    w.relation = "l(f, alpha) > l(f1, alpha)";
  }
  return w;
}

std::pair<Monomial, Monomial> fermat_witnesses(int n, int d) {
  if (n < 3 || d <= n) throw Error(ErrorKind::Validation, "need d > n >= 3");
  auto fill = [&](int total) {
    Monomial m(n, 0);
    for (int i = 0; i < n && total > 0; ++i) {
      m[i] = std::min(total, d - 2);
      total -= m[i];
    }
    if (total > 0) throw Error(ErrorKind::Validation, "degree exceeds n(d-2)");
    return m;
  };
  return {fill(2 * d - n), fill(2 * d - n + 1)};
}

CaveatReport multi_monomial_caveat(const Singularity& s) {
  s.require_valid();
  CaveatReport rep;
  ShiftTable eng = engine_shift_table(s);
  std::vector<ShiftTable> per;
  for (const auto& t : s.perturbation()) per.push_back(shift_table(s.exponents(), t.m));
  for (size_t i = 0; i < eng.entries.size(); ++i) {
    CaveatEntry ce;
    ce.xi = eng.entries[i].xi;
    ce.alpha = eng.entries[i].alpha;
    ce.engine_r = eng.entries[i].r;
    bool differs = false;
    for (size_t j = 0; j < per.size(); ++j) {
      int r = per[j].entries[i].r;
      ce.per_term_r[monomial_str(s.perturbation()[j].m)] = r;
      if (r != ce.engine_r) differs = true;
    }
    if (differs) {
      rep.discrepancy = true;
      rep.entries.push_back(std::move(ce));
    }
  }
  rep.message = rep.discrepancy
                    ? "single-monomial shift formula disagrees with the engine; coefficients of the "
                      "perturbation interact and only the engine result is valid"
                    : "per-term shift predictions agree with the engine";
  return rep;
}

}  // namespace swh
