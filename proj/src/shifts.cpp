#include "swh/shifts.hpp"

#include <algorithm>

#include "swh/errors.hpp"
#include "swh/milnor.hpp"
#include "swh/spectrum.hpp"

namespace swh {

namespace {

int floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

void check_args(const std::vector<int>& e, const Monomial& a) {
  if (a.size() != e.size()) throw Error(ErrorKind::Validation, "perturbation monomial length does not match n");
  Rational d;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 2) throw Error(ErrorKind::Validation, "exponent below 2");
    if (a[i] < 0) throw Error(ErrorKind::Validation, "negative exponent in perturbation");
    d += Rational(a[i], e[i]);
  }
  if (d <= Rational(1)) throw Error(ErrorKind::Validation, "perturbation degree " + d.str() + " <= 1");
}

}  // namespace

int shift_j_max(const std::vector<int>& e, const Monomial& a) {
  Rational d;
  for (size_t i = 0; i < e.size(); ++i) d += Rational(a[i], e[i]);
  Rational q = Rational(static_cast<long long>(e.size())) / (d - Rational(1));
  mpz_class c = -((-q).floor());
  return static_cast<int>(c.get_si());
}

namespace {

int shift_core(const std::vector<int>& e, const Monomial& a, const XiPoint& xi, int jmax) {
  const size_t n = e.size();
  bool found = false;
  int best = 0;
  for (int j = 1; j <= jmax; ++j) {
    int r = j;
    bool ok = true;
    for (size_t i = 0; i < n; ++i) {
      long long ja = static_cast<long long>(j) * a[i];
      long long v = ((xi[i] - ja) % e[i] + e[i]) % e[i];
      if (v == 0) {
        ok = false;
        break;
      }
      r -= floor_div(v + ja, e[i]);
    }
    if (!ok) continue;
    best = found ? std::max(best, r) : r;
    found = true;
  }
  return found ? std::max(0, best) : 0;
}

}  // namespace

int shift(const std::vector<int>& e, const Monomial& a, const XiPoint& xi, int extra_j) {
  check_args(e, a);
  if (xi.size() != e.size()) throw Error(ErrorKind::Validation, "point length does not match n");
  for (size_t i = 0; i < e.size(); ++i)
    if (xi[i] < 1 || xi[i] > e[i] - 1) throw Error(ErrorKind::Validation, "point outside [1, e_i - 1]");
  return shift_core(e, a, xi, shift_j_max(e, a) + extra_j);
}

int ShiftTable::shift_at(const XiPoint& xi) const {
  for (const auto& en : entries)
    if (en.xi == xi) return en.r;
  throw Error(ErrorKind::Validation, "point not in table");
}

ShiftTable shift_table_with(const std::vector<int>& e, const std::optional<Monomial>& a, const ShiftFn& fn) {
  if (a) check_args(e, *a);
  ShiftTable t;
  t.e = e;
  t.a = a;
  const long long L = lcm_checked(e);
  for_each_basis_monomial(e, [&](const Monomial& nu) {
    ShiftEntry en;
    en.xi = nu;
    long long num = 0;
    for (size_t i = 0; i < nu.size(); ++i) {
      ++en.xi[i];
      num += en.xi[i] * (L / e[i]);
    }
    en.alpha = Rational(num, L);
    en.r = a ? fn(e, *a, en.xi) : 0;
    t.entries.push_back(std::move(en));
    return true;
  });
  return t;
}

ShiftTable shift_table(const std::vector<int>& e, const std::optional<Monomial>& a, int extra_j) {
  // validate once, then skip the per-point checks
  const int jmax = a ? (check_args(e, *a), shift_j_max(e, *a) + extra_j) : 0;
  return shift_table_with(e, a, [jmax](const std::vector<int>& ee, const Monomial& aa, const XiPoint& xi) {
    return shift_core(ee, aa, xi, jmax);
  });
}

ShiftTable shift_table(const Singularity& s) {
  s.require_valid();
  const auto& p = s.perturbation();
  if (p.size() > 1)
    throw Error(ErrorKind::PathUnavailable,
                "perturbation has " + std::to_string(p.size()) + " monomials; use the Gauss-Manin engine");
  return shift_table(s.exponents(), p.empty() ? std::nullopt : std::optional<Monomial>(p.front().m));
}

std::set<Rational> BSRootSet::roots() const {
  std::set<Rational> r;
  for (const auto& x : exponents) r.insert(-x);
  return r;
}

BSRootSet reduced_bs_roots(const ShiftTable& t) {
  BSRootSet b;
  for (const auto& en : t.entries) b.exponents.insert(en.exponent());
  return b;
}

BSRootSet reduced_bs_roots(const std::vector<int>& e, const std::optional<Monomial>& a) {
  return reduced_bs_roots(shift_table(e, a));
}

}  // namespace swh
