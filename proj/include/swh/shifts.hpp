#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "swh/rational.hpp"
#include "swh/singularity.hpp"

namespace swh {

// Points of Xi = prod [1, e_i - 1] are 1-based: xi = nu + 1 for a box monomial nu.
using XiPoint = std::vector<int>;

struct ShiftEntry {
  XiPoint xi;
  Rational alpha;  // sum xi_i / e_i
  int r = 0;
  Rational exponent() const { return alpha - Rational(r); }
};

struct ShiftTable {
  std::vector<int> e;
  std::optional<Monomial> a;
  std::vector<ShiftEntry> entries;  // lexicographic in xi

  int shift_at(const XiPoint& xi) const;
};

struct BSRootSet {
  std::set<Rational> exponents;  // positive, alpha~(nu) - r(nu)
  std::set<Rational> roots() const;
};

using ShiftFn = std::function<int(const std::vector<int>& e, const Monomial& a, const XiPoint& xi)>;

// max(0, max over (xi', j) of j - sum floor((xi'_i + j a_i) / e_i)), j <= ceil(n/(d(a)-1)) + extra_j
int shift(const std::vector<int>& e, const Monomial& a, const XiPoint& xi, int extra_j = 0);
int shift_j_max(const std::vector<int>& e, const Monomial& a);

ShiftTable shift_table(const std::vector<int>& e, const std::optional<Monomial>& a, int extra_j = 0);
ShiftTable shift_table_with(const std::vector<int>& e, const std::optional<Monomial>& a, const ShiftFn& fn);
// single- or zero-monomial singularities; multi-monomial raises PathUnavailable
ShiftTable shift_table(const Singularity& s);

BSRootSet reduced_bs_roots(const ShiftTable& t);
BSRootSet reduced_bs_roots(const std::vector<int>& e, const std::optional<Monomial>& a);

}  // namespace swh
