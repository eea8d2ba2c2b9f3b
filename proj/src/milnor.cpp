#include "swh/milnor.hpp"

#include <algorithm>
#include <cmath>

#include "swh/errors.hpp"
#include "swh/kernels.hpp"
#include "swh/spectrum.hpp"

namespace swh {

bool is_nonzero_in_milnor(const std::vector<int>& e, const Monomial& m) {
  if (m.size() != e.size()) throw Error(ErrorKind::Validation, "monomial length does not match n");
  for (size_t i = 0; i < e.size(); ++i)
    if (m[i] < 0 || m[i] > e[i] - 2) return false;
  return true;
}

namespace {

// all partial sums of (nu_i + 1) * L/e_i over nu in the box restricted to [lo, hi)
std::vector<int64_t> half_sums(const std::vector<int>& e, size_t lo, size_t hi, int64_t L) {
  const auto& K = kernels::active();
  std::vector<int64_t> cur{0}, next;
  for (size_t i = lo; i < hi; ++i) {
    int64_t step = L / e[i];
    next.resize(cur.size() * (e[i] - 1));
    for (int j = 1; j < e[i]; ++j) K.broadcast_add(next.data() + (j - 1) * cur.size(), cur.data(), cur.size(), j * step);
    cur.swap(next);
  }
  return cur;
}

}  // namespace

uint64_t graded_dimension(const std::vector<int>& e, const Rational& alpha) {
  for (int x : e)
    if (x < 2) throw Error(ErrorKind::Validation, "exponent below 2");
  const int64_t L = lcm_checked(e);
  Rational t = alpha * Rational(L);
  if (!t.is_integer() || t.sign() <= 0) return 0;
  if (!t.num().fits_slong_p()) return 0;
  const int64_t target = t.num().get_si();

  // split so that both halves have comparable size
  double total = 0, run = 0;
  for (int x : e) total += std::log2(x - 1.0);
  size_t split = 0;
  while (split < e.size() && run + std::log2(e[split] - 1.0) <= total / 2) run += std::log2(e[split++] - 1.0);
  if (split == 0) split = 1;

  std::vector<int64_t> left = half_sums(e, 0, split, L);
  std::vector<int64_t> right = half_sums(e, split, e.size(), L);
  if (left.size() > right.size()) left.swap(right);
  std::sort(right.begin(), right.end());
  uint64_t count = 0;
  for (int64_t x : left) {
    auto [b, en] = std::equal_range(right.begin(), right.end(), target - x);
    count += static_cast<uint64_t>(en - b);
  }
  return count;
}

bool class_nonzero_in_grV(const Singularity& s, const Monomial& m) { return is_nonzero_in_milnor(s.exponents(), m); }

void for_each_basis_monomial(const std::vector<int>& e, const std::function<bool(const Monomial&)>& fn) {
  const size_t n = e.size();
  for (int x : e)
    if (x < 2) return;
  Monomial m(n, 0);
  while (true) {
    if (!fn(m)) return;
    size_t i = n;
    while (i > 0) {
      --i;
      if (++m[i] <= e[i] - 2) break;
      m[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace swh
