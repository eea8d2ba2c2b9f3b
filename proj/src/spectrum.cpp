#include "swh/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "swh/errors.hpp"
#include "swh/kernels.hpp"

namespace swh {

uint64_t SpectrumSeries::total() const {
  uint64_t t = 0;
  for (const auto& [a, m] : entries) t += m;
  return t;
}

uint64_t SpectrumSeries::multiplicity(const Rational& alpha) const {
  auto it = entries.find(alpha);
  return it == entries.end() ? 0 : it->second;
}

uint64_t DenseSpectrum::total() const {
  uint64_t t = 0;
  for (int64_t c : counts) t += static_cast<uint64_t>(c);
  return t;
}

uint64_t DenseSpectrum::at(const Rational& alpha) const {
  Rational k = alpha * Rational(Q);
  if (!k.is_integer() || k.sign() < 0) return 0;
  mpz_class z = k.num();
  if (!z.fits_slong_p()) return 0;
  long idx = z.get_si();
  if (idx >= static_cast<long>(counts.size())) return 0;
  return static_cast<uint64_t>(counts[idx]);
}

SpectrumSeries DenseSpectrum::to_series() const {
  SpectrumSeries sp;
  for (size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) sp.entries.emplace_hint(sp.entries.end(), Rational(static_cast<long long>(k), Q),
                                           static_cast<uint64_t>(counts[k]));
  return sp;
}

int64_t lcm_checked(const std::vector<int>& e) {
  int64_t L = 1;
  for (int x : e) {
    int64_t g = std::gcd(L, static_cast<int64_t>(x));
    if (__builtin_mul_overflow(L / g, static_cast<int64_t>(x), &L))
      throw Error(ErrorKind::ResourceExhausted, "lcm of exponents overflows 64 bits");
  }
  return L;
}

SpectrumSeries spectrum_bp(const std::vector<int>& e, uint64_t mu_cap) {
  uint64_t mu = 1;
  for (int x : e) {
    if (x < 2) throw Error(ErrorKind::Validation, "exponent below 2");
    if (__builtin_mul_overflow(mu, static_cast<uint64_t>(x - 1), &mu) || mu > mu_cap)
      throw Error(ErrorKind::ResourceExhausted,
                  "Milnor number exceeds the enumeration cap " + std::to_string(mu_cap));
  }
  const int64_t L = lcm_checked(e);
  const auto& K = kernels::active();
  std::vector<int64_t> cur{0}, next;
  cur.reserve(mu);
  next.reserve(mu);
  for (int x : e) {
    int64_t step = L / x;
    next.resize(cur.size() * (x - 1));
    for (int j = 1; j < x; ++j) K.broadcast_add(next.data() + (j - 1) * cur.size(), cur.data(), cur.size(), j * step);
    cur.swap(next);
  }
  std::sort(cur.begin(), cur.end());
  SpectrumSeries sp;
  for (size_t i = 0; i < cur.size();) {
    size_t j = i;
    while (j < cur.size() && cur[j] == cur[i]) ++j;
    sp.entries.emplace_hint(sp.entries.end(), Rational(cur[i], L), j - i);
    i = j;
  }
  return sp;
}

DenseSpectrum spectrum_counts(const std::vector<Rational>& w, size_t dense_cap) {
  if (w.empty()) throw Error(ErrorKind::Validation, "empty weight vector");
  int64_t Q = 1;
  for (const auto& x : w) {
    if (x.sign() <= 0 || x >= Rational(1)) throw Error(ErrorKind::Validation, "weight " + x.str() + " not in (0,1)");
    if (!x.den().fits_slong_p()) throw Error(ErrorKind::ResourceExhausted, "weight denominator too large");
    int64_t q = x.den().get_si();
    int64_t g = std::gcd(Q, q);
    if (__builtin_mul_overflow(Q / g, q, &Q)) throw Error(ErrorKind::ResourceExhausted, "common denominator overflows");
  }
  const int n = static_cast<int>(w.size());
  int64_t D;
  if (__builtin_mul_overflow(Q, static_cast<int64_t>(n), &D) || static_cast<uint64_t>(D) + 1 > dense_cap)
    throw Error(ErrorKind::ResourceExhausted, "dense spectrum grid exceeds cap");
  const size_t N = static_cast<size_t>(D) + 1;
  const auto& K = kernels::active();

  std::vector<int64_t> a(N, 0), b(N, 0);
  a[0] = 1;
  int64_t S = 0;
  for (const auto& x : w) {
    int64_t s = (x * Rational(Q)).num().get_si();
    S += s;
    std::fill(b.begin(), b.end(), 0);
    // times (t^s - t^Q)
    K.add(b.data() + s, a.data(), N - s);
    K.sub(b.data() + Q, a.data(), N - Q);
    // divided by (1 - t^s) as a power series
    K.stride_accumulate(b.data(), N, static_cast<size_t>(s));
    a.swap(b);
  }
  // The quotient is a polynomial iff the series vanishes on (D - S, D].
  for (int64_t k = D - S + 1; k <= D; ++k)
    if (a[k] != 0) throw Error(ErrorKind::Validation, "not the weight vector of an isolated singularity");
  for (int64_t k = 0; k <= D; ++k)
    if (a[k] < 0) throw Error(ErrorKind::Validation, "not the weight vector of an isolated singularity");

  DenseSpectrum ds;
  ds.Q = Q;
  ds.n = n;
  ds.counts = std::move(a);
  return ds;
}

SpectrumSeries spectrum_weighted(const std::vector<Rational>& w, size_t dense_cap) {
  return spectrum_counts(w, dense_cap).to_series();
}

uint64_t multiplicity(const SpectrumSeries& sp, const Rational& alpha) { return sp.multiplicity(alpha); }

uint64_t geometric_genus(const SpectrumSeries& sp) {
  uint64_t t = 0;
  for (const auto& [a, m] : sp.entries) {
    if (a > Rational(1)) break;
    t += m;
  }
  return t;
}

uint64_t reduced_genus(const SpectrumSeries& sp) { return sp.multiplicity(Rational(1)); }

std::map<Rational, uint64_t> eigenvalue_classes(const SpectrumSeries& sp) {
  std::map<Rational, uint64_t> out;
  for (const auto& [a, m] : sp.entries) out[a.frac()] += m;
  return out;
}

}  // namespace swh
