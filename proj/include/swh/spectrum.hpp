#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "swh/rational.hpp"

namespace swh {

inline constexpr uint64_t kDefaultMuCap = 10'000'000;
inline constexpr size_t kDefaultDenseCap = size_t{1} << 28;

struct SpectrumSeries {
  std::map<Rational, uint64_t> entries;

  uint64_t total() const;
  uint64_t multiplicity(const Rational& alpha) const;
  bool empty() const { return entries.empty(); }
  const Rational& min() const { return entries.begin()->first; }
  const Rational& max() const { return entries.rbegin()->first; }
  friend bool operator==(const SpectrumSeries&, const SpectrumSeries&) = default;
};

// Multiplicities on the grid k/Q, k = 0..n*Q.
struct DenseSpectrum {
  int64_t Q = 1;
  int n = 0;
  std::vector<int64_t> counts;

  uint64_t total() const;
  uint64_t at(const Rational& alpha) const;
  SpectrumSeries to_series() const;
};

// Direct enumeration of {sum nu_i/e_i : nu in prod [1, e_i - 1]}; refuses when mu > mu_cap.
SpectrumSeries spectrum_bp(const std::vector<int>& e, uint64_t mu_cap = kDefaultMuCap);

// Expansion of prod (t^{w_i} - t)/(1 - t^{w_i}) over the common denominator of the weights.
DenseSpectrum spectrum_counts(const std::vector<Rational>& w, size_t dense_cap = kDefaultDenseCap);
SpectrumSeries spectrum_weighted(const std::vector<Rational>& w, size_t dense_cap = kDefaultDenseCap);

uint64_t multiplicity(const SpectrumSeries& sp, const Rational& alpha);
uint64_t geometric_genus(const SpectrumSeries& sp);
uint64_t reduced_genus(const SpectrumSeries& sp);
// alpha mod 1 -> total multiplicity
std::map<Rational, uint64_t> eigenvalue_classes(const SpectrumSeries& sp);

// lcm of exponents with overflow check
int64_t lcm_checked(const std::vector<int>& e);

}  // namespace swh
