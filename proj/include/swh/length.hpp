#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swh/rational.hpp"
#include "swh/shifts.hpp"
#include "swh/singularity.hpp"
#include "swh/spectrum.hpp"

namespace swh {

enum class NuTildePath { WeightedHomogeneous, PrincipalPart, ShiftTable, Engine, Trivial };
const char* path_name(NuTildePath p);

struct LengthOptions {
  bool allow_engine = true;
  std::optional<uint64_t> branches_override;
};

struct LengthReport {
  Rational alpha;
  uint64_t nu_tilde = 0;
  uint64_t branches = 0;
  int delta_tilde = 0;
  uint64_t length = 0;
  NuTildePath path = NuTildePath::Trivial;
};

uint64_t branches(const Singularity& s, std::optional<uint64_t> override_value = std::nullopt);

// sum_{j >= 0} n_{alpha - j}
uint64_t nu_tilde_wh(const SpectrumSeries& sp, const Rational& alpha);
// same count without materializing the spectrum
uint64_t nu_tilde_wh(const std::vector<int>& e, const Rational& alpha);
// #{nu : alpha~(nu) - r(nu) <= alpha, alpha - alpha~(nu) integral}
uint64_t nu_tilde_monomial(const ShiftTable& st, const Rational& alpha);

LengthReport length(const Singularity& s, const Rational& alpha, const LengthOptions& opt = {});
int64_t quotient_length(const Singularity& s, const Rational& alpha, const LengthOptions& opt = {});
uint64_t length_beta_k(const Singularity& s, const Rational& beta, long long k, const LengthOptions& opt = {});

// lengths at every alpha in [lo, hi] congruent mod 1 to a spectral number or to 0
std::vector<LengthReport> length_table(const Singularity& s, const Rational& lo, const Rational& hi,
                                       const LengthOptions& opt = {});

}  // namespace swh
