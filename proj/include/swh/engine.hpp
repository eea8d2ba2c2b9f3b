#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swh/rational.hpp"
#include "swh/shifts.hpp"
#include "swh/singularity.hpp"

namespace swh {

// coefficient * dt^k [x^nu dx]; V-degree alpha~(nu) - k
struct GMTerm {
  Monomial nu;
  int k = 0;
  Rational coeff;
  friend bool operator==(const GMTerm&, const GMTerm&) = default;
};

struct GMElement {
  std::vector<GMTerm> terms;  // sorted by (degree, nu, k) once normalized
  friend bool operator==(const GMElement&, const GMElement&) = default;
};

// Gr_V part of one asymptotic component
struct Component {
  Rational alpha;
  std::vector<GMTerm> terms;
  friend bool operator==(const Component&, const Component&) = default;
};

struct ExpansionReport {
  Monomial input;
  Rational input_degree;
  std::optional<Rational> leading_degree;
  std::optional<Rational> measured_shift;
  std::optional<Rational> leading_coefficient;
  std::vector<Component> components;
};

struct EngineOptions {
  // reduce on the last divisible variable instead of the first; output must not change
  bool reduce_last_index = false;
};

class GaussManinEngine {
 public:
  GaussManinEngine(const Singularity& s, const Rational& cutoff, EngineOptions opt = {});
  ~GaussManinEngine();
  GaussManinEngine(const GaussManinEngine&) = delete;
  GaussManinEngine& operator=(const GaussManinEngine&) = delete;

  const Singularity& singularity() const;
  const Rational& cutoff() const;

  GMElement reduce(const GMElement& x);
  GMElement reduce_monomial(const Monomial& mu, int k = 0);
  // x must be in normal form (reduce() output)
  std::vector<Component> expand(const GMElement& x);
  ExpansionReport expand_monomial(const Monomial& h);

  // largest j with a nonzero nu-coordinate in the saturation at alpha~(nu) - j; nu 0-based in the box
  int expansion_shift(const Monomial& nu);
  // births of the saturated lattice: degree -> number of new dimensions
  const std::map<Rational, uint64_t>& births();
  std::set<Rational> root_exponents();
  uint64_t nu_tilde(const Rational& alpha);

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

Rational max_shifted_degree(const std::vector<int>& e);

ExpansionReport expand(const Singularity& s, const Monomial& h, const Rational& cutoff);
int expansion_shift(const Singularity& s, const Monomial& nu);
// engine-measured shift table in the same 1-based layout as the combinatorial one
ShiftTable engine_shift_table(const Singularity& s, EngineOptions opt = {});
// root exponents of the reduced Bernstein-Sato polynomial as seen by the engine
BSRootSet engine_bs_roots(const Singularity& s);

struct CancelResult {
  std::optional<Rational> c;  // empty: no dependence or inconsistent
  int degree_bound = 0;
  std::string note;
};

// f = base + c * x^symbolic; the value of c for which the alpha=target component of [x^h dx] vanishes
CancelResult find_cancelling_coefficient(const Singularity& base, const Monomial& symbolic, const Monomial& h,
                                         const Rational& target);

// Gr part of [x^h dx] at degree alpha (empty vector when it vanishes)
std::vector<GMTerm> component_at(const Singularity& s, const Monomial& h, const Rational& alpha);

}  // namespace swh
