#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swh/rational.hpp"

namespace swh {

using Monomial = std::vector<int>;

struct Term {
  Monomial m;
  Rational c;
};

struct ValidationIssue {
  std::string what;
  std::optional<Monomial> term;
};

struct ValidationReport {
  bool valid = true;
  bool weighted_homogeneous = false;
  std::vector<ValidationIssue> issues;
};

// f = sum c_i x_i^{e_i} + sum a_m x^m, all perturbation monomials of degree > 1.
class Singularity {
 public:
  Singularity() = default;
  explicit Singularity(std::vector<int> exponents, std::vector<Term> perturbation = {},
                       std::vector<Rational> base_coefficients = {});

  size_t n() const { return e_.size(); }
  const std::vector<int>& exponents() const { return e_; }
  const std::vector<Rational>& base_coefficients() const { return c_; }
  const std::vector<Term>& perturbation() const { return pert_; }
  bool weighted_homogeneous() const { return pert_.empty(); }

  std::vector<Rational> weights() const;
  // alpha~_f = sum 1/e_i
  Rational min_exponent() const;
  Rational unshifted_degree(const Monomial& m) const;
  Rational shifted_degree(const Monomial& m) const;
  std::optional<Rational> rho() const;
  // throws NotApplicable for an empty perturbation
  Rational rho_or_throw() const;
  uint64_t milnor_number() const;

  ValidationReport validate() const;
  // throws Error(Validation) listing the first issue
  void require_valid() const;

  Singularity principal_part() const;
  Singularity with_perturbation(std::vector<Term> pert) const;

  std::string describe() const;

 private:
  void check_dim(const Monomial& m) const;

  std::vector<int> e_;
  std::vector<Rational> c_;
  std::vector<Term> pert_;
};

std::string monomial_str(const Monomial& m);

}  // namespace swh
