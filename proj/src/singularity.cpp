#include "swh/singularity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "swh/errors.hpp"

namespace swh {

Singularity::Singularity(std::vector<int> exponents, std::vector<Term> perturbation,
                         std::vector<Rational> base_coefficients)
    : e_(std::move(exponents)), c_(std::move(base_coefficients)), pert_(std::move(perturbation)) {
  if (c_.empty()) c_.assign(e_.size(), Rational(1));
}

void Singularity::check_dim(const Monomial& m) const {
  if (m.size() != e_.size())
    throw Error(ErrorKind::Validation, "monomial " + monomial_str(m) + " has " +
                                           std::to_string(m.size()) + " entries, expected " +
                                           std::to_string(e_.size()));
}

std::vector<Rational> Singularity::weights() const {
  std::vector<Rational> w;
  for (int e : e_) w.emplace_back(1, e);
  return w;
}

Rational Singularity::min_exponent() const {
  Rational s;
  for (int e : e_) s += Rational(1, e);
  return s;
}

Rational Singularity::unshifted_degree(const Monomial& m) const {
  check_dim(m);
  Rational s;
  for (size_t i = 0; i < m.size(); ++i) s += Rational(m[i], e_[i]);
  return s;
}

Rational Singularity::shifted_degree(const Monomial& m) const {
  check_dim(m);
  Rational s;
  for (size_t i = 0; i < m.size(); ++i) s += Rational(m[i] + 1, e_[i]);
  return s;
}

std::optional<Rational> Singularity::rho() const {
  std::optional<Rational> best;
  for (const auto& t : pert_) {
    Rational d = unshifted_degree(t.m);
    if (!best || d < *best) best = d;
  }
  return best;
}

Rational Singularity::rho_or_throw() const {
  auto r = rho();
  if (!r) throw Error(ErrorKind::NotApplicable, "weighted homogeneous, rho undefined");
  return *r;
}

uint64_t Singularity::milnor_number() const {
  uint64_t mu = 1;
  for (int e : e_) {
    if (e < 2) throw Error(ErrorKind::Validation, "exponent below 2");
    if (__builtin_mul_overflow(mu, static_cast<uint64_t>(e - 1), &mu))
      throw Error(ErrorKind::ResourceExhausted, "Milnor number overflows 64 bits");
  }
  return mu;
}

ValidationReport Singularity::validate() const {
  ValidationReport rep;
  auto issue = [&](std::string what, std::optional<Monomial> t = std::nullopt) {
    rep.valid = false;
    rep.issues.push_back({std::move(what), std::move(t)});
  };
  if (e_.size() < 2) issue("need at least 2 variables, got " + std::to_string(e_.size()));
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < 2) issue("exponent e" + std::to_string(i + 1) + " = " + std::to_string(e_[i]) + " < 2");
  if (c_.size() != e_.size()) issue("base coefficient count does not match n");
  for (const auto& c : c_)
    if (c.is_zero()) issue("zero base coefficient");
  if (!rep.valid) return rep;

  std::set<Monomial> seen;
  for (const auto& t : pert_) {
    if (t.m.size() != e_.size()) {
      issue("perturbation monomial has wrong length", t.m);
      continue;
    }
    if (std::any_of(t.m.begin(), t.m.end(), [](int v) { return v < 0; })) {
      issue("negative exponent", t.m);
      continue;
    }
    if (t.c.is_zero()) issue("zero perturbation coefficient", t.m);
    Rational d = unshifted_degree(t.m);
    if (d <= Rational(1)) issue("weighted degree " + d.str() + " <= 1", t.m);
    if (!seen.insert(t.m).second) issue("duplicate perturbation monomial", t.m);
  }
  rep.weighted_homogeneous = pert_.empty();
  return rep;
}

void Singularity::require_valid() const {
  auto rep = validate();
  if (rep.valid) return;
  const auto& is = rep.issues.front();
  std::string msg = is.what;
  if (is.term) msg += " at " + monomial_str(*is.term);
  throw Error(ErrorKind::Validation, msg);
}

Singularity Singularity::principal_part() const { return Singularity(e_, {}, c_); }

Singularity Singularity::with_perturbation(std::vector<Term> pert) const {
  return Singularity(e_, std::move(pert), c_);
}

std::string Singularity::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << " + ";
    if (c_[i] != Rational(1)) os << "(" << c_[i] << ")";
    os << "x" << i + 1 << "^" << e_[i];
  }
  for (const auto& t : pert_) {
    os << " + ";
    if (t.c != Rational(1)) os << "(" << t.c << ")";
    os << "x^" << monomial_str(t.m);
  }
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

}  // namespace swh
