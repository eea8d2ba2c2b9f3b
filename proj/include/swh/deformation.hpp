#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swh/rational.hpp"
#include "swh/shifts.hpp"
#include "swh/singularity.hpp"

namespace swh {

struct ConditionIResult {
  bool holds = false;
  Rational bound;   // alpha~_f + rho_f - 1
  Rational margin;  // bound - alpha
};

enum class WitnessKind { ConditionI, ConditionII, UnitJump };
const char* witness_kind_name(WitnessKind k);

struct ConditionWitness {
  WitnessKind kind = WitnessKind::ConditionII;
  Rational alpha;
  int r = 0;
  Monomial h;
  Monomial image;  // f_rho^r h
  std::string relation;
};

ConditionIResult check_condition_i(const Singularity& s, const Rational& alpha);
// first h (lexicographic) with alpha~(h) = alpha - r(rho - 1) and f_rho^r h nonzero in the Milnor algebra
std::optional<ConditionWitness> check_condition_ii(const Singularity& s, const Rational& alpha, int r);

// greedy fill of total degree 2d-n (condition ii) and 2d-n+1 (condition i), exponents <= d-2
std::pair<Monomial, Monomial> fermat_witnesses(int n, int d);

struct CaveatEntry {
  XiPoint xi;
  Rational alpha;
  int engine_r = 0;
  std::map<std::string, int> per_term_r;  // monomial -> combinatorial shift of that term alone
};

struct CaveatReport {
  bool discrepancy = false;
  std::vector<CaveatEntry> entries;  // only points where some prediction differs from the engine
  std::string message;
};

// per-term combinatorial shifts against the engine on the full multi-monomial perturbation
CaveatReport multi_monomial_caveat(const Singularity& s);

}  // namespace swh
