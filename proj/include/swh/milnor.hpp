#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swh/rational.hpp"
#include "swh/singularity.hpp"

namespace swh {

// Basis of C{x}/(x_i^{e_i-1}) is the box prod [0, e_i - 2]; never stored.
bool is_nonzero_in_milnor(const std::vector<int>& e, const Monomial& m);
uint64_t graded_dimension(const std::vector<int>& e, const Rational& alpha);
bool class_nonzero_in_grV(const Singularity& s, const Monomial& m);

// Visits the box in lexicographic order; stops early when fn returns false.
void for_each_basis_monomial(const std::vector<int>& e, const std::function<bool(const Monomial&)>& fn);

}  // namespace swh
