#pragma once

#include <json.hpp>

#include "swh/engine.hpp"
#include "swh/errors.hpp"
#include "swh/length.hpp"
#include "swh/shifts.hpp"
#include "swh/singularity.hpp"
#include "swh/spectrum.hpp"
#include "swh/verify.hpp"

namespace swh {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& j);
json to_json(const Rational& r);
Monomial monomial_from_json(const json& j);

// {"exponents": [...], "coefficients": ["p/q", ...], "perturbation": [{"m": [...], "c": "p/q"}]}
Singularity singularity_from_json(const json& j);
json singularity_to_json(const Singularity& s);

json spectrum_to_json(const SpectrumSeries& sp);
json shifts_to_json(const ShiftTable& t, const BSRootSet& roots, const char* source);
json length_to_json(const LengthReport& r);
json components_to_json(const std::vector<Component>& comps);
json verify_to_json(const VerifyReport& r);

// Dispatches one job object; throws swh::Error on failure.
json run_job(const json& job);
json error_to_json(const std::string& kind, const std::string& message);
int exit_code_for(ErrorKind k);

}  // namespace swh
