#pragma once

#include <string>

#include "hecke/expr.hpp"
#include "hecke/hypergeometric.hpp"
#include "hecke/power_series.hpp"
#include "hecke/spectral.hpp"
#include "hecke/transform.hpp"
#include "hecke/verify.hpp"
#include "json.hpp"

namespace hecke {

// ADL hooks for nlohmann::json. Scalars serialize as their canonical text
// form (the same syntax parse_scalar accepts); series coefficients as
// ["re","im"] string pairs. Objects use sorted keys, so equal values always
// dump to identical bytes.

void to_json(nlohmann::json& j, const GaussianRational& x);
void to_json(nlohmann::json& j, const PowerSeries& s);
void to_json(nlohmann::json& j, const HypergeometricTerm& t);
void to_json(nlohmann::json& j, const TransformReport& r);
void to_json(nlohmann::json& j, const GammaCounts& g);
void to_json(nlohmann::json& j, const EigenReport& r);
void to_json(nlohmann::json& j, const EigenClass& c);
void to_json(nlohmann::json& j, const CmReport& r);
void to_json(nlohmann::json& j, const Expr& e);
void to_json(nlohmann::json& j, const TrialFailure& f);
void to_json(nlohmann::json& j, const VerificationRun& run);

// Two-space indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace hecke
