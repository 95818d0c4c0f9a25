#pragma once

#include <json.hpp>

#include "coxchar/sweep.hpp"
#include "coxchar/factorization.hpp"

namespace coxchar {

using nlohmann::json;

/*
 * JSON forms. Rationals serialize as decimal fraction strings ("p" or
 * "p/q"); CycloNumber as {"conductor": L, "coeffs": [...]}; both round-trip
 * bit-exactly. Reports keep a fixed field set so that identical runs dump
 * identical bytes.
 */

json to_json(const Rational& value);
Rational rational_from_json(const json& j);

json to_json(const CycloNumber& value);
CycloNumber cyclo_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const ResidueClasses& classes);

// {"vanishes", "classes", "mus", "sign"} with "sign" present iff factoring.
json to_json(const FactorizationResult& fact);

// Factorization fields plus "trials": [{"t", "lhs", "rhs", "ok"}].
json to_json(const VerificationReport& report);

json to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const json& j);

json to_json(const BlockDetResult& r);
json to_json(const CheckResult& r);

json to_json(const TrialConfig& config);
TrialConfig trial_config_from_json(const json& j);

json to_json(const SweepReport& report);
json to_json(const KostantReport& report);

}  // namespace coxchar
