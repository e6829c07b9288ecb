#pragma once

// JSON forms of the library's values, as printed by the CLI with --json.

#include <nlohmann/json.hpp>

#include "solenoid/covering.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/padic.hpp"

namespace solenoid {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json integer_json(const Integer& v);

nlohmann::json to_json(const Angle& a);
nlohmann::json to_json(const TruncatedPoint& x);
nlohmann::json to_json(const FiberReport& report);
nlohmann::json to_json(const PeriodicClass& cls);
nlohmann::json to_json(const PeriodicWitness& w);
nlohmann::json to_json(const OrbitRecord& record);

/// Inverse of to_json(TruncatedPoint); validates compatibility. Throws
/// ParseError for malformed text and Error(Incompatible) for bad coordinates.
TruncatedPoint point_from_json(const nlohmann::json& j);

std::string_view kind_name(PeriodicClass::Kind kind) noexcept;

}  // namespace solenoid
