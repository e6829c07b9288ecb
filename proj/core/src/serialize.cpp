#include "solenoid/serialize.hpp"

#include <limits>

#include "solenoid/error.hpp"

namespace solenoid {

nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

nlohmann::json to_json(const Angle& a) { return a.to_string(); }

nlohmann::json to_json(const TruncatedPoint& x) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& a : x.coords()) coords.push_back(to_json(a));
  return {{"seq", x.seq().to_string()}, {"coords", std::move(coords)}};
}

nlohmann::json to_json(const FiberReport& report) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : report.representatives) reps.push_back(to_json(r));
  return {
      {"k", integer_json(report.k)},
      {"degree", integer_json(report.degree)},
      {"stabilization_level", report.stabilization_level},
      {"representatives", std::move(reps)},
  };
}

std::string_view kind_name(PeriodicClass::Kind kind) noexcept {
  switch (kind) {
    case PeriodicClass::Kind::AllPoints: return "all-points";
    case PeriodicClass::Kind::OnlyIdentity: return "only-identity";
    case PeriodicClass::Kind::Dense: return "dense";
  }
  return "unknown";
}

nlohmann::json to_json(const PeriodicClass& cls) {
  nlohmann::json j = {{"kind", kind_name(cls.kind)}, {"primes", cls.primes}};
  j["proposition"] = cls.proposition == 0 ? nlohmann::json(nullptr) : nlohmann::json(cls.proposition);
  return j;
}

nlohmann::json to_json(const PeriodicWitness& w) {
  return {
      {"point", to_json(w.point)},
      {"k", integer_json(w.k)},
      {"q", w.q},
      {"m", w.m},
      {"claimed_period", integer_json(w.claimed_period)},
      {"least_period", integer_json(w.least_period)},
      {"arc_level", w.arc_level},
      {"arc", w.arc.to_string()},
      {"construction_level", w.construction_level},
  };
}

nlohmann::json to_json(const OrbitRecord& record) {
  if (!record.period) return {{"found", false}, {"pre_period", nullptr}, {"period", nullptr}};
  return {{"found", true}, {"pre_period", record.pre_period}, {"period", *record.period}};
}

TruncatedPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("seq") || !j.contains("coords") || !j["seq"].is_string() ||
      !j["coords"].is_array()) {
    throw ParseError(ErrorKind::SyntaxError, 0,
                     "parse error at position 0: expected {\"seq\": string, \"coords\": [...]}");
  }
  PrimeSeqSpec seq = PrimeSeqSpec::parse(j["seq"].get<std::string>());
  std::vector<Angle> coords;
  for (const auto& c : j["coords"]) {
    if (!c.is_string()) {
      throw ParseError(ErrorKind::SyntaxError, 0,
                       "parse error at position 0: coordinates must be \"num/den\" strings");
    }
    coords.push_back(Angle::parse(c.get<std::string>()));
  }
  return TruncatedPoint(std::move(seq), std::move(coords));
}

}  // namespace solenoid
