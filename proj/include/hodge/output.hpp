#pragma once

#include <json.hpp>

#include "hodge/enumerate.hpp"

namespace hodge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const HodgeTuple& t);
HodgeTuple tuple_from_json(const Json& j);

Json to_json(const HodgeDescriptor& d);
HodgeDescriptor descriptor_from_json(const Json& j);

Json to_json(const ClassifiedTuple& ct);
ClassifiedTuple classified_from_json(const Json& j);

// Envelope for every CLI response.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::array();
  std::vector<std::string> notes;

  Json to_json() const;
  std::string to_text() const;  // aligned human-readable rendering
};

// Groups classification instances whose structural shape matches across
// ranks; presentation only, never used by tests for set comparisons.
std::vector<std::string> family_report(const std::vector<ClassifiedTuple>& tuples);

// Parses "(A1:1:1)+(B2:1,0:0,1)" or "A1:1:1"; parentheses optional.
std::vector<AlgebraFactor> parse_factor_specs(const std::string& text);

}  // namespace hodge
