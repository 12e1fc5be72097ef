#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "syllogic/models.hpp"
#include "syllogic/opposition.hpp"
#include "syllogic/semantics.hpp"

namespace syllogic {

using Json = nlohmann::ordered_json;

class ModelFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads any of the three model layouts:
///   analytic   {"domain": [...], "ext": {"S": [...], ...}}
///   synthetic  {"universe": [...], "is": {"u": ["P", "M"], ...}, "terms": [...]?}
///   structure  {"universe": [...], "isPrim": [["c","a"], ...], "denote": {"S": "a"}}
/// For synthetic models the optional "terms" array declares terms that no
/// individual instantiates.
Model modelFromJson(const Json& j);
Model modelFromText(std::string_view text);
Json modelToJson(const Model& m);

Json verdictToJson(const Verdict& v);
Json relationToJson(const OppositionRelation& r);
Json squareToJson(const SquareReport& s);

}  // namespace syllogic
