#pragma once

#include "coinv/characters.hpp"
#include "coinv/graded.hpp"
#include "coinv/integer.hpp"
#include "coinv/kronecker.hpp"
#include "coinv/springer.hpp"
#include "coinv/verify.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace coinv {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit a signed 64-bit word are JSON numbers; larger ones
/// are decimal strings. Both forms are accepted on input.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Thrown when a cache or report document does not match its schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const CharacterTable& table);
Json to_json(const GradedMultiplicityTable& table);
Json to_json(const KroneckerTable& table);

CharacterTable character_table_from_json(const Json& j);
GradedMultiplicityTable graded_table_from_json(const Json& j);
KroneckerTable kronecker_table_from_json(const Json& j);

Json report_payload(const LogConcavityReport& report);
Json report_payload(const UnimodalityReport& report);
Json report_payload(const LowDegreeReport& report);
Json springer_payload(const std::vector<SpringerCounterexample>& found, int n_max);

/// Envelope written by every CLI report. Only `provenance` may carry
/// run-dependent data (timestamps); `payload` is a pure function of the
/// inputs.
struct ReportDocument {
    int schema_version = kSchemaVersion;
    std::string command;
    Json parameters = Json::object();
    Json provenance = Json::object();
    Json payload = Json::object();

    Json to_json() const;
    std::string serialize() const;
    static ReportDocument parse(std::string_view text);
};

} // namespace coinv
