#pragma once

// Command layer behind the powershift CLI. Each command returns an envelope
// whose payload holds every integer as an exact decimal string, plus the
// process exit code the CLI should use.

#include "powershift/arith.hpp"
#include "powershift/power_search.hpp"
#include "powershift/syndetic.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace powershift {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct OutputEnvelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string version = kVersion;
  Json payload = Json::object();
  std::vector<std::string> warnings;
  std::optional<std::string> error;

  bool operator==(const OutputEnvelope&) const = default;
};

Json to_json(const OutputEnvelope& env);
OutputEnvelope envelope_from_json(const Json& j);

/// Pretty-printed JSON, newline terminated.
std::string render_json(const OutputEnvelope& env);
OutputEnvelope parse_envelope(const std::string& text);

/// Human-readable rendering: scalar fields as "key: value", arrays of
/// records as tab-separated tables.
std::string render_text(const OutputEnvelope& env);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain_error = 1;
inline constexpr int usage_error = 2;
}  // namespace exit_code

struct CommandResult {
  OutputEnvelope envelope;
  int exit_code = exit_code::ok;
};

CommandResult cmd_pell(const Integer& d, std::size_t count);
CommandResult cmd_family(const Integer& a, const Integer& k, std::size_t count);
CommandResult cmd_squares(const Integer& k, const std::optional<Integer>& oracle_limit);

/// Description of where a syndetic sample came from, for the metadata.
struct SampleSource {
  std::string kind;  // "file" or a generator name
  std::vector<std::pair<std::string, std::string>> parameters;
};

CommandResult cmd_syndetic(const SyndeticSample& sample, const SampleSource& source,
                           const Integer& k, std::size_t tries);
CommandResult cmd_search(const PowerEquationQuery& q, SearchOptions options = {});
CommandResult cmd_survey(const SurveyGrid& grid, SearchOptions options = {});

/// Failure envelope for errors raised before a command could run.
CommandResult command_error(const std::string& command,
                            std::vector<std::pair<std::string, std::string>> parameters,
                            const std::string& message, int code);

/// "lo..hi" or a single value.
IntegerRange parse_range(const std::string& text);

}  // namespace powershift
