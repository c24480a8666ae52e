#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vhs::cli {

/// Malformed or incomplete configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kConfigError = 2 };

struct HodgeSubject {
  std::vector<std::size_t> h;
  std::string form = "diagonal";
};

struct FixtureSubject {
  std::string kind;  ///< fermat, seeded, plane, degenerate-plane or file
  int n = 4;
  int d = 6;
  std::optional<std::uint64_t> seed;  ///< defaults to the run seed
  std::string file;
  bool with_plane = false;
};

/// One command with exactly one subject: Hodge numbers or a hypersurface fixture.
struct RunConfig {
  std::string command;
  std::string sub;
  std::optional<HodgeSubject> hodge;
  std::optional<FixtureSubject> fixture;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;  ///< per-command default when unset
  std::size_t budget = 5000;
  /// Per-command parameters from the [element], [nl] and [selftest] sections, keyed "section.key".
  std::map<std::string, std::string> params;
};

/// Parses the sectioned key/value config. Throws ConfigError on empty or malformed input.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Throws ConfigError unless the command is known and has exactly one matching subject.
void validate(const RunConfig& cfg);

struct RunResult {
  int exit_code = kPass;
  nlohmann::json report;
};

/// Runs one command. Config errors and budget overruns give exit code 2, failed checks give 1.
RunResult run(const RunConfig& cfg);

/// Human-readable table derived from a report.
std::string render_table(const nlohmann::json& report);

/// Serialized report: sorted keys, two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

/// Full command-line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vhs::cli
