#pragma once

// Batch runs: a JSON run configuration in, a deterministic report out.

#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lenequiv/sampler.hpp"

namespace lenequiv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";

enum class Task { bracket, bracket_self, pairs, verify, trace_id, filling, sample_reps };
const char* to_string(Task t);
Task parse_task(const std::string& name);  // throws ConfigError

enum class Format { json, csv, text };
Format parse_format(const std::string& name);  // throws ConfigError

struct RunConfig {
  SurfaceSpec surface{0, 3, 0};
  std::map<std::string, std::string> words;
  Task task = Task::pairs;
  std::vector<std::uint64_t> seeds{0};
  double spread = 3.0;
  int word_bound = 6;
  int n_lo = 1;
  int n_hi = 10;
  double tol = 1e-9;
  std::string output_path;
  // Bound for simple-curve candidates in filling checks; unset skips them
  // in the pairs and verify tasks.
  std::optional<int> scc_word_bound;
  // Upper end of the non-conjugacy scan; 0 means n_hi.
  int threshold_n_max = 0;
  // Extra representations per seed, each a perturbation of the sampled one.
  int perturb_count = 0;
  double perturb_magnitude = 0.05;
  bool include_timing = false;
};

// Throws ConfigError on unknown keys, missing words, or out-of-range values.
RunConfig parse_config(const Json& j);
RunConfig load_config(const std::string& path);
Json config_to_json(const RunConfig& c);
void validate(const RunConfig& c);

struct Report {
  Json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text_lines;
  // 0 on success, kExitVerification when a check the task asserts fails.
  int status = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitSampler = 5;

// Maps a failure onto the CLI exit code of its category.
int exit_code_for(const std::exception& e);

// Runs the configured task. Library errors propagate to the caller.
Report run(const RunConfig& config);

// Canonical bytes for the report in the requested format.
std::string emit(const Report& report, Format format);

// Throws Error when the path cannot be written.
void write_file(const std::string& path, const std::string& bytes);

// Rounds to 9 significant digits, the precision every float is reported at.
double round_sig(double x, int digits = 9);

std::vector<Representation> sample_representations(const RunConfig& config);

}  // namespace lenequiv
