#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlag/lagrangian.hpp"
#include "hlag/search.hpp"

namespace CLI {
class App;
}

namespace hlag::cli {

enum class OutputFormat { human, json };

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUncertified = 2,
  kCapped = 3,
};

/// Settings common to all subcommands. Every field can also be set through an
/// environment variable named HLAG_<FIELD> (HLAG_SEED, HLAG_MAX_NODES, ...);
/// flags take precedence.
struct RunConfig {
  std::uint64_t seed = 0;
  int restarts = 64;
  double kkt_tol = 1e-8;
  double value_tol = 1e-9;
  std::optional<std::uint64_t> max_nodes;  // unset: unbounded
  std::optional<double> max_seconds;       // unset: unbounded
  unsigned threads = 1;
  OutputFormat format = OutputFormat::human;

  /// Throws ValidationError unless every tolerance, cap and count is positive.
  void validate() const;
  MaximizeOptions maximize_options() const;
  DensityOptions density_options() const;
  EnumerationOptions enumeration_options(bool down_sets) const;
};

nlohmann::json to_json(const RunConfig& config);

/// Registers the RunConfig flags (with their environment fallbacks) on `app`.
void add_run_options(CLI::App& app, RunConfig& config);

/// Runs `command`, mapping library errors to kInputError with a diagnostic on `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

/// A pattern argument: a named graph (P3, F5, K6-, ...) or a path to a graph file.
Hypergraph resolve_pattern(const std::string& pattern, int r = 3);

int cmd_lambda(const std::filesystem::path& input, const RunConfig& config, std::ostream& out);

int cmd_check(const std::filesystem::path& input, const std::vector<std::string>& patterns, const RunConfig& config,
              std::ostream& out);

struct CompressRequest {
  std::optional<std::pair<Vertex, Vertex>> pair;  // single compression of j into i
  std::optional<int> loop_path;                   // t for the left-compression loop
  std::optional<std::filesystem::path> output;
};

int cmd_compress(const std::filesystem::path& input, const CompressRequest& request, const RunConfig& config,
                 std::ostream& out);

int cmd_extend(const std::filesystem::path& input, const std::optional<std::filesystem::path>& output,
               const RunConfig& config, std::ostream& out);

/// kind is one of K, K-, P, T; params are (t r), (t r), (t), (m r n).
Hypergraph construct(const std::string& kind, const std::vector<long long>& params);

int cmd_construct(const std::string& kind, const std::vector<long long>& params,
                  const std::optional<std::filesystem::path>& output, const RunConfig& config, std::ostream& out);

struct TuranRequest {
  Vertex n = 0;
  std::vector<std::string> patterns;
  std::optional<std::string> extension_of;  // forbid the extension of this pattern too
  TuranStrategy strategy = TuranStrategy::branch_and_bound;
};

int cmd_turan(const TuranRequest& request, const RunConfig& config, std::ostream& out);

struct DensityRequest {
  std::string forbidden;
  Vertex n = 0;
  DensityMode mode = DensityMode::left_compressed;
  std::optional<std::filesystem::path> checkpoint;  // written when the run is capped
  std::optional<std::filesystem::path> resume;
};

int cmd_density(const DensityRequest& request, const RunConfig& config, std::ostream& out);

int cmd_verify(const RunConfig& config, const std::vector<std::string>& only, std::ostream& out);

}  // namespace hlag::cli
