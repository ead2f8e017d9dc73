#include <ostream>

#include "CLI11.hpp"

#include "hlag/cli.hpp"
#include "hlag/error.hpp"

namespace hlag::cli {

void RunConfig::validate() const {
  if (restarts < 1) throw ValidationError("restarts must be positive");
  if (!(kkt_tol > 0.0)) throw ValidationError("kkt tolerance must be positive");
  if (!(value_tol > 0.0)) throw ValidationError("value tolerance must be positive");
  if (max_nodes && *max_nodes == 0) throw ValidationError("max nodes must be positive");
  if (max_seconds && !(*max_seconds > 0.0)) throw ValidationError("max seconds must be positive");
  if (threads < 1) throw ValidationError("thread count must be positive");
}

MaximizeOptions RunConfig::maximize_options() const {
  MaximizeOptions m;
  m.restarts = restarts;
  m.kkt_tol = kkt_tol;
  m.seed = seed;
  return m;
}

DensityOptions RunConfig::density_options() const { return {maximize_options(), value_tol}; }

EnumerationOptions RunConfig::enumeration_options(bool down_sets) const {
  EnumerationOptions e;
  e.down_sets = down_sets;
  e.threads = threads;
  e.max_nodes = max_nodes.value_or(0);
  e.max_seconds = max_seconds.value_or(0.0);
  // Enough units for the workers to share; serial runs keep a single unit.
  e.shard_depth = threads > 1 ? 8 : 0;
  return e;
}

nlohmann::json to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"restarts", c.restarts},
          {"kkt_tol", c.kkt_tol},
          {"value_tol", c.value_tol},
          {"max_nodes", c.max_nodes ? nlohmann::json(*c.max_nodes) : nlohmann::json(nullptr)},
          {"max_seconds", c.max_seconds ? nlohmann::json(*c.max_seconds) : nlohmann::json(nullptr)},
          {"threads", c.threads},
          {"format", c.format == OutputFormat::json ? "json" : "human"}};
}

void add_run_options(CLI::App& app, RunConfig& config) {
  app.add_option("--seed", config.seed, "random seed for optimizer restarts and samplers")
      ->envname("HLAG_SEED")
      ->capture_default_str();
  app.add_option("--restarts", config.restarts, "optimizer restarts")->envname("HLAG_RESTARTS")->capture_default_str();
  app.add_option("--kkt-tol", config.kkt_tol, "KKT residual tolerance")->envname("HLAG_KKT_TOL")->capture_default_str();
  app.add_option("--value-tol", config.value_tol, "tolerance for comparing Lagrangian values")
      ->envname("HLAG_VALUE_TOL")
      ->capture_default_str();
  app.add_option_function<std::uint64_t>(
         "--max-nodes", [&config](const std::uint64_t& v) { config.max_nodes = v; }, "search node cap")
      ->envname("HLAG_MAX_NODES");
  app.add_option_function<double>(
         "--max-seconds", [&config](const double& v) { config.max_seconds = v; }, "search wall-clock cap")
      ->envname("HLAG_MAX_SECONDS");
  app.add_option("--threads", config.threads, "search worker threads")->envname("HLAG_THREADS")->capture_default_str();
  app.add_option_function<std::string>(
         "--format",
         [&config](const std::string& v) { config.format = v == "json" ? OutputFormat::json : OutputFormat::human; },
         "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->envname("HLAG_FORMAT");
  app.add_flag_callback("--json", [&config] { config.format = OutputFormat::json; }, "shorthand for --format json");
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace hlag::cli
