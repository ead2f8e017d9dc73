#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hlag/cli.hpp"
#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/io.hpp"
#include "hlag/verify.hpp"

namespace hlag::cli {

namespace {

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Exact value when known, decimal otherwise.
std::string number(double v, const std::optional<Rational>& exact) {
  if (!exact) return decimal(v);
  return to_string(*exact) + " ~ " + decimal(v);
}

std::string vertex_list(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

std::string edge_list(const Hypergraph& g) {
  std::string s;
  for (const Edge& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += e.to_string();
  }
  return s.empty() ? "(none)" : s;
}

std::string describe(const Hypergraph& g) {
  return "n=" + std::to_string(g.order()) + " r=" + std::to_string(g.uniformity()) + " edges=" + std::to_string(g.size());
}

void emit_graph(const Hypergraph& g, const std::optional<std::filesystem::path>& output, const RunConfig& config,
                nlohmann::json extra, std::ostream& out) {
  if (output) write_hypergraph(*output, g);
  if (config.format == OutputFormat::json) {
    extra["graph"] = to_json(g);
    if (output) extra["output"] = output->string();
    out << extra.dump(2) << '\n';
    return;
  }
  if (output) {
    out << "wrote " << output->string() << " (" << describe(g) << ")\n";
  } else {
    out << format_hg(g);
  }
}

void print_optimum(const OptimumResult& opt, std::ostream& out) {
  out << "lambda: " << number(opt.value, opt.exact_value) << '\n';
  out << "certified: " << (opt.certified ? "yes" : "no") << " (" << to_string(opt.mode) << ")\n";
  out << "kkt residual: " << opt.kkt_residual << ", outside violation: " << opt.outside_violation << '\n';
  out << "support: " << vertex_list(opt.support) << '\n';
  out << "weights:";
  const bool exact = opt.weighting.is_exact();
  for (std::size_t i = 0; i < opt.weighting.size(); ++i) {
    out << ' ' << (exact ? to_string(opt.weighting.exact_values()[i]) : decimal(opt.weighting[i]));
  }
  out << '\n';
  out << "seed: " << opt.seed << ", restarts: " << opt.restarts << '\n';
}

EnumerationOptions checked_enumeration(const RunConfig& config, bool down_sets) {
  config.validate();
  return config.enumeration_options(down_sets);
}

}  // namespace

Hypergraph resolve_pattern(const std::string& pattern, int r) {
  if (std::filesystem::is_regular_file(pattern)) return read_hypergraph(pattern);
  return named(pattern, r);
}

int cmd_lambda(const std::filesystem::path& input, const RunConfig& config, std::ostream& out) {
  config.validate();
  const Hypergraph g = read_hypergraph(input);
  const OptimumResult opt = maximize(g, config.maximize_options());
  if (config.format == OutputFormat::json) {
    out << nlohmann::json{{"graph", to_json(g)}, {"config", to_json(config)}, {"result", to_json(opt)}}.dump(2) << '\n';
  } else {
    out << "graph: " << describe(g) << '\n';
    print_optimum(opt, out);
  }
  return opt.certified ? kOk : kUncertified;
}

int cmd_check(const std::filesystem::path& input, const std::vector<std::string>& patterns, const RunConfig& config,
              std::ostream& out) {
  config.validate();
  if (patterns.empty()) throw ValidationError("no pattern given");
  const Hypergraph g = read_hypergraph(input);
  nlohmann::json results = nlohmann::json::array();
  for (const std::string& p : patterns) {
    const Hypergraph f = resolve_pattern(p, g.uniformity());
    const auto witness = contains(g, f);
    results.push_back({{"pattern", p},
                       {"free", !witness},
                       {"embedding", witness ? to_json(*witness) : nlohmann::json(nullptr)}});
    if (config.format == OutputFormat::human) {
      out << p << ": " << (witness ? "contains" : "free");
      if (witness) {
        out << ", embedding";
        for (std::size_t u = 0; u < witness->assignment.size(); ++u) out << ' ' << u + 1 << "->" << witness->assignment[u];
      }
      out << '\n';
    }
  }
  if (config.format == OutputFormat::json) out << nlohmann::json{{"graph", to_json(g)}, {"results", results}}.dump(2) << '\n';
  return kOk;
}

int cmd_compress(const std::filesystem::path& input, const CompressRequest& request, const RunConfig& config,
                 std::ostream& out) {
  config.validate();
  if (request.pair.has_value() == request.loop_path.has_value()) {
    throw ValidationError("give either a pair -i/-j or --loop t");
  }
  const Hypergraph g = read_hypergraph(input);
  if (request.pair) {
    const auto [i, j] = *request.pair;
    if (i < 1 || j < 1 || i > g.order() || j > g.order() || i == j) throw ValidationError("bad compression pair");
    const Hypergraph h = compress(g, i, j);
    const OptimumResult before = maximize(g, config.maximize_options());
    const OptimumResult after = maximize(h, config.maximize_options());
    nlohmann::json info{{"pair", {i, j}}, {"lambda_before", before.value}, {"lambda_after", after.value},
                        {"certified", before.certified && after.certified}};
    if (config.format == OutputFormat::human) {
      out << "compressed " << j << " into " << i << ": lambda " << number(before.value, before.exact_value) << " -> "
          << number(after.value, after.exact_value) << '\n';
    }
    emit_graph(h, request.output, config, std::move(info), out);
    return before.certified && after.certified ? kOk : kUncertified;
  }
  CompressionLoopOptions loop;
  loop.density = config.density_options();
  const CompressionLoopResult result = left_compress_loop(g, *request.loop_path, std::nullopt, loop);
  nlohmann::json steps = nlohmann::json::array();
  for (const CompressionStep& s : result.steps) {
    steps.push_back({{"i", s.i}, {"j", s.j}, {"order", s.order}, {"lambda", s.lambda}});
  }
  if (config.format == OutputFormat::human) {
    out << "left-compression loop: " << result.steps.size() << " compressions, lambda " << decimal(result.lambda_in)
        << " -> " << decimal(result.lambda_out) << '\n';
    for (const CompressionStep& s : result.steps) {
      out << "  pi(" << s.i << "," << s.j << ") on " << s.order << " vertices, lambda " << decimal(s.lambda) << '\n';
    }
  }
  emit_graph(result.graph, request.output, config,
             {{"lambda_in", result.lambda_in}, {"lambda_out", result.lambda_out}, {"steps", std::move(steps)}}, out);
  return kOk;
}

int cmd_extend(const std::filesystem::path& input, const std::optional<std::filesystem::path>& output,
               const RunConfig& config, std::ostream& out) {
  const Hypergraph g = read_hypergraph(input);
  emit_graph(extension(g), output, config, {{"source", to_json(g)}}, out);
  return kOk;
}

Hypergraph construct(const std::string& kind, const std::vector<long long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw ValidationError(kind + " takes " + std::to_string(count) + " parameters, got " + std::to_string(params.size()));
    }
    for (long long p : params) {
      if (p < 1 || p > 64) throw ValidationError("parameters must lie in [1, 64]");
    }
  };
  if (kind == "K" || kind == "K-") {
    need(2);
    const int t = static_cast<int>(params[0]);
    const int r = static_cast<int>(params[1]);
    if (r > t) throw ValidationError("need r <= t");
    if (static_cast<std::size_t>(r) > kMaxUniformity) throw ValidationError("uniformity too large");
    return kind == "K" ? complete(t, r) : complete_minus(t, r);
  }
  if (kind == "P") {
    need(1);
    if (params[0] > 21) throw ValidationError("P_t has 2t+1 vertices; t must be at most 21");
    return linear_path(static_cast<int>(params[0]));
  }
  if (kind == "T") {
    need(3);
    const int m = static_cast<int>(params[0]);
    const int r = static_cast<int>(params[1]);
    if (r > m) throw ValidationError("need r <= m");
    if (static_cast<std::size_t>(r) > kMaxUniformity) throw ValidationError("uniformity too large");
    return turan_blowup(m, r, static_cast<std::size_t>(params[2]));
  }
  throw ValidationError("unknown construction '" + kind + "' (expected K, K-, P or T)");
}

int cmd_construct(const std::string& kind, const std::vector<long long>& params,
                  const std::optional<std::filesystem::path>& output, const RunConfig& config, std::ostream& out) {
  emit_graph(construct(kind, params), output, config, {{"kind", kind}, {"params", params}}, out);
  return kOk;
}

int cmd_turan(const TuranRequest& request, const RunConfig& config, std::ostream& out) {
  TuranOptions options;
  options.strategy = request.strategy;
  options.enumeration = checked_enumeration(config, false);
  std::vector<Hypergraph> forbidden;
  for (const std::string& p : request.patterns) forbidden.push_back(resolve_pattern(p));
  std::optional<Hypergraph> base;
  if (request.extension_of) {
    base = resolve_pattern(*request.extension_of);
    forbidden.push_back(extension(*base));
  }
  if (forbidden.empty()) throw ValidationError("no forbidden pattern given");
  const TuranResult result = turan_number(request.n, forbidden, options);

  nlohmann::json j = to_json(result);
  j["strategy"] = request.strategy == TuranStrategy::whole_space ? "whole_space" : "branch_and_bound";
  std::optional<std::uint64_t> reference;
  int m = 0;
  if (base && base->uniformity() == 3 && base->order() >= 4) {
    m = static_cast<int>(base->order()) - 1;
    reference = turan_count(m, 3, request.n);
    j["comparison"] = {{"m", m}, {"turan_count", *reference}, {"difference", static_cast<long long>(result.max_edges) -
                                                                            static_cast<long long>(*reference)}};
  }
  if (config.format == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else {
    out << "ex(" << request.n << ") = " << result.max_edges
        << (result.status == TuranStatus::exact ? " (exact)" : " (lower bound, search capped)") << '\n';
    if (reference) out << "t_" << m << "^3(" << request.n << ") = " << *reference << '\n';
    out << "witnesses: " << result.witnesses.size() << '\n';
    for (const Hypergraph& w : result.witnesses) out << "  " << edge_list(w) << '\n';
    out << "nodes: " << result.stats.nodes << ", visited: " << result.stats.visited << ", pruned: " << result.stats.pruned
        << ", bounded: " << result.stats.bounded << '\n';
  }
  return result.status == TuranStatus::exact ? kOk : kCapped;
}

int cmd_density(const DensityRequest& request, const RunConfig& config, std::ostream& out) {
  DensityEvidenceOptions options;
  options.mode = request.mode;
  options.enumeration = checked_enumeration(config, request.mode == DensityMode::left_compressed);
  options.fast.seed = config.seed;
  options.full = config.maximize_options();
  std::optional<SearchCheckpoint> resume;
  if (request.resume) resume = checkpoint_resume(*request.resume);
  DensityReport report = density_evidence(request.forbidden, request.n, options, resume ? &*resume : nullptr);
  if (report.checkpoint && request.checkpoint) checkpoint_save(*report.checkpoint, *request.checkpoint);

  if (config.format == OutputFormat::json) {
    nlohmann::json j = to_json(report);
    j["seed"] = config.seed;
    out << j.dump(2) << '\n';
  } else {
    out << "forbidden " << report.forbidden << ", n = " << report.n << ", "
        << (report.mode == DensityMode::left_compressed ? "left-compressed" : "all") << " graphs\n";
    out << "visited: " << report.stats.visited << ", maximal F-free: " << report.maximal_free
        << ", maximal F-free K" << report.clique_order << "-free: " << report.maximal_clique_free << '\n';
    if (report.best) {
      out << "max lambda: " << decimal(report.best->lambda) << " (certified: " << (report.best->certified ? "yes" : "no")
          << ")\n";
      out << "argmax: " << edge_list(report.best->graph) << '\n';
      if (report.best_core) out << "dense core: " << describe(*report.best_core) << '\n';
      out << "reference lambda(K" << report.clique_order << "): " << decimal(report.reference) << ", gap "
          << decimal(report.reference - report.best->lambda) << '\n';
    }
    if (report.best_clique_free) {
      out << "K" << report.clique_order << "-free max lambda: " << decimal(report.best_clique_free->lambda) << ", gap "
          << decimal(report.reference - report.best_clique_free->lambda) << '\n';
    }
    out << "status: " << (report.status == RunStatus::complete ? "complete" : "partial") << ", seed " << config.seed
        << '\n';
    if (report.checkpoint && request.checkpoint) out << "checkpoint written to " << request.checkpoint->string() << '\n';
  }
  if (report.status == RunStatus::capped) return kCapped;
  return !report.best || report.best->certified ? kOk : kUncertified;
}

int cmd_verify(const RunConfig& config, const std::vector<std::string>& only, std::ostream& out) {
  config.validate();
  const std::vector<int> ids = verify::select(only);
  const verify::SuiteOptions options{config.seed, config.threads};
  const bool human = config.format == OutputFormat::human;
  const verify::SuiteReport report = verify::run_suite(ids, options, [&](const verify::CriterionResult& r) {
    if (human) out << verify::format_line(r) << std::endl;
  });
  if (human) {
    std::size_t passed = 0;
    for (const auto& r : report.results) passed += r.passed ? 1 : 0;
    out << passed << "/" << report.results.size() << " criteria passed (seed " << config.seed << ")\n";
  } else {
    out << verify::to_json(report).dump(2) << '\n';
  }
  return report.passed() ? kOk : kUncertified;
}

}  // namespace hlag::cli
