#include <algorithm>
#include <functional>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/io.hpp"
#include "hlag/search.hpp"

namespace hlag {

namespace {

struct Ranked {
  std::vector<std::uint32_t> elements;  // ground-set indices, ascending
  double lambda = 0.0;
};

// Larger lambda first; ties by the element list so merges are order-independent.
bool ranks_before(const Ranked& a, const Ranked& b) {
  if (a.lambda != b.lambda) return a.lambda > b.lambda;
  return a.elements < b.elements;
}

void keep_top(std::vector<Ranked>& list, std::size_t k) {
  std::sort(list.begin(), list.end(), ranks_before);
  if (list.size() > k) list.resize(k);
}

nlohmann::json ranked_json(const std::vector<Ranked>& list) {
  nlohmann::json j = nlohmann::json::array();
  for (const Ranked& r : list) j.push_back({{"elements", r.elements}, {"lambda", r.lambda}});
  return j;
}

std::vector<Ranked> ranked_from_json(const nlohmann::json& j) {
  std::vector<Ranked> out;
  for (const auto& r : j) out.push_back({r.at("elements").get<std::vector<std::uint32_t>>(), r.at("lambda").get<double>()});
  return out;
}

struct DensityContext {
  const GroundSet& ground;
  bool down_sets;
  Prune creates_forbidden;
  std::size_t clique_order;
  MaximizeOptions fast;
  std::size_t top_k;
};

class DensityVisitor : public Visitor {
 public:
  explicit DensityVisitor(const DensityContext& ctx) : ctx_(ctx) {}

  void visit(const PartialGraph& leaf) override {
    PartialGraph work = leaf;
    const bool clique_free = !has_clique(work, std::nullopt);
    bool extendable_free = false;
    bool extendable_clique_free = false;
    for (std::size_t k = 0; k < ctx_.ground.size(); ++k) {
      if (!work.addable(k, ctx_.down_sets)) continue;
      work.push(k);
      const bool bad = ctx_.creates_forbidden(work, k);
      if (!bad) {
        extendable_free = true;
        if (clique_free && !has_clique(work, k)) extendable_clique_free = true;
      }
      work.pop();
      if (extendable_free && (extendable_clique_free || !clique_free)) break;
    }
    const bool maximal_a = !extendable_free;
    const bool maximal_b = clique_free && !extendable_clique_free;
    if (!maximal_a && !maximal_b) return;
    std::vector<std::uint32_t> elements = leaf.chosen();
    std::sort(elements.begin(), elements.end());
    const Ranked ranked{std::move(elements), maximize(leaf.graph(), ctx_.fast).value};
    if (maximal_a) {
      ++maximal_free_;
      insert(top_free_, ranked);
    }
    if (maximal_b) {
      ++maximal_clique_free_;
      insert(top_clique_free_, ranked);
    }
  }

  void merge(const Visitor& other) override {
    const auto& o = static_cast<const DensityVisitor&>(other);
    maximal_free_ += o.maximal_free_;
    maximal_clique_free_ += o.maximal_clique_free_;
    top_free_.insert(top_free_.end(), o.top_free_.begin(), o.top_free_.end());
    top_clique_free_.insert(top_clique_free_.end(), o.top_clique_free_.begin(), o.top_clique_free_.end());
    keep_top(top_free_, ctx_.top_k);
    keep_top(top_clique_free_, ctx_.top_k);
  }

  nlohmann::json save() const override {
    return {{"maximal_free", maximal_free_},
            {"maximal_clique_free", maximal_clique_free_},
            {"top_free", ranked_json(top_free_)},
            {"top_clique_free", ranked_json(top_clique_free_)}};
  }

  void load(const nlohmann::json& j) override {
    if (j.is_null()) return;
    maximal_free_ = j.at("maximal_free").get<std::uint64_t>();
    maximal_clique_free_ = j.at("maximal_clique_free").get<std::uint64_t>();
    top_free_ = ranked_from_json(j.at("top_free"));
    top_clique_free_ = ranked_from_json(j.at("top_clique_free"));
  }

  std::uint64_t maximal_free_ = 0;
  std::uint64_t maximal_clique_free_ = 0;
  std::vector<Ranked> top_free_;
  std::vector<Ranked> top_clique_free_;

 private:
  void insert(std::vector<Ranked>& list, const Ranked& r) {
    list.push_back(r);
    if (list.size() > 2 * ctx_.top_k) keep_top(list, ctx_.top_k);
  }

  bool edge_present(const PartialGraph& g, std::span<const Vertex> ids) const {
    return g.has(ctx_.ground.index_of(Edge(ids)));
  }

  // A complete 3-graph on clique_order vertices inside g, through element `through`
  // when given.
  bool has_clique(const PartialGraph& g, std::optional<std::size_t> through) const {
    const std::size_t m = ctx_.clique_order;
    const Vertex n = ctx_.ground.order();
    if (m > n || m < 3) return false;
    std::vector<Vertex> chosen;
    std::vector<Vertex> forced;
    if (through) forced.assign(ctx_.ground[*through].begin(), ctx_.ground[*through].end());
    // Enumerate m-sets containing `forced`.
    std::vector<Vertex> others;
    for (Vertex v = 1; v <= n; ++v) {
      if (std::find(forced.begin(), forced.end(), v) == forced.end()) others.push_back(v);
    }
    const std::size_t need = m - forced.size();
    std::vector<std::size_t> pick(need);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == need) {
        std::vector<Vertex> set = forced;
        for (std::size_t p : pick) set.push_back(others[p]);
        std::sort(set.begin(), set.end());
        for (std::size_t a = 0; a < set.size(); ++a) {
          for (std::size_t b = a + 1; b < set.size(); ++b) {
            for (std::size_t c = b + 1; c < set.size(); ++c) {
              const Vertex ids[3] = {set[a], set[b], set[c]};
              if (!edge_present(g, ids)) return false;
            }
          }
        }
        return true;
      }
      for (std::size_t p = from; p + (need - depth) <= others.size(); ++p) {
        pick[depth] = p;
        if (rec(depth + 1, p + 1)) return true;
      }
      return false;
    };
    return rec(0, 0);
  }

  const DensityContext& ctx_;
};

std::optional<RankedGraph> recertify(const GroundSet& ground, const std::vector<Ranked>& list, const MaximizeOptions& full) {
  std::optional<RankedGraph> best;
  std::vector<std::uint32_t> best_elements;
  for (const Ranked& r : list) {
    std::vector<Edge> edges;
    for (std::uint32_t k : r.elements) edges.push_back(ground[k]);
    Hypergraph g(ground.uniformity(), ground.order(), std::move(edges));
    const OptimumResult opt = maximize(g, full);
    if (!best || opt.value > best->lambda || (opt.value == best->lambda && r.elements < best_elements)) {
      best = RankedGraph{std::move(g), opt.value, opt.certified};
      best_elements = r.elements;
    }
  }
  return best;
}

const char* mode_name(DensityMode mode) { return mode == DensityMode::left_compressed ? "left_compressed" : "all"; }

}  // namespace

nlohmann::json to_json(const DensityReport& report) {
  nlohmann::json counts = to_json(report.stats);
  counts["maximal_free"] = report.maximal_free;
  counts["maximal_clique_free"] = report.maximal_clique_free;
  nlohmann::json separations{{"clique_order", report.clique_order}, {"reference_lambda", report.reference}};
  if (report.best) separations["gap"] = report.reference - report.best->lambda;
  if (report.best_clique_free) {
    separations["clique_free_max_lambda"] = report.best_clique_free->lambda;
    separations["clique_free_gap"] = report.reference - report.best_clique_free->lambda;
    separations["clique_free_argmax"] = to_json(report.best_clique_free->graph);
  }
  nlohmann::json j{{"space", {{"forbidden", report.forbidden}, {"n", report.n}, {"mode", mode_name(report.mode)}}},
                   {"counts", std::move(counts)},
                   {"max_lambda", report.best ? nlohmann::json(report.best->lambda) : nlohmann::json(nullptr)},
                   {"argmax_graph", report.best ? to_json(report.best->graph) : nlohmann::json(nullptr)},
                   {"separations", std::move(separations)},
                   {"status", report.status == RunStatus::complete ? "complete" : "partial"}};
  if (report.best) j["certified"] = report.best->certified;
  if (report.best_core) j["argmax_core"] = to_json(*report.best_core);
  return j;
}

DensityReport density_evidence(const std::string& forbidden, Vertex n, const DensityEvidenceOptions& options,
                               const SearchCheckpoint* resume) {
  const Hypergraph f = named(forbidden, 3);
  if (f.order() < 4) throw ValidationError("forbidden graph needs at least 4 vertices");
  DensityReport report;
  report.forbidden = forbidden;
  report.n = n;
  report.mode = options.mode;
  report.clique_order = f.order() - 1;
  report.reference = closed_form("K" + std::to_string(report.clique_order)).value;

  const GroundSet ground(n, 3);
  EnumerationOptions enumeration = options.enumeration;
  enumeration.down_sets = options.mode == DensityMode::left_compressed;
  const Prune prune = prune_containing({f});
  const DensityContext ctx{ground, enumeration.down_sets, prune, report.clique_order, options.fast, options.top_k};
  const VisitorFactory factory = [&] { return std::make_unique<DensityVisitor>(ctx); };
  const nlohmann::json space{{"problem", "density"}, {"forbidden", forbidden}, {"mode", mode_name(options.mode)},
                             {"top_k", options.top_k}, {"fast_restarts", options.fast.restarts},
                             {"seed", options.fast.seed}};
  EnumerationRun run = enumerate(ground, enumeration, prune, {}, factory, space, resume);
  const auto& acc = static_cast<const DensityVisitor&>(*run.result);
  report.stats = run.stats;
  report.status = run.status;
  report.checkpoint = std::move(run.checkpoint);
  report.maximal_free = acc.maximal_free_;
  report.maximal_clique_free = acc.maximal_clique_free_;
  report.best = recertify(ground, acc.top_free_, options.full);
  report.best_clique_free = recertify(ground, acc.top_clique_free_, options.full);
  if (report.best) report.best_core = densify(report.best->graph, {options.full, 1e-9}).graph;
  return report;
}

}  // namespace hlag
