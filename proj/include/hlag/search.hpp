#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

/// The r-subsets of [n] in colex order, with the lower covers of each element under
/// componentwise dominance (lowering one coordinate by one). Colex order is a linear
/// extension of dominance, so covers always precede the element.
class GroundSet {
 public:
  GroundSet(Vertex n, int r);

  Vertex order() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Edge& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<Edge>& elements() const noexcept { return elements_; }
  const std::vector<std::uint32_t>& lower_covers(std::size_t k) const { return covers_[k]; }
  /// Position of `e` in colex order.
  std::size_t index_of(const Edge& e) const;

 private:
  Vertex n_;
  int r_;
  std::vector<Edge> elements_;
  std::vector<std::vector<std::uint32_t>> covers_;
};

/// The graph on a DFS path: a stack of chosen ground-set elements plus incidence lists.
class PartialGraph {
 public:
  explicit PartialGraph(const GroundSet& ground);

  const GroundSet& ground() const noexcept { return *ground_; }
  bool has(std::size_t k) const noexcept { return in_[k] != 0; }
  std::size_t size() const noexcept { return chosen_.size(); }
  const std::vector<std::uint32_t>& chosen() const noexcept { return chosen_; }
  /// incident[v] holds the masks of chosen edges through v; index 0 unused.
  const std::vector<std::vector<std::uint64_t>>& incident() const noexcept { return incident_; }
  /// Not chosen and, when `down_set`, all lower covers chosen.
  bool addable(std::size_t k, bool down_set) const;

  void push(std::size_t k);
  void pop();

  Hypergraph graph() const;

 private:
  const GroundSet* ground_;
  std::vector<char> in_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::vector<std::uint64_t>> incident_;
};

/// Called after element `added` joined the partial graph; true cuts the subtree. Must
/// be monotone: once true, true for every superset.
using Prune = std::function<bool(const PartialGraph& partial, std::size_t added)>;
/// Called before deciding element `next`; true cuts the subtree.
using Bound = std::function<bool(const PartialGraph& partial, std::size_t next)>;

/// Prune that fires when the added element completes a copy of any graph in `forbidden`.
/// Linear paths use the specialized path search.
Prune prune_containing(std::vector<Hypergraph> forbidden);

struct EnumerationStats {
  std::uint64_t visited = 0;
  std::uint64_t pruned = 0;
  std::uint64_t bounded = 0;
  std::uint64_t nodes = 0;

  void merge(const EnumerationStats& other);
  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

nlohmann::json to_json(const EnumerationStats& stats);

/// Per-work-unit accumulator. Units are merged in unit order, so merge must be
/// associative for results to be independent of the thread count.
class Visitor {
 public:
  virtual ~Visitor() = default;
  virtual void visit(const PartialGraph& leaf) = 0;
  virtual void merge(const Visitor& other) = 0;
  virtual nlohmann::json save() const = 0;
  virtual void load(const nlohmann::json& state) = 0;
};

using VisitorFactory = std::function<std::unique_ptr<Visitor>()>;

/// Visitor that forwards each leaf to a callback; its state does not checkpoint.
class CallbackVisitor : public Visitor {
 public:
  explicit CallbackVisitor(std::function<void(const PartialGraph&)> fn) : fn_(std::move(fn)) {}
  void visit(const PartialGraph& leaf) override { fn_(leaf); }
  void merge(const Visitor&) override {}
  nlohmann::json save() const override { return nullptr; }
  void load(const nlohmann::json&) override {}

 private:
  std::function<void(const PartialGraph&)> fn_;
};

struct EnumerationOptions {
  /// Only down-sets of the dominance order (left-compressed graphs).
  bool down_sets = true;
  /// Work units are the surviving decision prefixes over the first shard_depth elements.
  std::size_t shard_depth = 0;
  unsigned threads = 1;
  /// 0 means unlimited.
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

enum class RunStatus { complete, capped };

struct UnitState {
  enum class Status { pending, active, done };
  Status status = Status::pending;
  std::vector<std::uint8_t> prefix;
  /// Decisions after the prefix (1 include, 0 exclude) of an interrupted unit.
  std::vector<std::uint8_t> stack;
  EnumerationStats stats;
  nlohmann::json visitor;
};

inline constexpr int kCheckpointVersion = 1;

struct SearchCheckpoint {
  int version = kCheckpointVersion;
  /// Identifies the search: problem, n, r, mode, shard depth.
  nlohmann::json space;
  EnumerationStats prefix_stats;
  std::vector<UnitState> units;
};

nlohmann::json to_json(const SearchCheckpoint& checkpoint);
/// Throws CheckpointError on a malformed document or version mismatch.
SearchCheckpoint checkpoint_from_json(const nlohmann::json& j);
void checkpoint_save(const SearchCheckpoint& checkpoint, const std::filesystem::path& path);
SearchCheckpoint checkpoint_resume(const std::filesystem::path& path);

struct EnumerationRun {
  EnumerationStats stats;
  RunStatus status = RunStatus::complete;
  std::unique_ptr<Visitor> result;
  /// State to resume from when capped.
  std::optional<SearchCheckpoint> checkpoint;
};

/// Depth-first search over include/exclude decisions in colex order, include first.
/// `space` describes the search for checkpoints; resuming from a checkpoint with a
/// different space throws CheckpointError.
EnumerationRun enumerate(const GroundSet& ground, const EnumerationOptions& options, const Prune& prune,
                         const Bound& bound, const VisitorFactory& factory, const nlohmann::json& space,
                         const SearchCheckpoint* resume = nullptr);

/// Every down-set of the dominance order on r-subsets of [n] whose growth is never
/// cut by `prune`, visited once.
EnumerationStats enumerate_left_compressed(Vertex n, int r, const Prune& prune,
                                           const std::function<void(const Hypergraph&)>& visit);

struct WholeSpaceOptions {
  std::size_t max_ground = 24;
  /// Visit one graph per isomorphism class (n <= 7).
  bool up_to_isomorphism = false;
};

/// All 2^C(n,r) edge sets accepted by `filter` (empty filter accepts everything).
/// Throws ValidationError when C(n, r) exceeds max_ground.
EnumerationStats enumerate_all(Vertex n, int r, const std::function<bool(const Hypergraph&)>& filter,
                               const std::function<void(const Hypergraph&)>& visit, const WholeSpaceOptions& options = {});

/// Lexicographically smallest sorted edge list over all relabelings. Requires n <= 8.
Hypergraph canonical_form(const Hypergraph& g);

// ---------------------------------------------------------------------------
// Turán numbers.

enum class TuranStatus { exact, lower_bound };

struct TuranResult {
  Vertex n = 0;
  std::vector<Hypergraph> forbidden;
  std::size_t max_edges = 0;
  /// Canonical forms for n <= 7, sorted; otherwise one labeled witness.
  std::vector<Hypergraph> witnesses;
  TuranStatus status = TuranStatus::exact;
  EnumerationStats stats;
};

nlohmann::json to_json(const TuranResult& result);

enum class TuranStrategy { branch_and_bound, whole_space };

struct TuranOptions {
  TuranStrategy strategy = TuranStrategy::branch_and_bound;
  EnumerationOptions enumeration{.down_sets = false};
  std::size_t max_ground = 24;
};

TuranResult turan_number(Vertex n, const std::vector<Hypergraph>& forbidden, const TuranOptions& options = {});

// ---------------------------------------------------------------------------
// Lagrangian density evidence.

enum class DensityMode { left_compressed, all };

struct DensityEvidenceOptions {
  DensityMode mode = DensityMode::left_compressed;
  EnumerationOptions enumeration;
  MaximizeOptions fast = MaximizeOptions::fast();
  MaximizeOptions full;
  std::size_t top_k = 32;
};

struct RankedGraph {
  Hypergraph graph;
  double lambda = 0.0;
  bool certified = false;
};

struct DensityReport {
  std::string forbidden;
  Vertex n = 0;
  DensityMode mode = DensityMode::left_compressed;
  /// m = |V(F)| - 1; the reference value is lambda(K_m^3).
  std::size_t clique_order = 0;
  double reference = 0.0;
  EnumerationStats stats;
  std::uint64_t maximal_free = 0;
  std::uint64_t maximal_clique_free = 0;
  /// Best among F-free graphs, and among F-free K_m^3-free graphs.
  std::optional<RankedGraph> best;
  std::optional<RankedGraph> best_clique_free;
  /// Dense core of the best graph.
  std::optional<Hypergraph> best_core;
  RunStatus status = RunStatus::complete;
  std::optional<SearchCheckpoint> checkpoint;
};

nlohmann::json to_json(const DensityReport& report);

/// Enumerates F-free 3-graphs on [n] (down-sets or all edge sets) with freeness
/// pruning. Since lambda is monotone under adding edges, only maximal members are
/// evaluated: those of the F-free family and those of the F-free, K_m^3-free family.
/// Values come from the fast optimizer; the top_k of each family are re-evaluated at
/// full strength. `forbidden` is a named id ("P2", "T2", "P3", "P4", ...).
DensityReport density_evidence(const std::string& forbidden, Vertex n, const DensityEvidenceOptions& options = {},
                               const SearchCheckpoint* resume = nullptr);

}  // namespace hlag
