#include <algorithm>
#include <numeric>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/search.hpp"

namespace hlag {

namespace {

bool colex_less(const Edge& a, const Edge& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

void subsets(Vertex n, int r, std::vector<Vertex>& current, Vertex next, std::vector<Edge>& out) {
  if (current.size() == static_cast<std::size_t>(r)) {
    out.emplace_back(std::span<const Vertex>(current));
    return;
  }
  for (Vertex v = next; v <= n; ++v) {
    current.push_back(v);
    subsets(n, r, current, v + 1, out);
    current.pop_back();
  }
}

}  // namespace

GroundSet::GroundSet(Vertex n, int r) : n_(n), r_(r) {
  if (r < 1 || static_cast<std::size_t>(r) > kMaxUniformity) throw ValidationError("uniformity out of range");
  if (n > 64) throw ValidationError("ground sets support at most 64 vertices");
  std::vector<Vertex> current;
  subsets(n, r, current, 1, elements_);
  std::sort(elements_.begin(), elements_.end(), colex_less);
  covers_.resize(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const Edge& e = elements_[k];
    for (std::size_t p = 0; p < e.size(); ++p) {
      const Vertex lowered = e[p] - 1;
      if (lowered == 0 || (p > 0 && lowered == e[p - 1])) continue;
      std::vector<Vertex> ids(e.begin(), e.end());
      ids[p] = lowered;
      covers_[k].push_back(static_cast<std::uint32_t>(index_of(Edge(std::span<const Vertex>(ids)))));
    }
  }
}

std::size_t GroundSet::index_of(const Edge& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e, colex_less);
  if (it == elements_.end() || !(*it == e)) throw ValidationError("edge " + e.to_string() + " is not in the ground set");
  return static_cast<std::size_t>(it - elements_.begin());
}

PartialGraph::PartialGraph(const GroundSet& ground)
    : ground_(&ground), in_(ground.size(), 0), incident_(ground.order() + 1) {}

bool PartialGraph::addable(std::size_t k, bool down_set) const {
  if (in_[k]) return false;
  if (!down_set) return true;
  for (std::uint32_t c : ground_->lower_covers(k)) {
    if (!in_[c]) return false;
  }
  return true;
}

void PartialGraph::push(std::size_t k) {
  in_[k] = 1;
  chosen_.push_back(static_cast<std::uint32_t>(k));
  const Edge& e = (*ground_)[k];
  for (Vertex v : e) incident_[v].push_back(e.mask());
}

void PartialGraph::pop() {
  const std::uint32_t k = chosen_.back();
  chosen_.pop_back();
  in_[k] = 0;
  for (Vertex v : (*ground_)[k]) incident_[v].pop_back();
}

Hypergraph PartialGraph::graph() const {
  std::vector<Edge> edges;
  edges.reserve(chosen_.size());
  for (std::uint32_t k : chosen_) edges.push_back((*ground_)[k]);
  return Hypergraph(ground_->uniformity(), ground_->order(), std::move(edges));
}

Prune prune_containing(std::vector<Hypergraph> forbidden) {
  struct Pattern {
    Hypergraph graph;
    int path_length = 0;  // > 0 for a labeled linear path
  };
  std::vector<Pattern> patterns;
  for (Hypergraph& f : forbidden) {
    Pattern p{std::move(f), 0};
    if (p.graph.uniformity() == 3 && p.graph.order() % 2 == 1 && p.graph.order() >= 3) {
      const int t = static_cast<int>(p.graph.order() - 1) / 2;
      if (p.graph == linear_path(t)) p.path_length = t;
    }
    patterns.push_back(std::move(p));
  }
  return [patterns = std::move(patterns)](const PartialGraph& partial, std::size_t added) {
    const Edge& e = partial.ground()[added];
    std::optional<Hypergraph> built;
    for (const Pattern& p : patterns) {
      if (p.graph.size() > partial.size() || p.graph.order() > partial.ground().order()) continue;
      if (p.path_length > 0) {
        if (linear_path_through(partial.incident(), p.path_length, e)) return true;
        continue;
      }
      if (!built) built = partial.graph();
      if (contains_through(*built, p.graph, e)) return true;
    }
    return false;
  };
}

void EnumerationStats::merge(const EnumerationStats& other) {
  visited += other.visited;
  pruned += other.pruned;
  bounded += other.bounded;
  nodes += other.nodes;
}

nlohmann::json to_json(const EnumerationStats& stats) {
  return {{"visited", stats.visited}, {"pruned", stats.pruned}, {"bounded", stats.bounded}, {"nodes", stats.nodes}};
}

Hypergraph canonical_form(const Hypergraph& g) {
  const Vertex n = g.order();
  if (n > 8) throw ValidationError("canonical forms are limited to 8 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::vector<Edge> best;
  std::vector<Edge> image;
  std::vector<Vertex> ids;
  do {
    image.clear();
    for (const Edge& e : g.edges()) {
      ids.clear();
      for (Vertex v : e) ids.push_back(perm[v - 1]);
      image.emplace_back(std::span<const Vertex>(ids));
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Hypergraph(g.uniformity(), n, std::move(best));
}

}  // namespace hlag
