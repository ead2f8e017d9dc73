#include <algorithm>
#include <bit>
#include <functional>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"

namespace hlag {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

struct Target {
  Vertex n;
  std::vector<std::uint64_t> edges;  // sorted masks
  std::vector<std::size_t> degree;   // by vertex - 1
  std::vector<std::uint32_t> codegree;

  explicit Target(const Hypergraph& g) : n(g.order()), degree(g.order(), 0), codegree(std::size_t{g.order()} * g.order(), 0) {
    if (n > 64) throw ValidationError("containment search supports at most 64 vertices");
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) {
      edges.push_back(e.mask());
      for (std::size_t a = 0; a < e.size(); ++a) {
        ++degree[e[a] - 1];
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          ++codegree[(e[a] - 1) * n + (e[b] - 1)];
          ++codegree[(e[b] - 1) * n + (e[a] - 1)];
        }
      }
    }
    std::sort(edges.begin(), edges.end());
  }

  bool has(std::uint64_t mask) const { return std::binary_search(edges.begin(), edges.end(), mask); }
  std::uint32_t co(Vertex a, Vertex b) const { return codegree[(a - 1) * n + (b - 1)]; }
};

class Matcher {
 public:
  Matcher(const Target& target, const Hypergraph& f, std::span<const std::pair<Vertex, Vertex>> fixed)
      : t_(target), k_(f.order()), image_(f.order(), 0) {
    std::vector<std::size_t> fdeg = f.degrees();
    std::vector<std::vector<std::uint32_t>> fco(k_, std::vector<std::uint32_t>(k_, 0));
    for (const Edge& e : f.edges()) {
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          ++fco[e[a] - 1][e[b] - 1];
          ++fco[e[b] - 1][e[a] - 1];
        }
      }
    }
    // Placement order: fixed vertices, then greedy by ties to placed vertices.
    std::vector<char> placed(k_, 0);
    for (const auto& [u, w] : fixed) {
      order_.push_back(u);
      placed[u - 1] = 1;
      image_[u - 1] = w;
    }
    fixed_count_ = fixed.size();
    while (order_.size() < k_) {
      Vertex pick = 0;
      std::size_t best_ties = 0;
      for (Vertex u = 1; u <= k_; ++u) {
        if (placed[u - 1]) continue;
        std::size_t ties = 0;
        for (const Edge& e : f.edges()) {
          if (!e.contains(u)) continue;
          for (Vertex w : e) {
            if (w != u && placed[w - 1]) {
              ++ties;
              break;
            }
          }
        }
        if (pick == 0 || ties > best_ties || (ties == best_ties && fdeg[u - 1] > fdeg[pick - 1])) {
          pick = u;
          best_ties = ties;
        }
      }
      order_.push_back(pick);
      placed[pick - 1] = 1;
    }
    position_.assign(k_, 0);
    for (std::size_t p = 0; p < k_; ++p) position_[order_[p] - 1] = p;
    checks_.resize(k_);
    for (const Edge& e : f.edges()) {
      std::size_t last = 0;
      for (Vertex u : e) last = std::max(last, position_[u - 1]);
      checks_[last].push_back(e);
    }
    pairs_.resize(k_);
    degree_.resize(k_);
    for (std::size_t p = 0; p < k_; ++p) {
      const Vertex u = order_[p];
      degree_[p] = fdeg[u - 1];
      for (std::size_t q = 0; q < p; ++q) {
        const Vertex w = order_[q];
        if (fco[u - 1][w - 1] > 0) pairs_[p].push_back({w, fco[u - 1][w - 1]});
      }
    }
  }

  std::optional<EmbeddingMap> run() {
    if (k_ > t_.n) return std::nullopt;
    std::uint64_t used = 0;
    for (std::size_t p = 0; p < fixed_count_; ++p) {
      const Vertex w = image_[order_[p] - 1];
      if (used & bit(w)) return std::nullopt;
      if (!admissible(p, w)) return std::nullopt;
      used |= bit(w);
    }
    if (!place(fixed_count_, used)) return std::nullopt;
    return EmbeddingMap{image_};
  }

 private:
  bool admissible(std::size_t p, Vertex w) const {
    if (t_.degree[w - 1] < degree_[p]) return false;
    for (const auto& [u, need] : pairs_[p]) {
      if (t_.co(w, image_[u - 1]) < need) return false;
    }
    for (const Edge& e : checks_[p]) {
      std::uint64_t mask = 0;
      for (Vertex u : e) mask |= bit(image_[u - 1]);
      if (!t_.has(mask)) return false;
    }
    return true;
  }

  bool place(std::size_t p, std::uint64_t used) {
    if (p == k_) return true;
    const Vertex u = order_[p];
    for (Vertex w = 1; w <= t_.n; ++w) {
      if (used & bit(w)) continue;
      image_[u - 1] = w;
      if (admissible(p, w) && place(p + 1, used | bit(w))) return true;
    }
    image_[u - 1] = 0;
    return false;
  }

  const Target& t_;
  std::size_t k_;
  std::vector<Vertex> image_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Edge>> checks_;
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> pairs_;
  std::vector<std::size_t> degree_;
  std::size_t fixed_count_ = 0;
};

void require_same_uniformity(const Hypergraph& g, const Hypergraph& f) {
  if (g.uniformity() != f.uniformity()) {
    throw ValidationError("uniformity mismatch: " + std::to_string(g.uniformity()) + " vs " + std::to_string(f.uniformity()));
  }
}

// Walks a linear path outward from `end`: each step adds an edge through `end` whose
// other two vertices are unused, recording (middle, exit).
class PathWalker {
 public:
  explicit PathWalker(std::span<const std::vector<std::uint64_t>> incident) : incident_(incident) {}

  using Leaf = std::function<bool(std::uint64_t)>;

  bool walk(Vertex end, std::uint64_t used, int remaining, std::vector<Vertex>& out, const Leaf& leaf) const {
    if (remaining == 0) return leaf(used);
    for (std::uint64_t m : incident_[end]) {
      const std::uint64_t rest = m & ~bit(end);
      if (rest & used) continue;
      const Vertex a = static_cast<Vertex>(std::countr_zero(rest) + 1);
      const Vertex b = static_cast<Vertex>(63 - std::countl_zero(rest) + 1);
      for (auto [mid, exit] : {std::pair{a, b}, std::pair{b, a}}) {
        out.push_back(mid);
        out.push_back(exit);
        if (walk(exit, used | rest, remaining - 1, out, leaf)) return true;
        out.pop_back();
        out.pop_back();
      }
    }
    return false;
  }

 private:
  std::span<const std::vector<std::uint64_t>> incident_;
};

std::vector<std::vector<std::uint64_t>> incidence(const Hypergraph& g) {
  if (g.uniformity() != 3) throw ValidationError("linear path search needs a 3-graph");
  if (g.order() > 64) throw ValidationError("containment search supports at most 64 vertices");
  std::vector<std::vector<std::uint64_t>> incident(g.order() + 1);
  for (const Edge& e : g.edges()) {
    for (Vertex v : e) incident[v].push_back(e.mask());
  }
  return incident;
}

// Searches for P_t through e with `left` edges before e and t - 1 - left after it.
std::optional<EmbeddingMap> path_through(const PathWalker& walker, const Edge& e, int t) {
  for (int left = 0; left < t; ++left) {
    const int right = t - 1 - left;
    for (std::size_t entry_idx = 0; entry_idx < 3; ++entry_idx) {
      if (left == 0 && entry_idx > 0) break;
      for (std::size_t exit_idx = 0; exit_idx < 3; ++exit_idx) {
        if (right == 0 && exit_idx > 0) break;
        if (left > 0 && right > 0 && entry_idx == exit_idx) continue;
        const Vertex entry = left > 0 ? e[entry_idx] : 0;
        const Vertex exit = right > 0 ? e[exit_idx] : 0;
        std::vector<Vertex> middle;
        for (Vertex v : e) {
          if (v != entry && v != exit) middle.push_back(v);
        }
        std::vector<Vertex> right_out;
        std::vector<Vertex> left_out;
        std::vector<Vertex> sequence;
        const bool found = walker.walk(exit, e.mask(), right, right_out, [&](std::uint64_t used) {
          return walker.walk(entry, used, left, left_out, [&](std::uint64_t) {
            for (std::size_t k = left_out.size(); k >= 2; k -= 2) {
              sequence.push_back(left_out[k - 1]);
              sequence.push_back(left_out[k - 2]);
            }
            if (left > 0) sequence.push_back(entry);
            sequence.insert(sequence.end(), middle.begin(), middle.end());
            if (right > 0) sequence.push_back(exit);
            sequence.insert(sequence.end(), right_out.begin(), right_out.end());
            return true;
          });
        });
        if (found) return EmbeddingMap{sequence};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

nlohmann::json to_json(const EmbeddingMap& map) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t u = 0; u < map.assignment.size(); ++u) j[std::to_string(u + 1)] = map.assignment[u];
  return j;
}

bool is_embedding(const Hypergraph& g, const Hypergraph& f, const EmbeddingMap& map) {
  if (map.assignment.size() != f.order()) return false;
  std::vector<Vertex> seen = map.assignment;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (Vertex w : seen) {
    if (w < 1 || w > g.order()) return false;
  }
  if (g.uniformity() != f.uniformity()) return false;
  for (const Edge& e : f.edges()) {
    std::vector<Vertex> image;
    for (Vertex u : e) image.push_back(map(u));
    if (!g.has_edge(Edge(std::span<const Vertex>(image)))) return false;
  }
  return true;
}

std::optional<EmbeddingMap> contains(const Hypergraph& g, const Hypergraph& f) {
  require_same_uniformity(g, f);
  if (f.order() > g.order() || f.size() > g.size()) return std::nullopt;
  const Target target(g);
  return Matcher(target, f, {}).run();
}

bool is_free(const Hypergraph& g, const Hypergraph& f) { return !contains(g, f).has_value(); }

std::optional<EmbeddingMap> contains_through(const Hypergraph& g, const Hypergraph& f, const Edge& e) {
  require_same_uniformity(g, f);
  if (!g.has_edge(e)) throw ValidationError("edge " + e.to_string() + " is not in the graph");
  if (f.order() > g.order() || f.size() > g.size()) return std::nullopt;
  const Target target(g);
  std::vector<Vertex> images(e.begin(), e.end());
  for (const Edge& fe : f.edges()) {
    std::sort(images.begin(), images.end());
    do {
      std::vector<std::pair<Vertex, Vertex>> fixed;
      for (std::size_t k = 0; k < fe.size(); ++k) fixed.push_back({fe[k], images[k]});
      if (auto found = Matcher(target, f, fixed).run()) return found;
    } while (std::next_permutation(images.begin(), images.end()));
  }
  return std::nullopt;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size()) return false;
  return contains(a, b).has_value();
}

std::optional<EmbeddingMap> contains_linear_path(const Hypergraph& g, int t) {
  if (t < 1) throw ValidationError("path length must be positive");
  const auto incident = incidence(g);
  const PathWalker walker(incident);
  if (static_cast<std::size_t>(2 * t + 1) > g.order()) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (auto found = path_through(walker, e, t)) return found;
  }
  return std::nullopt;
}

std::optional<EmbeddingMap> contains_linear_path_through(const Hypergraph& g, int t, const Edge& e) {
  if (t < 1) throw ValidationError("path length must be positive");
  const auto incident = incidence(g);
  if (!g.has_edge(e)) throw ValidationError("edge " + e.to_string() + " is not in the graph");
  if (static_cast<std::size_t>(2 * t + 1) > g.order()) return std::nullopt;
  return path_through(PathWalker(incident), e, t);
}

std::optional<EmbeddingMap> linear_path_through(std::span<const std::vector<std::uint64_t>> incident, int t, const Edge& e) {
  if (t < 1) throw ValidationError("path length must be positive");
  if (incident.size() < static_cast<std::size_t>(2 * t + 2)) return std::nullopt;
  return path_through(PathWalker(incident), e, t);
}

bool contains_core(const Hypergraph& g, const Hypergraph& f, std::size_t p) {
  require_same_uniformity(g, f);
  if (p < f.order()) throw ValidationError("core size is smaller than the pattern");
  if (p > g.order()) return false;
  if (g.order() > 64) throw ValidationError("containment search supports at most 64 vertices");
  const Vertex n = g.order();
  std::vector<std::uint64_t> shadow(n + 1, 0);
  for (const Edge& e : g.edges()) {
    for (Vertex a : e) shadow[a] |= e.mask() & ~bit(a);
  }
  std::vector<Vertex> chosen;
  std::function<bool(std::uint64_t)> grow = [&](std::uint64_t candidates) {
    if (chosen.size() == p) return contains(induced(g, chosen), f).has_value();
    if (chosen.size() + static_cast<std::size_t>(std::popcount(candidates)) < p) return false;
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(c) + 1);
      chosen.push_back(v);
      // Only larger ids stay candidates, so each set is visited once.
      const std::uint64_t above = v == 64 ? 0 : ~((std::uint64_t{1} << v) - 1);
      if (grow(candidates & shadow[v] & above)) return true;
      chosen.pop_back();
    }
    return false;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return grow(all);
}

}  // namespace hlag
