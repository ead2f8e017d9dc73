#include <bit>
#include <numeric>

#include "hlag/error.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

namespace {

struct CliqueSearch {
  std::vector<std::uint32_t> adj;
  std::uint32_t best = 0;

  // Bron-Kerbosch with pivoting; only the size-maximal clique is kept.
  void expand(std::uint32_t clique, std::uint32_t candidates, std::uint32_t excluded) {
    if (candidates == 0 && excluded == 0) {
      if (std::popcount(clique) > std::popcount(best)) best = clique;
      return;
    }
    if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best)) return;
    const std::uint32_t pool = candidates | excluded;
    int pivot = std::countr_zero(pool);
    int most = -1;
    for (std::uint32_t p = pool; p; p &= p - 1) {
      const int u = std::countr_zero(p);
      const int c = std::popcount(candidates & adj[u]);
      if (c > most) most = c, pivot = u;
    }
    for (std::uint32_t p = candidates & ~adj[pivot]; p; p &= p - 1) {
      const int v = std::countr_zero(p);
      const std::uint32_t bit = 1u << v;
      expand(clique | bit, candidates & adj[v], excluded & adj[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  }
};

}  // namespace

CliqueLagrangian motzkin_straus(const Hypergraph& g) {
  if (g.uniformity() != 2) throw ValidationError("motzkin_straus needs a 2-graph");
  if (g.order() > 32) throw ValidationError("motzkin_straus supports at most 32 vertices");
  CliqueLagrangian out;
  const std::size_t n = g.order();
  if (n == 0) {
    out.lambda = 0;
    return out;
  }
  CliqueSearch search;
  search.adj.assign(n, 0);
  for (const Edge& e : g.edges()) {
    search.adj[e[0] - 1] |= 1u << (e[1] - 1);
    search.adj[e[1] - 1] |= 1u << (e[0] - 1);
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  search.expand(0, all, 0);
  out.clique_number = std::popcount(search.best);
  for (std::uint32_t p = search.best; p; p &= p - 1) out.clique.push_back(static_cast<Vertex>(std::countr_zero(p) + 1));
  out.lambda = Rational(out.clique_number - 1, 2 * out.clique_number);
  return out;
}

bool is_dense(const Hypergraph& g, const DensityOptions& options) {
  if (g.empty()) return false;
  const double lambda = maximize(g, options.maximize).value;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (maximize(delete_vertex(g, v), options.maximize).value >= lambda - options.strictness_tol) return false;
  }
  return true;
}

DenseCore densify(const Hypergraph& g, const DensityOptions& options) {
  DenseCore core{g, std::vector<Vertex>(g.order()), {}};
  std::iota(core.original.begin(), core.original.end(), Vertex{1});
  for (;;) {
    core.optimum = maximize(core.graph, options.maximize);
    if (core.graph.empty()) return core;
    const std::vector<Vertex>& support = core.optimum.support;
    if (support.size() < core.graph.order()) {
      std::vector<Vertex> kept;
      for (Vertex v : support) kept.push_back(core.original[v - 1]);
      core.graph = induced(core.graph, support);
      core.original = std::move(kept);
      continue;
    }
    bool shrunk = false;
    for (Vertex v = 1; v <= core.graph.order() && !shrunk; ++v) {
      Hypergraph smaller = delete_vertex(core.graph, v);
      if (maximize(smaller, options.maximize).value >= core.optimum.value - options.strictness_tol) {
        core.graph = std::move(smaller);
        core.original.erase(core.original.begin() + (v - 1));
        shrunk = true;
      }
    }
    if (!shrunk) return core;
  }
}

}  // namespace hlag
