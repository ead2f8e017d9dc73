#include "hlag/generators.hpp"

#include <algorithm>
#include <numeric>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/search.hpp"

namespace hlag {

Hypergraph random_hypergraph(Vertex n, int r, double p, std::mt19937_64& rng) {
  const GroundSet ground(n, r);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (const Edge& e : ground.elements()) {
    if (coin(rng)) edges.push_back(e);
  }
  return Hypergraph(r, n, std::move(edges));
}

std::vector<double> random_simplex_point(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> x(n);
  double sum = 0.0;
  for (double& v : x) sum += (v = exp(rng));
  for (double& v : x) v /= sum;
  return x;
}

std::vector<Vertex> random_permutation(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Hypergraph random_covers_pairs_path_free(Vertex n, int t, std::mt19937_64& rng) {
  if (t < 3) throw ValidationError("stars contain P_2; need t >= 3");
  if (n < 3) throw ValidationError("need at least 3 vertices");
  const GroundSet ground(n, 3);
  PartialGraph g(ground);
  const Vertex center = std::uniform_int_distribution<Vertex>(1, n)(rng);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < ground.size(); ++k) {
    if (ground[k].contains(center)) {
      g.push(k);
    } else {
      others.push_back(k);
    }
  }
  const Prune creates_path = prune_containing({linear_path(t)});
  std::shuffle(others.begin(), others.end(), rng);
  const std::size_t attempts = std::uniform_int_distribution<std::size_t>(0, others.size())(rng);
  for (std::size_t a = 0; a < attempts; ++a) {
    g.push(others[a]);
    if (creates_path(g, others[a])) g.pop();
  }

  Hypergraph h = g.graph();
  std::vector<Edge> star;
  for (const Edge& e : h.edges()) {
    if (e.contains(center)) star.push_back(e);
  }
  std::shuffle(star.begin(), star.end(), rng);
  const std::size_t drops = std::uniform_int_distribution<std::size_t>(0, star.size())(rng);
  for (std::size_t d = 0; d < drops; ++d) {
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
      if (!(e == star[d])) edges.push_back(e);
    }
    Hypergraph smaller(3, n, std::move(edges));
    if (covers_pairs(smaller)) h = std::move(smaller);
  }
  return relabel(h, random_permutation(n, rng));
}

Hypergraph random_left_compressed_path_free(Vertex n, int t, double stop_probability, std::mt19937_64& rng) {
  if (t < 3) throw ValidationError("stars contain P_2; need t >= 3");
  const GroundSet ground(n, 3);
  PartialGraph g(ground);
  for (std::size_t k = 0; k < ground.size(); ++k) {
    if (ground[k][0] == 1) g.push(k);
  }
  const Prune creates_path = prune_containing({linear_path(t)});
  std::bernoulli_distribution stop(stop_probability);
  std::vector<char> rejected(ground.size(), 0);
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if (!rejected[k] && g.addable(k, true)) candidates.push_back(k);
    }
    if (candidates.empty()) break;
    const std::size_t k = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    g.push(k);
    if (creates_path(g, k)) {
      g.pop();
      // Supersets stay non-free, so a rejected triple is never addable again.
      rejected[k] = 1;
      continue;
    }
    if (stop(rng)) break;
  }
  return g.graph();
}

}  // namespace hlag
