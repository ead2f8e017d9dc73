#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Each r-subset of [n] independently with probability p.
Hypergraph random_hypergraph(Vertex n, int r, double p, std::mt19937_64& rng);

/// Uniform point of the simplex on n coordinates.
std::vector<double> random_simplex_point(std::size_t n, std::mt19937_64& rng);

/// A random permutation of [n] (perm[v-1] is the image of v).
std::vector<Vertex> random_permutation(Vertex n, std::mt19937_64& rng);

/// A P_t-free 3-graph on [n] (t >= 3) that covers pairs: the full star at a random
/// center, then random triples kept when they leave the graph P_t-free, then random
/// star edges dropped while pairs stay covered, then a random relabeling.
Hypergraph random_covers_pairs_path_free(Vertex n, int t, std::mt19937_64& rng);

/// A left-compressed P_t-free 3-graph on [n] grown from the full star at 1 by random
/// addable triples (all lower covers present) kept when P_t-free; growth stops after
/// each accepted triple with probability stop_probability.
Hypergraph random_left_compressed_path_free(Vertex n, int t, double stop_probability, std::mt19937_64& rng);

}  // namespace hlag
