#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

/// Injective, edge-preserving map V(F) -> V(G); assignment[u-1] is the image of u.
struct EmbeddingMap {
  std::vector<Vertex> assignment;

  Vertex operator()(Vertex u) const { return assignment[u - 1]; }
  friend bool operator==(const EmbeddingMap&, const EmbeddingMap&) = default;
};

nlohmann::json to_json(const EmbeddingMap& map);

/// True iff `map` is injective into [n(G)] and sends every edge of `f` to an edge of `g`.
bool is_embedding(const Hypergraph& g, const Hypergraph& f, const EmbeddingMap& map);

/// Backtracking subgraph search. Pattern vertices are placed highest degree first,
/// then by the number of pattern edges tying them to placed vertices; candidates are
/// tried in ascending order and pruned by degree and pair co-degree. Isolated pattern
/// vertices still need distinct images. Throws ValidationError on a uniformity
/// mismatch or when G has more than 64 vertices.
std::optional<EmbeddingMap> contains(const Hypergraph& g, const Hypergraph& f);
bool is_free(const Hypergraph& g, const Hypergraph& f);

/// An embedding of `f` whose image uses the edge `e` of `g`.
std::optional<EmbeddingMap> contains_through(const Hypergraph& g, const Hypergraph& f, const Edge& e);

/// Equal order, size and uniformity and a bijective embedding.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Specialized search for the linear path P_t (labels as in linear_path(t)) by DFS over
/// edge sequences. Requires r = 3.
std::optional<EmbeddingMap> contains_linear_path(const Hypergraph& g, int t);
/// A copy of P_t that uses the edge e of g.
std::optional<EmbeddingMap> contains_linear_path_through(const Hypergraph& g, int t, const Edge& e);

/// Same search on an incidence view: incident[v] holds the vertex masks (bit v-1) of
/// the edges through v, for v in 1..n; incident[0] is unused. `e` must be one of them.
std::optional<EmbeddingMap> linear_path_through(std::span<const std::vector<std::uint64_t>> incident, int t, const Edge& e);

/// True iff some p-set C has every pair covered by an edge of G (anywhere in G) and
/// G[C] contains F. Throws ValidationError when p < |V(F)|.
bool contains_core(const Hypergraph& g, const Hypergraph& f, std::size_t p);

// ---------------------------------------------------------------------------
// Left-compression loop.

struct CompressionStep {
  Vertex i = 0;
  Vertex j = 0;
  std::size_t order = 0;
  double lambda = 0.0;
};

struct CompressionLoopResult {
  Hypergraph graph;
  double lambda_in = 0.0;
  double lambda_out = 0.0;
  std::vector<CompressionStep> steps;
};

struct CompressionLoopOptions {
  DensityOptions density;
  std::size_t max_iterations = 10000;
};

/// Alternates densify, relabeling by descending optimum weight (ties by id), and one
/// compression at the lexicographically smallest (i, j), i < j, with L(j \ i) nonempty,
/// until the graph is left-compressed. Requires r = 3, t in {3, 4} and a P_t-free input;
/// for t = 4 also lambda(G) >= lambda_floor (default lambda(K_8^3) - 0.005). Each
/// compression lowers the sum of vertex ids over edges, but relabeling can raise it,
/// so a revisited graph or the iteration cap raises Error. The output is checked to be
/// dense, left-compressed, P_t-free and no worse in lambda by 1e-8.
CompressionLoopResult left_compress_loop(const Hypergraph& g, int t, std::optional<double> lambda_floor = std::nullopt,
                                         const CompressionLoopOptions& options = {});

// ---------------------------------------------------------------------------
// Symmetrization and cleaning.

struct SymmetrizationStep {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t class_size = 0;
  std::size_t edges_before = 0;       // |H_i|
  std::size_t edges_symmetrized = 0;  // |G_{i+1}|
  std::size_t edges_cleaned = 0;      // |H_{i+1}|
  std::vector<Vertex> removed;        // ids in G_{i+1}
};

struct SymmetrizeCleanResult {
  Hypergraph graph;
  std::vector<SymmetrizationStep> steps;
};

/// min degree >= alpha * C(n - 1, r - 1).
bool is_alpha_dense(const Hypergraph& g, double alpha);

/// Repeatedly takes the lexicographically smallest nonadjacent pair of vertices with
/// different links, orients it so that d(u) >= d(v) (ties keep the smaller id as u),
/// lets every vertex of v's link class copy the link of u, then cleans: while the graph
/// has edges and is not alpha-dense, delete a minimum-degree vertex z (smallest id),
/// except that when z belongs to u's old class and a vertex of v's old class remains,
/// the smallest such vertex is deleted instead. Stops when every nonadjacent pair is
/// equivalent or the graph has no edges. Throws ValidationError unless 0 < alpha <= 1.
SymmetrizeCleanResult symmetrize_clean(const Hypergraph& g, double alpha);

// ---------------------------------------------------------------------------
// Structural checks.

struct LemmaReport {
  std::string check;
  bool applicable = false;
  bool violated = false;
  std::optional<EmbeddingMap> witness_embedding;
  std::optional<std::pair<Edge, Edge>> witness_edges;
};

nlohmann::json to_json(const LemmaReport& report);

/// For 3-graphs:
///   F1-free, F2-free   covers pairs, P_4-free, n >= 9: violated by an embedding
///   F3-free            additionally lambda >= lambda(K_8^3) - 0.005
///   intersection-1     dense, n >= 5: violated if no two edges meet in one vertex
///   intersection-2     dense, n >= 4: violated if no two edges meet in two vertices
/// Checks whose hypotheses fail are reported with applicable = false. F1/F2/F3
/// witnesses are searched even when not applicable.
std::vector<LemmaReport> check_lemma_structures(const Hypergraph& g, const DensityOptions& options = {});

}  // namespace hlag
