#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlag {

/// Vertex ids are 1-based.
using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxUniformity = 8;

/// A strictly increasing tuple of at most kMaxUniformity vertex ids.
class Edge {
 public:
  Edge() = default;

  /// Sorts the ids; throws ValidationError on a repeated id, id 0 or too many ids.
  Edge(std::initializer_list<Vertex> ids);
  explicit Edge(std::span<const Vertex> ids);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Vertex operator[](std::size_t i) const noexcept { return ids_[i]; }
  Vertex front() const noexcept { return ids_[0]; }
  Vertex back() const noexcept { return ids_[size_ - 1]; }
  std::span<const Vertex> vertices() const noexcept { return {ids_.data(), size_}; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.begin() + size_; }

  bool contains(Vertex v) const noexcept;
  /// Copy without `v`; the edge must contain `v`.
  Edge without(Vertex v) const;
  /// Copy with `v` added; the edge must not contain `v`.
  Edge with(Vertex v) const;
  /// Bitmask of the ids (bit v-1); requires every id <= 64.
  std::uint64_t mask() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Edge& a, const Edge& b) noexcept {
    return a.size_ == b.size_ && a.ids_ == b.ids_;
  }
  /// Lexicographic on the id sequence.
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept;

 private:
  void normalize();

  std::array<Vertex, kMaxUniformity> ids_{};
  std::uint8_t size_ = 0;
};

/// Disjoint classes covering [n]; each class sorted, classes ordered by first element.
struct VertexPartition {
  std::vector<std::vector<Vertex>> classes;

  std::size_t class_of(Vertex v) const;
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// An r-uniform hypergraph on the vertex set [n] in canonical form: edges unique and
/// lexicographically sorted, so structural equality is plain equality.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Validates and canonicalizes. Duplicate edges collapse. Throws ValidationError
  /// naming the offending edge on wrong arity or an id outside [n].
  Hypergraph(int r, Vertex n, std::vector<Edge> edges);
  Hypergraph(int r, Vertex n, std::initializer_list<std::initializer_list<Vertex>> edges);

  int uniformity() const noexcept { return r_; }
  Vertex order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(const Edge& e) const;
  std::vector<std::size_t> degrees() const;
  /// Edge count containing `v`.
  std::size_t degree(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_ = 3;
  Vertex n_ = 0;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Named constructions.

/// K_t^r.
Hypergraph complete(int t, int r);
/// K_t^r minus its colex-largest edge {t-r+1, ..., t}.
Hypergraph complete_minus(int t, int r);
/// The 3-uniform linear path with t edges on 2t+1 vertices, e_i = {2i-1, 2i, 2i+1}.
Hypergraph linear_path(int t);
/// t pairwise disjoint r-edges {1..r}, {r+1..2r}, ...
Hypergraph matching(int t, int r);

/// Fixed-labeling named graphs:
///   T2          {123, 124}
///   F5          {123, 124, 345}
///   F1          {123, 345, 678, 8 9 10}            two disjoint P_2
///   F2          {123, 456, 678, 8 9 10}            P_1 plus a disjoint P_3
///   F3          {123, 145, 267, 389}               a1a2a3 = 123, b = 45, c = 67, d = 89
///   F3-completion  K_9^3 minus {45x, 67y, 89z : x,y,z in {4..9} outside the pair}
///   Hstar       K_5^3 on {2..6} plus {237, 247, 257, 267}, on 7 vertices
///   M<t>        matching(t, r), e.g. "M2"
///   P<t>        linear_path(t)
///   K<t>, K<t>- complete / complete_minus with uniformity r
/// Throws ValidationError on an unknown id.
Hypergraph named(std::string_view id, int r = 3);

// ---------------------------------------------------------------------------
// Combinatorial operators.

/// True iff every pair of vertices in [n] lies inside some edge.
bool covers_pairs(const Hypergraph& g);

/// (r-1)-graph on [n] whose edges are e \ {i} for edges e containing i.
Hypergraph link(const Hypergraph& g, Vertex i);

/// L_G(j \ i): (r-1)-sets f avoiding i and j with f+j in G and f+i not in G.
std::vector<Edge> link_diff(const Hypergraph& g, Vertex j, Vertex i);

/// The compression of j to i.
Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j);

/// True iff L_G(j \ i) is empty for all i < j.
bool is_left_compressed(const Hypergraph& g);

/// G[U] relabeled to 1..|U| preserving order.
Hypergraph induced(const Hypergraph& g, std::span<const Vertex> subset);

/// Deletes vertex v and shifts the higher ids down by one.
Hypergraph delete_vertex(const Hypergraph& g, Vertex v);

/// Applies `perm` (perm[v-1] is the new id of v) to every edge.
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

/// Blowup of `pattern`: vertex v is replaced by sizes[v-1] copies, the copies of
/// vertex 1 first.
Hypergraph blowup(const Hypergraph& pattern, std::span<const std::size_t> sizes);

/// Balanced part sizes of T_m^r(n), nondecreasing.
std::vector<std::size_t> balanced_parts(int m, std::size_t n);
/// T_m^r(n), the balanced blowup of K_m^r.
Hypergraph turan_blowup(int m, int r, std::size_t n);
/// |T_m^r(n)|: number of r-sets meeting each balanced part at most once.
std::uint64_t turan_count(int m, int r, std::size_t n);

/// H^F: one edge {u, v} + B_uv per uncovered pair, fresh vertices appended in
/// lexicographic order of the uncovered pairs.
Hypergraph extension(const Hypergraph& f);

/// Coarsest partition in which every transposition of two same-class vertices is an
/// automorphism, i.e. L(i \ j) = L(j \ i) = {} within a class.
VertexPartition equivalence_classes(const Hypergraph& g);

/// Coarsest partition into classes of vertices with literally equal links. Such
/// vertices are pairwise nonadjacent.
VertexPartition link_classes(const Hypergraph& g);

/// Replaces the link of u by a copy of the link of v, skipping members of L(v)
/// that contain u.
Hypergraph symmetrize(const Hypergraph& g, Vertex u, Vertex v);

/// True iff some edge contains both u and v.
bool adjacent(const Hypergraph& g, Vertex u, Vertex v);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hlag
