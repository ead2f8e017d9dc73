#include "hlag/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hlag/error.hpp"

namespace hlag {

// ---------------------------------------------------------------------------
// Edge

Edge::Edge(std::initializer_list<Vertex> ids) : Edge(std::span<const Vertex>(ids.begin(), ids.size())) {}

Edge::Edge(std::span<const Vertex> ids) {
  if (ids.size() > kMaxUniformity) {
    throw ValidationError("edge has " + std::to_string(ids.size()) + " vertices; at most " +
                          std::to_string(kMaxUniformity) + " supported");
  }
  std::copy(ids.begin(), ids.end(), ids_.begin());
  size_ = static_cast<std::uint8_t>(ids.size());
  normalize();
}

void Edge::normalize() {
  std::sort(ids_.begin(), ids_.begin() + size_);
  for (std::size_t k = 0; k < size_; ++k) {
    if (ids_[k] == 0) throw ValidationError("edge " + to_string() + " contains vertex id 0");
    if (k > 0 && ids_[k] == ids_[k - 1]) {
      throw ValidationError("edge " + to_string() + " repeats vertex " + std::to_string(ids_[k]));
    }
  }
}

bool Edge::contains(Vertex v) const noexcept {
  return std::binary_search(begin(), end(), v);
}

Edge Edge::without(Vertex v) const {
  Edge out;
  for (Vertex u : *this) {
    if (u != v) out.ids_[out.size_++] = u;
  }
  if (out.size_ == size_) throw ValidationError("edge " + to_string() + " does not contain " + std::to_string(v));
  return out;
}

Edge Edge::with(Vertex v) const {
  if (size_ == kMaxUniformity) throw ValidationError("edge is already at maximum size");
  Edge out = *this;
  out.ids_[out.size_++] = v;
  out.normalize();
  return out;
}

std::uint64_t Edge::mask() const noexcept {
  std::uint64_t m = 0;
  for (Vertex v : *this) m |= std::uint64_t{1} << (v - 1);
  return m;
}

std::string Edge::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < size_; ++k) {
    if (k) s += ',';
    s += std::to_string(ids_[k]);
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t VertexPartition::class_of(Vertex v) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].begin(), classes[c].end(), v)) return c;
  }
  throw ValidationError("vertex " + std::to_string(v) + " is in no class");
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(int r, Vertex n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
  if (r < 1 || static_cast<std::size_t>(r) > kMaxUniformity) {
    throw ValidationError("uniformity " + std::to_string(r) + " outside [1, " + std::to_string(kMaxUniformity) + "]");
  }
  for (const Edge& e : edges_) {
    if (e.size() != static_cast<std::size_t>(r)) {
      throw ValidationError("edge " + e.to_string() + " has arity " + std::to_string(e.size()) +
                            ", expected " + std::to_string(r));
    }
    if (e.back() > n) {
      throw ValidationError("edge " + e.to_string() + " has vertex " + std::to_string(e.back()) + " > n = " +
                            std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

namespace {

std::vector<Edge> to_edges(std::initializer_list<std::initializer_list<Vertex>> lists) {
  std::vector<Edge> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int r, Vertex n, std::initializer_list<std::initializer_list<Vertex>> edges)
    : Hypergraph(r, n, to_edges(edges)) {}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const Edge& e : edges_) {
    for (Vertex v : e) ++d[v - 1];
  }
  return d;
}

std::size_t Hypergraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

std::string Hypergraph::to_string() const {
  std::ostringstream os;
  os << "r=" << r_ << " n=" << n_ << " [";
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k) os << ' ';
    for (Vertex v : edges_[k]) os << v << (edges_[k].back() == v ? "" : ".");
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Constructions

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

namespace {

// Calls fn(edge) for every r-subset of `ground` in lexicographic order.
template <class Fn>
void for_each_subset(std::span<const Vertex> ground, int r, Fn&& fn) {
  const std::size_t m = ground.size();
  if (r < 0 || static_cast<std::size_t>(r) > m) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> ids(static_cast<std::size_t>(r));
  while (true) {
    for (std::size_t k = 0; k < idx.size(); ++k) ids[k] = ground[idx[k]];
    fn(Edge(std::span<const Vertex>(ids)));
    int k = r - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - static_cast<std::size_t>(r) + static_cast<std::size_t>(k)) --k;
    if (k < 0) return;
    ++idx[static_cast<std::size_t>(k)];
    for (std::size_t q = static_cast<std::size_t>(k) + 1; q < idx.size(); ++q) idx[q] = idx[q - 1] + 1;
  }
}

std::vector<Vertex> range_ids(Vertex first, Vertex last) {
  std::vector<Vertex> v;
  for (Vertex x = first; x <= last; ++x) v.push_back(x);
  return v;
}

}  // namespace

Hypergraph complete(int t, int r) {
  if (r < 1 || t < r) throw ValidationError("complete graph needs t >= r >= 1");
  std::vector<Edge> edges;
  auto ground = range_ids(1, static_cast<Vertex>(t));
  for_each_subset(ground, r, [&](const Edge& e) { edges.push_back(e); });
  return Hypergraph(r, static_cast<Vertex>(t), std::move(edges));
}

Hypergraph complete_minus(int t, int r) {
  Hypergraph k = complete(t, r);
  auto top = range_ids(static_cast<Vertex>(t - r + 1), static_cast<Vertex>(t));
  std::vector<Edge> edges;
  Edge missing{std::span<const Vertex>(top)};
  for (const Edge& e : k.edges()) {
    if (e != missing) edges.push_back(e);
  }
  return Hypergraph(r, static_cast<Vertex>(t), std::move(edges));
}

Hypergraph linear_path(int t) {
  if (t < 1) throw ValidationError("linear path needs t >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= static_cast<Vertex>(t); ++i) edges.push_back(Edge{2 * i - 1, 2 * i, 2 * i + 1});
  return Hypergraph(3, static_cast<Vertex>(2 * t + 1), std::move(edges));
}

Hypergraph matching(int t, int r) {
  if (t < 0 || r < 1) throw ValidationError("matching needs t >= 0 and r >= 1");
  std::vector<Edge> edges;
  for (int k = 0; k < t; ++k) {
    auto ids = range_ids(static_cast<Vertex>(k * r + 1), static_cast<Vertex>((k + 1) * r));
    edges.emplace_back(std::span<const Vertex>(ids));
  }
  return Hypergraph(r, static_cast<Vertex>(t * r), std::move(edges));
}

namespace {

int parse_positive(std::string_view digits, std::string_view id) {
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError("unknown named graph '" + std::string(id) + "'");
  }
  return std::stoi(std::string(digits));
}

Hypergraph f3_completion() {
  std::vector<Edge> edges;
  const std::array<std::array<Vertex, 2>, 3> pairs{{{4, 5}, {6, 7}, {8, 9}}};
  const Hypergraph k9 = complete(9, 3);
  for (const Edge& e : k9.edges()) {
    bool removed = false;
    for (const auto& p : pairs) {
      if (e.contains(p[0]) && e.contains(p[1])) {
        Vertex third = e.without(p[0]).without(p[1]).front();
        if (third >= 4) removed = true;
      }
    }
    if (!removed) edges.push_back(e);
  }
  return Hypergraph(3, 9, std::move(edges));
}

Hypergraph h_star() {
  std::vector<Edge> edges;
  std::vector<Vertex> ground{2, 3, 4, 5, 6};
  for_each_subset(ground, 3, [&](const Edge& e) { edges.push_back(e); });
  for (Vertex v : {3u, 4u, 5u, 6u}) edges.push_back(Edge{2, v, 7});
  return Hypergraph(3, 7, std::move(edges));
}

}  // namespace

Hypergraph named(std::string_view id, int r) {
  if (id == "T2") return Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}});
  if (id == "F5") return Hypergraph(3, 5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
  if (id == "F1") return Hypergraph(3, 10, {{1, 2, 3}, {3, 4, 5}, {6, 7, 8}, {8, 9, 10}});
  if (id == "F2") return Hypergraph(3, 10, {{1, 2, 3}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}});
  if (id == "F3") return Hypergraph(3, 9, {{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9}});
  if (id == "F3-completion") return f3_completion();
  if (id == "Hstar") return h_star();
  if (!id.empty() && id.front() == 'M') return matching(parse_positive(id.substr(1), id), r);
  if (!id.empty() && id.front() == 'P') return linear_path(parse_positive(id.substr(1), id));
  if (!id.empty() && id.front() == 'K') {
    if (id.back() == '-') return complete_minus(parse_positive(id.substr(1, id.size() - 2), id), r);
    return complete(parse_positive(id.substr(1), id), r);
  }
  throw ValidationError("unknown named graph '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Operators

namespace {

void require_vertex(const Hypergraph& g, Vertex v, const char* what) {
  if (v < 1 || v > g.order()) {
    throw ValidationError(std::string(what) + " vertex " + std::to_string(v) + " outside [1, " +
                          std::to_string(g.order()) + "]");
  }
}

}  // namespace

bool adjacent(const Hypergraph& g, Vertex u, Vertex v) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return e.contains(u) && e.contains(v); });
}

bool covers_pairs(const Hypergraph& g) {
  const Vertex n = g.order();
  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    for (Vertex a : e) {
      for (Vertex b : e) covered[(a - 1) * n + (b - 1)] = 1;
    }
  }
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (!covered[(a - 1) * n + (b - 1)]) return false;
    }
  }
  return true;
}

Hypergraph link(const Hypergraph& g, Vertex i) {
  require_vertex(g, i, "link");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.contains(i)) edges.push_back(e.without(i));
  }
  return Hypergraph(g.uniformity() - 1, g.order(), std::move(edges));
}

std::vector<Edge> link_diff(const Hypergraph& g, Vertex j, Vertex i) {
  require_vertex(g, i, "link_diff");
  require_vertex(g, j, "link_diff");
  if (i == j) throw ValidationError("link_diff needs distinct vertices");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!e.contains(j) || e.contains(i)) continue;
    Edge f = e.without(j);
    if (!g.has_edge(f.with(i))) out.push_back(f);
  }
  return out;
}

Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j) {
  require_vertex(g, i, "compress");
  require_vertex(g, j, "compress");
  if (i == j) throw ValidationError("compress needs distinct vertices");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (e.contains(j) && !e.contains(i)) {
      Edge moved = e.without(j).with(i);
      if (!g.has_edge(moved)) {
        edges.push_back(moved);
        continue;
      }
    }
    edges.push_back(e);
  }
  return Hypergraph(g.uniformity(), g.order(), std::move(edges));
}

bool is_left_compressed(const Hypergraph& g) {
  for (const Edge& e : g.edges()) {
    for (Vertex j : e) {
      for (Vertex i = 1; i < j; ++i) {
        if (e.contains(i)) continue;
        if (!g.has_edge(e.without(j).with(i))) return false;
      }
    }
  }
  return true;
}

Hypergraph induced(const Hypergraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> u(subset.begin(), subset.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (Vertex v : u) require_vertex(g, v, "induced");
  std::vector<Vertex> new_id(g.order() + 1, 0);
  for (std::size_t k = 0; k < u.size(); ++k) new_id[u[k]] = static_cast<Vertex>(k + 1);
  std::vector<Edge> edges;
  std::array<Vertex, kMaxUniformity> buf{};
  for (const Edge& e : g.edges()) {
    bool inside = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      buf[k] = new_id[e[k]];
      inside = inside && buf[k] != 0;
    }
    if (inside) edges.emplace_back(std::span<const Vertex>(buf.data(), e.size()));
  }
  return Hypergraph(g.uniformity(), static_cast<Vertex>(u.size()), std::move(edges));
}

Hypergraph delete_vertex(const Hypergraph& g, Vertex v) {
  require_vertex(g, v, "delete_vertex");
  std::vector<Vertex> keep;
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(g, keep);
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw ValidationError("relabel permutation has wrong length");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  std::array<Vertex, kMaxUniformity> buf{};
  for (const Edge& e : g.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) buf[k] = perm[e[k] - 1];
    edges.emplace_back(std::span<const Vertex>(buf.data(), e.size()));
  }
  return Hypergraph(g.uniformity(), g.order(), std::move(edges));
}

Hypergraph blowup(const Hypergraph& pattern, std::span<const std::size_t> sizes) {
  if (sizes.size() != pattern.order()) {
    throw ValidationError("blowup needs one part size per pattern vertex (" + std::to_string(pattern.order()) +
                          "), got " + std::to_string(sizes.size()));
  }
  std::vector<Vertex> first(sizes.size() + 1, 1);
  for (std::size_t v = 0; v < sizes.size(); ++v) first[v + 1] = first[v] + static_cast<Vertex>(sizes[v]);
  const Vertex n = first.back() - 1;
  std::vector<Edge> edges;
  const std::size_t r = static_cast<std::size_t>(pattern.uniformity());
  std::vector<Vertex> ids(r);
  for (const Edge& e : pattern.edges()) {
    std::vector<std::size_t> pick(r, 0);
    bool nonempty = true;
    for (std::size_t k = 0; k < r; ++k) nonempty = nonempty && sizes[e[k] - 1] > 0;
    if (!nonempty) continue;
    while (true) {
      for (std::size_t k = 0; k < r; ++k) ids[k] = first[e[k] - 1] + static_cast<Vertex>(pick[k]);
      edges.emplace_back(std::span<const Vertex>(ids));
      std::size_t k = 0;
      while (k < r && ++pick[k] == sizes[e[k] - 1]) pick[k++] = 0;
      if (k == r) break;
    }
  }
  return Hypergraph(pattern.uniformity(), n, std::move(edges));
}

std::vector<std::size_t> balanced_parts(int m, std::size_t n) {
  if (m < 1) throw ValidationError("balanced partition needs m >= 1");
  const std::size_t parts = static_cast<std::size_t>(m);
  std::vector<std::size_t> sizes(parts, n / parts);
  for (std::size_t k = 0; k < n % parts; ++k) ++sizes[parts - 1 - k];
  return sizes;
}

Hypergraph turan_blowup(int m, int r, std::size_t n) {
  if (m < r) throw ValidationError("turan_blowup needs m >= r");
  auto parts = balanced_parts(m, n);
  return blowup(complete(m, r), parts);
}

std::uint64_t turan_count(int m, int r, std::size_t n) {
  if (m < r) throw ValidationError("turan_count needs m >= r");
  // Elementary symmetric polynomial e_r of the part sizes.
  std::vector<std::uint64_t> e(static_cast<std::size_t>(r) + 1, 0);
  e[0] = 1;
  for (std::size_t size : balanced_parts(m, n)) {
    for (std::size_t k = static_cast<std::size_t>(r); k >= 1; --k) e[k] += e[k - 1] * size;
  }
  return e[static_cast<std::size_t>(r)];
}

Hypergraph extension(const Hypergraph& f) {
  const Vertex n = f.order();
  const int r = f.uniformity();
  std::vector<Edge> edges = f.edges();
  Vertex next = n + 1;
  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : f.edges()) {
    for (Vertex a : e) {
      for (Vertex b : e) covered[(a - 1) * n + (b - 1)] = 1;
    }
  }
  std::vector<Vertex> ids;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (covered[(a - 1) * n + (b - 1)]) continue;
      ids = {a, b};
      for (int k = 0; k < r - 2; ++k) ids.push_back(next++);
      edges.emplace_back(std::span<const Vertex>(ids));
    }
  }
  return Hypergraph(r, next - 1, std::move(edges));
}

namespace {

bool twins(const Hypergraph& g, Vertex a, Vertex b) {
  return link_diff(g, a, b).empty() && link_diff(g, b, a).empty();
}

template <class Same>
VertexPartition group(Vertex n, Same same) {
  VertexPartition p;
  for (Vertex v = 1; v <= n; ++v) {
    bool placed = false;
    for (auto& cls : p.classes) {
      if (same(cls.front(), v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) p.classes.push_back({v});
  }
  return p;
}

}  // namespace

VertexPartition equivalence_classes(const Hypergraph& g) {
  return group(g.order(), [&](Vertex a, Vertex b) { return twins(g, a, b); });
}

VertexPartition link_classes(const Hypergraph& g) {
  std::vector<Hypergraph> links;
  links.reserve(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) links.push_back(link(g, v));
  return group(g.order(), [&](Vertex a, Vertex b) { return links[a - 1] == links[b - 1]; });
}

Hypergraph symmetrize(const Hypergraph& g, Vertex u, Vertex v) {
  require_vertex(g, u, "symmetrize");
  require_vertex(g, v, "symmetrize");
  if (u == v) throw ValidationError("symmetrize needs distinct vertices");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!e.contains(u)) edges.push_back(e);
  }
  for (const Edge& e : g.edges()) {
    if (!e.contains(v)) continue;
    Edge a = e.without(v);
    if (!a.contains(u)) edges.push_back(a.with(u));
  }
  return Hypergraph(g.uniformity(), g.order(), std::move(edges));
}

}  // namespace hlag
