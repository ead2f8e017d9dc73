#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/generators.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/io.hpp"

using namespace hlag;

namespace {

Hypergraph g3(Vertex n, std::initializer_list<std::initializer_list<Vertex>> edges) { return Hypergraph(3, n, edges); }

std::vector<Edge> edges_of(std::initializer_list<std::initializer_list<Vertex>> edges) {
  std::vector<Edge> out;
  for (auto e : edges) out.emplace_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

// Down-set test straight from dominance: every triple dominated by an edge is an edge.
bool dominance_closed(const Hypergraph& g) {
  for (const Edge& e : g.edges()) {
    for (Vertex a = 1; a <= e[0]; ++a) {
      for (Vertex b = a + 1; b <= e[1]; ++b) {
        for (Vertex c = b + 1; c <= e[2]; ++c) {
          if (!g.has_edge(Edge{a, b, c})) return false;
        }
      }
    }
  }
  return true;
}

// r-subsets of [n] meeting r different parts of the balanced partition.
std::uint64_t crossing_subsets(int m, int r, std::size_t n) {
  std::vector<int> part(n);
  for (std::size_t v = 0; v < n; ++v) part[v] = static_cast<int>(v % static_cast<std::size_t>(m));
  std::uint64_t count = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - std::min<std::size_t>(n, static_cast<std::size_t>(r)), pick.end(), true);
  if (n < static_cast<std::size_t>(r)) return 0;
  do {
    std::vector<int> seen;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) seen.push_back(part[v]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace

TEST_CASE("construction normalizes and validates edges") {
  CHECK(g3(4, {{1, 2, 3}}).size() == 1);
  CHECK(g3(4, {{1, 2, 3}}).order() == 4);
  CHECK(g3(3, {{1, 2, 3}, {3, 2, 1}}).size() == 1);
  CHECK_THROWS_AS(g3(3, {{1, 2, 4}}), ValidationError);
  CHECK_THROWS_AS(g3(4, {{1, 2}}), ValidationError);
  CHECK_THROWS_AS(g3(4, {{1, 1, 2}}), ValidationError);
}

TEST_CASE("standard constructions") {
  CHECK(complete(4, 3).size() == 4);
  CHECK(complete(6, 3).size() == 20);
  CHECK(complete_minus(4, 3).edges() == edges_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));

  CHECK(linear_path(3).edges() == edges_of({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}}));
  CHECK(linear_path(3).order() == 7);
  CHECK(linear_path(1).edges() == edges_of({{1, 2, 3}}));
  CHECK(linear_path(4).order() == 9);
  CHECK(linear_path(4).size() == 4);

  CHECK(named("F5").edges() == edges_of({{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}));
  CHECK(named("M2").edges() == edges_of({{1, 2, 3}, {4, 5, 6}}));
  const Hypergraph f3 = named("F3");
  CHECK(f3.order() == 9);
  CHECK(f3.size() == 4);
  const auto deg = f3.degrees();
  CHECK(std::count(deg.begin(), deg.end(), 0u) == 0);
  CHECK(std::count(deg.begin(), deg.end(), 2u) == 3);
  CHECK(named("K6-").size() == 19);
  CHECK_THROWS_AS(named("Q7"), ValidationError);
}

TEST_CASE("covers pairs") {
  CHECK(covers_pairs(complete(4, 3)));
  CHECK_FALSE(covers_pairs(linear_path(3)));
  CHECK_FALSE(covers_pairs(named("F5")));
}

TEST_CASE("links and exclusive links") {
  CHECK(link(complete(4, 3), 1).edges() == std::vector<Edge>{Edge{2, 3}, Edge{2, 4}, Edge{3, 4}});
  CHECK(link(linear_path(3), 4).edges() == std::vector<Edge>{Edge{3, 5}});
  CHECK(link(g3(5, {{1, 2, 3}}), 5).empty());

  CHECK(link_diff(g3(4, {{2, 3, 4}}), 2, 1) == std::vector<Edge>{Edge{3, 4}});
  CHECK(link_diff(complete(4, 3), 2, 1).empty());
  CHECK(link_diff(g3(4, {{1, 2, 3}, {1, 2, 4}}), 4, 3).empty());
}

TEST_CASE("compression") {
  CHECK(compress(g3(4, {{2, 3, 4}}), 1, 2).edges() == edges_of({{1, 3, 4}}));
  CHECK(compress(complete(4, 3), 1, 2) == complete(4, 3));
  CHECK(compress(g3(5, {{1, 2, 3}, {1, 4, 5}}), 2, 4).edges() == edges_of({{1, 2, 3}, {1, 2, 5}}));

  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const Hypergraph g = random_hypergraph(6, 3, 0.4, rng);
    const Hypergraph h = compress(g, 2, 5);
    CHECK(h.size() == g.size());
    CHECK(link_diff(h, 5, 2).empty());
  }
}

TEST_CASE("left-compressed means dominance-closed") {
  CHECK(is_left_compressed(complete(5, 3)));
  CHECK_FALSE(is_left_compressed(g3(5, {{3, 4, 5}})));
  CHECK(is_left_compressed(g3(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}})));

  std::mt19937_64 rng(11);
  int closed = 0;
  for (int k = 0; k < 2000; ++k) {
    Hypergraph g = random_hypergraph(6, 3, 0.5, rng);
    // Compress fully so a fair share of samples are down-sets.
    if (k % 2 == 0) {
      for (int pass = 0; pass < 20; ++pass) {
        for (Vertex i = 1; i <= 6; ++i) {
          for (Vertex j = i + 1; j <= 6; ++j) g = compress(g, i, j);
        }
      }
    }
    const bool expected = dominance_closed(g);
    closed += expected ? 1 : 0;
    CHECK(is_left_compressed(g) == expected);
  }
  CHECK(closed > 500);
}

TEST_CASE("induced subgraphs and vertex deletion") {
  const std::vector<Vertex> first4{1, 2, 3, 4};
  CHECK(induced(complete(6, 3), first4) == complete(4, 3));
  CHECK(induced(linear_path(3), first4).edges() == edges_of({{1, 2, 3}}));
  CHECK(induced(linear_path(3), std::vector<Vertex>{}).empty());
  CHECK(delete_vertex(complete(5, 3), 2) == complete(4, 3));
}

TEST_CASE("relabeling preserves the isomorphism class") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Hypergraph g = random_hypergraph(7, 3, 0.3, rng);
    const Hypergraph h = relabel(g, random_permutation(7, rng));
    CHECK(h.size() == g.size());
    CHECK(isomorphic(g, h));
    auto dg = g.degrees();
    auto dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    CHECK(dg == dh);
  }
}

TEST_CASE("blowups and Turan counts") {
  CHECK(turan_count(3, 3, 6) == 8);
  CHECK(turan_blowup(6, 3, 6) == complete(6, 3));
  CHECK(turan_count(4, 3, 5) == 7);
  CHECK(turan_blowup(3, 3, 7).size() == 12);
  CHECK(balanced_parts(3, 7) == std::vector<std::size_t>{2, 2, 3});
  for (int m = 3; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(turan_count(m, 3, n) == crossing_subsets(m, 3, n));
      CHECK(turan_blowup(m, 3, n).size() == turan_count(m, 3, n));
    }
  }
  const std::vector<std::size_t> sizes{2, 1, 3};
  CHECK(blowup(complete(3, 3), sizes).size() == 6);
}

TEST_CASE("extension") {
  CHECK(isomorphic(extension(named("T2")), named("F5")));
  const Hypergraph e = extension(linear_path(3));
  CHECK(e.order() == 19);
  CHECK(e.size() == 15);
  CHECK(covers_pairs(induced(e, std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7})) == false);
  CHECK(extension(complete(4, 3)) == complete(4, 3));
}

TEST_CASE("equivalence classes") {
  CHECK(equivalence_classes(complete(5, 3)).classes.size() == 1);
  const VertexPartition minus = equivalence_classes(complete_minus(6, 3));
  CHECK(minus.classes == std::vector<std::vector<Vertex>>{{1, 2, 3}, {4, 5, 6}});
  const VertexPartition path = equivalence_classes(linear_path(3));
  CHECK(path.class_of(1) == path.class_of(2));
  CHECK(path.class_of(6) == path.class_of(7));
  CHECK(path.class_of(3) != path.class_of(4));
  CHECK(path.class_of(4) != path.class_of(5));
}

TEST_CASE("symmetrization") {
  CHECK(symmetrize(g3(6, {{1, 2, 3}, {4, 5, 6}}), 1, 4).edges() == edges_of({{1, 5, 6}, {4, 5, 6}}));
  const Hypergraph k5 = complete(5, 3);
  // Adjacent pairs lose the edges through both.
  CHECK(symmetrize(k5, 1, 2).size() == 7);
  CHECK_FALSE(adjacent(symmetrize(k5, 1, 2), 1, 2));
  CHECK(symmetrize(g3(4, {{1, 2, 3}}), 4, 1).edges() == edges_of({{1, 2, 3}, {2, 3, 4}}));
}

TEST_CASE("hg format round trip") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Hypergraph g = random_hypergraph(8, 3, 0.3, rng);
    CHECK(parse_hg(format_hg(g)) == g);
    CHECK(hypergraph_from_json(to_json(g)) == g);
  }
  CHECK(parse_hg("# comment\nr=3 n=4\n\n1 2 3\n") == g3(4, {{1, 2, 3}}));
  CHECK(parse_hg("r=3 n=5\n").empty());
}

TEST_CASE("parse errors carry line and column") {
  auto fails_at = [](std::string_view text, std::size_t line, std::size_t column) {
    try {
      parse_hg(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no parse error");
  };
  fails_at("r=3 m=4\n", 1, 5);
  fails_at("r=3 n=4\n1 2 3\n1 2 7\n", 3, 5);
  fails_at("r=3 n=4\n1 2\n", 2, 1);
  fails_at("r=3 n=4\n1 2 x\n", 2, 5);
  CHECK_THROWS_AS(parse_hg("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(hypergraph_from_json(nlohmann::json{{"r", 3}}), ParseError);
}
