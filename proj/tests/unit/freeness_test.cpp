#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/generators.hpp"

using namespace hlag;

namespace {

// Tries every injective map V(f) -> V(g).
bool brute_contains(const Hypergraph& g, const Hypergraph& f) {
  const std::size_t n = g.order();
  const std::size_t k = f.order();
  if (k > n) return false;
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{1});
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vertex> image;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) image.push_back(ids[v]);
    }
    do {
      bool all = true;
      for (const Edge& e : f.edges()) {
        std::vector<Vertex> mapped;
        for (Vertex u : e) mapped.push_back(image[u - 1]);
        if (!g.has_edge(Edge(std::span<const Vertex>(mapped)))) {
          all = false;
          break;
        }
      }
      if (all) return true;
    } while (std::next_permutation(image.begin(), image.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::vector<std::vector<Vertex>> subsets(Vertex n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (pick[v]) s.push_back(v + 1);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("containment examples") {
  const auto witness = contains(complete(7, 3), linear_path(3));
  REQUIRE(witness);
  CHECK(is_embedding(complete(7, 3), linear_path(3), *witness));
  CHECK(is_free(complete(6, 3), linear_path(3)));
  const auto t2 = contains(named("F5"), named("T2"));
  REQUIRE(t2);
  CHECK(is_embedding(named("F5"), named("T2"), *t2));
  CHECK_THROWS_AS(contains(complete(4, 3), complete(3, 2)), ValidationError);
}

TEST_CASE("containment matches brute force") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<Vertex> small(3, 5);
  std::uniform_int_distribution<Vertex> big(4, 7);
  std::uniform_real_distribution<double> p(0.15, 0.7);
  int found = 0;
  for (int k = 0; k < 400; ++k) {
    const Hypergraph f = random_hypergraph(small(rng), 3, 0.3, rng);
    const Hypergraph g = random_hypergraph(big(rng), 3, p(rng), rng);
    const auto witness = contains(g, f);
    CHECK(witness.has_value() == brute_contains(g, f));
    if (witness) {
      ++found;
      CHECK(is_embedding(g, f, *witness));
    }
  }
  CHECK(found > 50);
}

TEST_CASE("containment is invariant under relabeling") {
  std::mt19937_64 rng(103);
  for (int k = 0; k < 300; ++k) {
    const Hypergraph g = random_hypergraph(8, 3, 0.2, rng);
    const Hypergraph h = relabel(g, random_permutation(8, rng));
    for (int t = 2; t <= 3; ++t) CHECK(is_free(g, linear_path(t)) == is_free(h, linear_path(t)));
    CHECK(is_free(g, named("F5")) == is_free(h, named("F5")));
  }
}

TEST_CASE("linear path search agrees with generic containment") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<Vertex> order(3, 9);
  std::uniform_real_distribution<double> p(0.02, 0.35);
  std::uniform_int_distribution<int> length(2, 4);
  int present = 0;
  for (int k = 0; k < 10000; ++k) {
    const Hypergraph g = random_hypergraph(order(rng), 3, p(rng), rng);
    const int t = length(rng);
    const auto fast = contains_linear_path(g, t);
    const bool slow = contains(g, linear_path(t)).has_value();
    REQUIRE(fast.has_value() == slow);
    if (fast) {
      ++present;
      CHECK(is_embedding(g, linear_path(t), *fast));
    }
  }
  CHECK(present > 1000);
  CHECK_FALSE(contains_linear_path(complete(8, 3), 4));
  const auto self = contains_linear_path(linear_path(4), 4);
  REQUIRE(self);
  CHECK(is_embedding(linear_path(4), linear_path(4), *self));
}

TEST_CASE("containment through a fixed edge") {
  std::mt19937_64 rng(109);
  for (int k = 0; k < 300; ++k) {
    const Hypergraph g = random_hypergraph(8, 3, 0.25, rng);
    if (g.empty()) continue;
    const Edge e = g.edges()[k % g.size()];
    const auto through = contains_linear_path_through(g, 3, e);
    const auto generic = contains_through(g, linear_path(3), e);
    CHECK(through.has_value() == generic.has_value());
    if (through) {
      CHECK(is_embedding(g, linear_path(3), *through));
      bool uses = false;
      const Hypergraph path = linear_path(3);
      for (const Edge& pe : path.edges()) {
        uses = uses || Edge{(*through)(pe[0]), (*through)(pe[1]), (*through)(pe[2])} == e;
      }
      CHECK(uses);
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(complete(5, 3), relabel(complete(5, 3), std::vector<Vertex>{5, 4, 3, 2, 1})));
  CHECK_FALSE(isomorphic(linear_path(2), named("T2")));
  CHECK_FALSE(isomorphic(complete(4, 3), complete_minus(4, 3)));
}

TEST_CASE("cores with every pair covered") {
  CHECK(contains_core(complete(7, 3), linear_path(3), 7));
  const Hypergraph t6 = turan_blowup(6, 3, 12);
  CHECK_FALSE(contains_core(t6, linear_path(3), 7));
  // Exhaustive scan of 7-subsets: some pair always shares a part.
  int covering = 0;
  for (const auto& s : subsets(12, 7)) covering += covers_pairs(induced(t6, s)) ? 1 : 0;
  CHECK(covering == 0);
  CHECK_FALSE(contains_core(complete(5, 3), named("T2"), 6));
  CHECK(contains_core(complete_minus(6, 3), named("F5"), 6) == brute_contains(complete_minus(6, 3), named("F5")));
}

TEST_CASE("left-compression loop") {
  const CompressionLoopResult padded = left_compress_loop(Hypergraph(3, 7, complete(6, 3).edges()), 3);
  CHECK(padded.graph == complete(6, 3));
  CHECK(padded.steps.empty());
  CHECK(std::abs(padded.lambda_out - 5.0 / 54) <= 1e-9);

  const CompressionLoopResult fixed = left_compress_loop(complete(5, 3), 3);
  CHECK(fixed.graph == complete(5, 3));

  // Dense but not compressible by relabeling alone.
  const Hypergraph mixed(3, 7, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 3, 7}, {1, 4, 7}, {1, 5, 7},
                                {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {2, 4, 7}, {2, 5, 7}, {3, 5, 7}, {4, 5, 7}});
  const CompressionLoopResult stepped = left_compress_loop(mixed, 3);
  CHECK(stepped.steps.size() == 3);
  CHECK(is_left_compressed(stepped.graph));
  CHECK(stepped.lambda_out >= stepped.lambda_in - 1e-8);
  for (const auto& step : stepped.steps) CHECK(step.i < step.j);

  std::mt19937_64 rng(113);
  for (int k = 0; k < 40; ++k) {
    const Hypergraph g = random_covers_pairs_path_free(7, 3, rng);
    const CompressionLoopResult r = left_compress_loop(g, 3);
    CHECK(is_left_compressed(r.graph));
    CHECK_FALSE(contains_linear_path(r.graph, 3));
    CHECK(r.lambda_out >= r.lambda_in - 1e-8);
  }

  CHECK_THROWS_AS(left_compress_loop(complete(7, 3), 3), ValidationError);
  CHECK_THROWS_AS(left_compress_loop(complete(6, 3), 5), ValidationError);
  // K6 is P4-free but lies below the t = 4 floor.
  CHECK_THROWS_AS(left_compress_loop(complete(6, 3), 4), ValidationError);
  CHECK(left_compress_loop(complete(8, 3), 4).graph == complete(8, 3));
}

TEST_CASE("symmetrization with cleaning") {
  const SymmetrizeCleanResult k5 = symmetrize_clean(complete(5, 3), 0.5);
  CHECK(k5.graph == complete(5, 3));
  CHECK(k5.steps.empty());

  // 1 and 4 are the first nonadjacent pair; 4 takes the link of 1, leaving 5 and 6
  // isolated. They are removed and the remaining pair 1, 4 is a twin class.
  const SymmetrizeCleanResult two = symmetrize_clean(Hypergraph(3, 6, {{1, 2, 3}, {4, 5, 6}}), 0.01);
  REQUIRE(two.steps.size() == 1);
  CHECK(two.steps[0].u == 1);
  CHECK(two.steps[0].v == 4);
  CHECK(two.steps[0].class_size == 1);
  CHECK(two.steps[0].edges_before == 2);
  CHECK(two.steps[0].edges_symmetrized == 2);
  CHECK(two.steps[0].edges_cleaned == 2);
  CHECK(two.steps[0].removed == std::vector<Vertex>{5, 6});
  CHECK(two.graph == Hypergraph(3, 4, {{1, 2, 3}, {2, 3, 4}}));
  CHECK(covers_pairs(delete_vertex(two.graph, 4)));

  const SymmetrizeCleanResult empty = symmetrize_clean(Hypergraph(3, 4, std::vector<Edge>{}), 0.3);
  CHECK(empty.graph.empty());
  CHECK_THROWS_AS(symmetrize_clean(complete(4, 3), 0.0), ValidationError);

  std::mt19937_64 rng(127);
  for (int k = 0; k < 30; ++k) {
    const Hypergraph g = random_hypergraph(7, 3, 0.35, rng);
    const SymmetrizeCleanResult r = symmetrize_clean(g, 0.1);
    if (r.graph.empty()) continue;
    CHECK(is_alpha_dense(r.graph, 0.1));
    // No nonadjacent pair survives outside a twin class.
    const VertexPartition classes = link_classes(r.graph);
    for (Vertex a = 1; a <= r.graph.order(); ++a) {
      for (Vertex b = a + 1; b <= r.graph.order(); ++b) {
        if (!adjacent(r.graph, a, b)) CHECK(classes.class_of(a) == classes.class_of(b));
      }
    }
  }
}

TEST_CASE("structural checks") {
  std::mt19937_64 rng(131);
  for (int k = 0; k < 40; ++k) {
    const Hypergraph g = random_covers_pairs_path_free(static_cast<Vertex>(9 + k % 2), 4, rng);
    for (const LemmaReport& r : check_lemma_structures(g, {MaximizeOptions::fast(), 1e-9})) {
      CAPTURE(r.check);
      CHECK_FALSE(r.violated);
      if (r.check == "F1-free" || r.check == "F2-free") CHECK(r.applicable);
    }
  }

  const auto k5 = check_lemma_structures(complete(5, 3));
  const auto two = std::find_if(k5.begin(), k5.end(), [](const LemmaReport& r) { return r.check == "intersection-2"; });
  REQUIRE(two != k5.end());
  CHECK(two->applicable);
  REQUIRE(two->witness_edges);
  CHECK_FALSE(two->violated);

  const auto f1 = check_lemma_structures(named("F1"));
  CHECK(f1[0].check == "F1-free");
  CHECK(f1[0].witness_embedding.has_value());
  CHECK_FALSE(f1[0].applicable);
}
