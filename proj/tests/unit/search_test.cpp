#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/generators.hpp"
#include "hlag/io.hpp"
#include "hlag/search.hpp"

using namespace hlag;

namespace {

bool dominance_closed(const std::vector<Edge>& edges, const GroundSet& ground) {
  std::vector<char> in(ground.size(), 0);
  for (const Edge& e : edges) in[ground.index_of(e)] = 1;
  for (const Edge& e : edges) {
    for (const Edge& d : ground.elements()) {
      if (d[0] <= e[0] && d[1] <= e[1] && d[2] <= e[2] && !in[ground.index_of(d)]) return false;
    }
  }
  return true;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hlag_search_test_" + name);
}

DensityEvidenceOptions quick_density() {
  DensityEvidenceOptions d;
  d.full = MaximizeOptions::fast();
  return d;
}

}  // namespace

TEST_CASE("ground set order and covers") {
  const GroundSet g(4, 3);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == Edge{1, 2, 3});
  CHECK(g[1] == Edge{1, 2, 4});
  CHECK(g[2] == Edge{1, 3, 4});
  CHECK(g[3] == Edge{2, 3, 4});
  CHECK(g.lower_covers(3) == std::vector<std::uint32_t>{2});
  CHECK(g.lower_covers(0).empty());
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.index_of(g[k]) == k);

  // Colex order extends dominance.
  const GroundSet big(7, 3);
  for (std::size_t a = 0; a < big.size(); ++a) {
    for (std::uint32_t c : big.lower_covers(a)) CHECK(c < a);
  }
}

TEST_CASE("down-set enumeration") {
  std::size_t count = 0;
  enumerate_left_compressed(4, 3, {}, [&](const Hypergraph&) { ++count; });
  CHECK(count == 5);

  // Filter all 2^10 subsets of the 5-vertex ground set by dominance.
  const GroundSet ground(5, 3);
  std::size_t oracle = 0;
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(ground[k]);
    }
    oracle += dominance_closed(edges, ground) ? 1 : 0;
  }
  count = 0;
  enumerate_left_compressed(5, 3, {}, [&](const Hypergraph& g) {
    ++count;
    CHECK(is_left_compressed(g));
  });
  CHECK(count == oracle);

  const Edge first{1, 2, 3};
  const Prune has_first = [first](const PartialGraph& p, std::size_t added) {
    return p.ground()[added] == first;
  };
  std::vector<Hypergraph> survivors;
  enumerate_left_compressed(5, 3, has_first, [&](const Hypergraph& g) { survivors.push_back(g); });
  REQUIRE(survivors.size() == 1);
  CHECK(survivors[0].empty());
}

TEST_CASE("whole-space enumeration") {
  std::size_t count = 0;
  enumerate_all(4, 3, {}, [&](const Hypergraph&) { ++count; });
  CHECK(count == 16);

  double best = 0.0;
  enumerate_all(5, 3, [](const Hypergraph& g) { return is_free(g, linear_path(2)); },
                [&](const Hypergraph& g) { best = std::max(best, maximize(g, MaximizeOptions::fast()).value); });
  CHECK(std::abs(best - 1.0 / 16) <= 1e-9);

  const Hypergraph k4 = complete(4, 3);
  std::size_t with = 0;
  std::size_t without = 0;
  enumerate_all(6, 3, [&](const Hypergraph& g) { return !is_free(g, k4); }, [&](const Hypergraph&) { ++with; });
  enumerate_all(6, 3, [&](const Hypergraph& g) { return is_free(g, k4); }, [&](const Hypergraph&) { ++without; });
  CHECK(with + without == (std::size_t{1} << 20));
  CHECK(with > 0);

  CHECK_THROWS_AS(enumerate_all(7, 3, {}, [](const Hypergraph&) {}), ValidationError);
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const Hypergraph g = random_hypergraph(6, 3, 0.4, rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, random_permutation(6, rng))));
  }
  CHECK(canonical_form(linear_path(2)) != canonical_form(named("T2")));
}

TEST_CASE("Turan numbers") {
  CHECK(turan_number(4, {named("F5")}).max_edges == 4);
  CHECK(turan_number(6, {complete(3, 3)}).max_edges == 0);

  const TuranResult bb = turan_number(5, {named("F5")});
  TuranOptions ws_options;
  ws_options.strategy = TuranStrategy::whole_space;
  const TuranResult ws = turan_number(5, {named("F5")}, ws_options);
  CHECK(bb.max_edges >= 6);
  CHECK(bb.max_edges <= 9);
  CHECK(bb.max_edges == ws.max_edges);
  CHECK(bb.witnesses == ws.witnesses);
  for (const Hypergraph& w : bb.witnesses) {
    CHECK(is_free(w, named("F5")));
    CHECK(w.size() == bb.max_edges);
  }

  std::size_t previous = 0;
  for (Vertex n = 3; n <= 7; ++n) {
    const TuranResult r = turan_number(n, {named("F5")});
    CHECK(r.status == TuranStatus::exact);
    CHECK(r.max_edges >= previous);
    previous = r.max_edges;
  }

  TuranOptions capped;
  capped.enumeration.max_nodes = 50;
  const TuranResult partial = turan_number(7, {named("F5")}, capped);
  CHECK(partial.status == TuranStatus::lower_bound);
  CHECK(partial.max_edges <= previous);
}

TEST_CASE("density evidence") {
  DensityEvidenceOptions all = quick_density();
  all.mode = DensityMode::all;
  const DensityReport p2 = density_evidence("P2", 6, all);
  REQUIRE(p2.best);
  CHECK(std::abs(p2.best->lambda - 1.0 / 16) <= 1e-9);

  const DensityReport p3 = density_evidence("P3", 7, quick_density());
  REQUIRE(p3.best);
  REQUIRE(p3.best_core);
  CHECK(std::abs(p3.best->lambda - 5.0 / 54) <= 1e-7);
  CHECK(isomorphic(*p3.best_core, complete(6, 3)));
  CHECK(p3.status == RunStatus::complete);
  const nlohmann::json j = to_json(p3);
  CHECK(j.at("counts").at("visited") == p3.stats.visited);
  CHECK(j.at("separations").at("clique_order") == 6);
}

TEST_CASE("parallel runs match serial runs") {
  DensityEvidenceOptions serial = quick_density();
  serial.enumeration.shard_depth = 10;
  DensityEvidenceOptions parallel = serial;
  parallel.enumeration.threads = 4;
  const nlohmann::json a = to_json(density_evidence("P3", 7, serial));
  const nlohmann::json b = to_json(density_evidence("P3", 7, parallel));
  CHECK(a == b);

  DensityEvidenceOptions unsharded = quick_density();
  const nlohmann::json c = to_json(density_evidence("P3", 7, unsharded));
  CHECK(c.at("max_lambda") == a.at("max_lambda"));
  CHECK(c.at("argmax_graph") == a.at("argmax_graph"));
  CHECK(c.at("counts").at("visited") == a.at("counts").at("visited"));
  CHECK(c.at("counts").at("maximal_free") == a.at("counts").at("maximal_free"));
}

TEST_CASE("checkpoint and resume") {
  DensityEvidenceOptions base = quick_density();
  base.enumeration.shard_depth = 6;
  const DensityReport full = density_evidence("P3", 7, base);

  DensityEvidenceOptions capped = base;
  capped.enumeration.max_nodes = 400;
  DensityReport partial = density_evidence("P3", 7, capped);
  REQUIRE(partial.status == RunStatus::capped);
  REQUIRE(partial.checkpoint);

  const std::filesystem::path path = temp_path("density.json");
  int rounds = 0;
  while (partial.status == RunStatus::capped) {
    REQUIRE(rounds < 1000);
    checkpoint_save(*partial.checkpoint, path);
    const SearchCheckpoint loaded = checkpoint_resume(path);
    CHECK(to_json(loaded) == to_json(*partial.checkpoint));
    partial = density_evidence("P3", 7, capped, &loaded);
    ++rounds;
  }
  CHECK(rounds > 1);
  CHECK(to_json(partial) == to_json(full));

  // A checkpoint taken before any work resumes into the whole run.
  DensityEvidenceOptions first_node = base;
  first_node.enumeration.max_nodes = 1;
  const DensityReport start = density_evidence("P3", 7, first_node);
  REQUIRE(start.checkpoint);
  CHECK(to_json(density_evidence("P3", 7, base, &*start.checkpoint)) == to_json(full));

  CHECK_THROWS_AS(density_evidence("P3", 8, base, &*start.checkpoint), CheckpointError);
  CHECK_THROWS_AS(density_evidence("P2", 7, base, &*start.checkpoint), CheckpointError);

  nlohmann::json bumped = to_json(*start.checkpoint);
  bumped["version"] = kCheckpointVersion + 1;
  CHECK_THROWS_AS(checkpoint_from_json(bumped), CheckpointError);
  CHECK_THROWS_AS(checkpoint_from_json(nlohmann::json{{"version", 1}}), CheckpointError);
  CHECK_THROWS_AS(checkpoint_resume(temp_path("missing.json")), CheckpointError);
  std::filesystem::remove(path);
}

TEST_CASE("generators") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 50; ++k) {
    const Hypergraph a = random_left_compressed_path_free(9, 4, 0.05, rng);
    CHECK(is_left_compressed(a));
    CHECK_FALSE(contains_linear_path(a, 4));
    const Hypergraph b = random_covers_pairs_path_free(9, 4, rng);
    CHECK(covers_pairs(b));
    CHECK_FALSE(contains_linear_path(b, 4));
  }
  const std::vector<double> x = random_simplex_point(6, rng);
  double sum = 0.0;
  for (double v : x) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("P3 compressions on 7 vertices") {
  // Every compression of a left-compressed, pair-covering P3-free graph on 7 vertices
  // stays P3-free.
  std::size_t graphs = 0;
  enumerate_left_compressed(7, 3, prune_containing({linear_path(3)}), [&](const Hypergraph& g) {
    if (!covers_pairs(g)) return;
    ++graphs;
    for (Vertex i = 1; i <= 7; ++i) {
      for (Vertex j = i + 1; j <= 7; ++j) CHECK_FALSE(contains_linear_path(compress(g, i, j), 3));
    }
  });
  CHECK(graphs > 0);
}
