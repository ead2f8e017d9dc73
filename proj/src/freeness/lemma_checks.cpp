#include "hlag/freeness.hpp"

namespace hlag {

namespace {

std::optional<std::pair<Edge, Edge>> edges_meeting_in(const Hypergraph& g, std::size_t k) {
  const auto& edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      std::size_t common = 0;
      for (Vertex v : edges[a]) common += edges[b].contains(v) ? 1 : 0;
      if (common == k) return std::pair{edges[a], edges[b]};
    }
  }
  return std::nullopt;
}

}  // namespace

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json j{{"check", report.check}, {"applicable", report.applicable}, {"violated", report.violated}};
  if (report.witness_embedding) j["witness_embedding"] = to_json(*report.witness_embedding);
  if (report.witness_edges) {
    const auto& [a, b] = *report.witness_edges;
    j["witness_edges"] = {std::vector<Vertex>(a.begin(), a.end()), std::vector<Vertex>(b.begin(), b.end())};
  }
  return j;
}

std::vector<LemmaReport> check_lemma_structures(const Hypergraph& g, const DensityOptions& options) {
  std::vector<LemmaReport> out;
  if (g.uniformity() != 3) return out;

  const bool path_case = g.order() >= 9 && covers_pairs(g) && !contains_linear_path(g, 4);
  for (const char* name : {"F1", "F2"}) {
    LemmaReport r;
    r.check = std::string(name) + "-free";
    r.applicable = path_case;
    r.witness_embedding = contains(g, named(name));
    r.violated = path_case && r.witness_embedding.has_value();
    out.push_back(std::move(r));
  }
  {
    const bool heavy = path_case && maximize(g, options.maximize).value >= 7.0 / 64.0 - 0.005;
    LemmaReport r;
    r.check = "F3-free";
    r.applicable = heavy;
    r.witness_embedding = contains(g, named("F3"));
    r.violated = heavy && r.witness_embedding.has_value();
    out.push_back(std::move(r));
  }

  const bool dense = g.order() >= 4 && is_dense(g, options);
  for (std::size_t k : {1, 2}) {
    LemmaReport r;
    r.check = "intersection-" + std::to_string(k);
    r.applicable = dense && g.order() >= 6 - k;
    r.witness_edges = edges_meeting_in(g, k);
    r.violated = r.applicable && !r.witness_edges;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hlag
