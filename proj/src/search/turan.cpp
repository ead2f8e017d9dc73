#include <algorithm>
#include <numeric>
#include <set>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/io.hpp"
#include "hlag/search.hpp"

namespace hlag {

namespace {

using EdgeList = std::vector<Edge>;

nlohmann::json edges_json(const EdgeList& edges) {
  nlohmann::json j = nlohmann::json::array();
  for (const Edge& e : edges) j.push_back(std::vector<Vertex>(e.begin(), e.end()));
  return j;
}

EdgeList edges_from_json(const nlohmann::json& j) {
  EdgeList out;
  for (const auto& e : j) {
    auto ids = e.get<std::vector<Vertex>>();
    out.emplace_back(std::span<const Vertex>(ids));
  }
  return out;
}

// Keeps the largest edge count seen and its witnesses: canonical forms when
// `canonical`, otherwise the first labeled graph.
class ExtremalSet {
 public:
  ExtremalSet(int r, Vertex n, bool canonical, std::atomic<std::size_t>* shared_best)
      : r_(r), n_(n), canonical_(canonical), shared_best_(shared_best) {}

  void offer(const Hypergraph& g) {
    if (have_ && g.size() < max_) return;
    if (!have_ || g.size() > max_) {
      have_ = true;
      max_ = g.size();
      witnesses_.clear();
      orbit_.clear();
      if (shared_best_) {
        std::size_t cur = shared_best_->load();
        while (cur < max_ && !shared_best_->compare_exchange_weak(cur, max_)) {
        }
      }
    }
    if (!canonical_) {
      if (witnesses_.empty()) witnesses_.insert(g.edges());
      return;
    }
    if (orbit_.count(g.edges())) return;
    add_orbit(g);
  }

  void merge(const ExtremalSet& other) {
    if (!other.have_) return;
    if (have_ && other.max_ < max_) return;
    if (!have_ || other.max_ > max_) {
      have_ = true;
      max_ = other.max_;
      witnesses_.clear();
      orbit_.clear();
    }
    for (const EdgeList& w : other.witnesses_) {
      if (!canonical_) {
        if (witnesses_.empty()) witnesses_.insert(w);
      } else if (!witnesses_.count(w)) {
        add_orbit(Hypergraph(r_, n_, w));
      }
    }
  }

  nlohmann::json save() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const EdgeList& w : witnesses_) ws.push_back(edges_json(w));
    return {{"have", have_}, {"max_edges", max_}, {"witnesses", std::move(ws)}};
  }

  void load(const nlohmann::json& j) {
    have_ = false;
    witnesses_.clear();
    orbit_.clear();
    if (j.is_null() || !j.at("have").get<bool>()) return;
    for (const auto& w : j.at("witnesses")) {
      Hypergraph g(r_, n_, edges_from_json(w));
      offer(g);
    }
    max_ = j.at("max_edges").get<std::size_t>();
    have_ = true;
  }

  bool have() const { return have_; }
  std::size_t max_edges() const { return max_; }
  std::vector<Hypergraph> witnesses() const {
    std::vector<Hypergraph> out;
    for (const EdgeList& w : witnesses_) out.emplace_back(r_, n_, w);
    return out;
  }

 private:
  // Records the canonical form and every relabeling, so later members of the same
  // orbit are recognized without canonicalizing.
  void add_orbit(const Hypergraph& g) {
    const Hypergraph c = canonical_form(g);
    if (!witnesses_.insert(c.edges()).second) return;
    std::vector<Vertex> perm(n_);
    std::iota(perm.begin(), perm.end(), Vertex{1});
    do {
      orbit_.insert(relabel(c, perm).edges());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int r_;
  Vertex n_;
  bool canonical_;
  std::atomic<std::size_t>* shared_best_;
  bool have_ = false;
  std::size_t max_ = 0;
  std::set<EdgeList> witnesses_;
  std::set<EdgeList> orbit_;
};

class TuranVisitor : public Visitor {
 public:
  TuranVisitor(int r, Vertex n, bool canonical, std::atomic<std::size_t>* best) : set_(r, n, canonical, best) {}
  void visit(const PartialGraph& leaf) override { set_.offer(leaf.graph()); }
  void merge(const Visitor& other) override { set_.merge(static_cast<const TuranVisitor&>(other).set_); }
  nlohmann::json save() const override { return set_.save(); }
  void load(const nlohmann::json& state) override { set_.load(state); }
  const ExtremalSet& set() const { return set_; }

 private:
  ExtremalSet set_;
};

}  // namespace

nlohmann::json to_json(const TuranResult& result) {
  nlohmann::json forbidden = nlohmann::json::array();
  for (const Hypergraph& f : result.forbidden) forbidden.push_back(to_json(f));
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Hypergraph& w : result.witnesses) witnesses.push_back(to_json(w));
  return {{"n", result.n},
          {"forbidden", std::move(forbidden)},
          {"max_edges", result.max_edges},
          {"witnesses", std::move(witnesses)},
          {"status", result.status == TuranStatus::exact ? "exact" : "lower_bound"},
          {"counts", to_json(result.stats)}};
}

TuranResult turan_number(Vertex n, const std::vector<Hypergraph>& forbidden, const TuranOptions& options) {
  if (forbidden.empty()) throw ValidationError("turan_number needs at least one forbidden graph");
  const int r = forbidden.front().uniformity();
  for (const Hypergraph& f : forbidden) {
    if (f.uniformity() != r) throw ValidationError("forbidden graphs have different uniformities");
  }
  TuranResult result;
  result.n = n;
  result.forbidden = forbidden;
  const bool canonical = n <= 7;

  if (options.strategy == TuranStrategy::whole_space) {
    ExtremalSet set(r, n, canonical, nullptr);
    WholeSpaceOptions ws;
    ws.max_ground = options.max_ground;
    result.stats = enumerate_all(
        n, r,
        [&](const Hypergraph& g) {
          return std::all_of(forbidden.begin(), forbidden.end(), [&](const Hypergraph& f) { return is_free(g, f); });
        },
        [&](const Hypergraph& g) { set.offer(g); }, ws);
    result.max_edges = set.max_edges();
    result.witnesses = set.witnesses();
    return result;
  }

  const GroundSet ground(n, r);
  std::atomic<std::size_t> best{0};
  const Prune prune = prune_containing(forbidden);
  const std::size_t total = ground.size();
  const Bound bound = [&best, total](const PartialGraph& partial, std::size_t next) {
    return partial.size() + (total - next) < best.load(std::memory_order_relaxed);
  };
  const VisitorFactory factory = [&] { return std::make_unique<TuranVisitor>(r, n, canonical, &best); };
  nlohmann::json forbidden_json = nlohmann::json::array();
  for (const Hypergraph& f : forbidden) forbidden_json.push_back(to_json(f));
  EnumerationRun run =
      enumerate(ground, options.enumeration, prune, bound, factory, {{"problem", "turan"}, {"forbidden", forbidden_json}});
  const auto& set = static_cast<const TuranVisitor&>(*run.result).set();
  result.stats = run.stats;
  result.max_edges = set.max_edges();
  result.witnesses = set.witnesses();
  result.status = run.status == RunStatus::complete ? TuranStatus::exact : TuranStatus::lower_bound;
  return result;
}

}  // namespace hlag
