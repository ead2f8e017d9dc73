#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hlag/error.hpp"
#include "hlag/search.hpp"

namespace hlag {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  const GroundSet& ground;
  const EnumerationOptions& options;
  const Prune& prune;
  const Bound& bound;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  bool over_cap(std::uint64_t local_nodes) {
    if (stop.load(std::memory_order_relaxed)) return true;
    const std::uint64_t total = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options.max_nodes != 0 && total > options.max_nodes) {
      stop = true;
      return true;
    }
    if (options.max_seconds > 0.0 && (local_nodes & 1023u) == 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > options.max_seconds) {
      stop = true;
      return true;
    }
    return false;
  }
};

// Tries to include element k; returns true if it was included.
bool try_include(Shared& sh, PartialGraph& pg, std::size_t k, EnumerationStats& stats) {
  if (!pg.addable(k, sh.options.down_sets)) return false;
  pg.push(k);
  if (sh.prune && sh.prune(pg, k)) {
    pg.pop();
    ++stats.pruned;
    return false;
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> make_prefixes(Shared& sh, EnumerationStats& stats) {
  const std::size_t depth = std::min(sh.options.shard_depth, sh.ground.size());
  std::vector<std::vector<std::uint8_t>> out;
  PartialGraph pg(sh.ground);
  std::vector<std::uint8_t> stack;
  for (;;) {
    while (stack.size() < depth) stack.push_back(try_include(sh, pg, stack.size(), stats) ? 1 : 0);
    out.push_back(stack);
    while (!stack.empty() && stack.back() == 0) stack.pop_back();
    if (stack.empty()) break;
    pg.pop();
    stack.back() = 0;
  }
  return out;
}

void run_unit(Shared& sh, UnitState& unit, Visitor& visitor) {
  const std::size_t n_elem = sh.ground.size();
  const std::size_t base = unit.prefix.size();
  PartialGraph pg(sh.ground);
  for (std::size_t k = 0; k < base; ++k) {
    if (unit.prefix[k]) pg.push(k);
  }
  std::vector<std::uint8_t>& stack = unit.stack;
  for (std::size_t d = 0; d < stack.size(); ++d) {
    if (stack[d]) pg.push(base + d);
  }
  EnumerationStats& stats = unit.stats;
  unit.status = UnitState::Status::active;
  for (;;) {
    // Descend.
    bool cut = false;
    while (base + stack.size() < n_elem) {
      const std::size_t k = base + stack.size();
      if (sh.over_cap(stats.nodes)) {
        unit.visitor = visitor.save();
        return;
      }
      ++stats.nodes;
      if (sh.bound && sh.bound(pg, k)) {
        ++stats.bounded;
        cut = true;
        break;
      }
      stack.push_back(try_include(sh, pg, k, stats) ? 1 : 0);
    }
    if (!cut) {
      ++stats.visited;
      visitor.visit(pg);
    }
    // Backtrack to the deepest include and flip it to exclude.
    while (!stack.empty() && stack.back() == 0) stack.pop_back();
    if (stack.empty()) break;
    pg.pop();
    stack.back() = 0;
  }
  unit.status = UnitState::Status::done;
  unit.visitor = visitor.save();
}

UnitState unit_from_json(const nlohmann::json& j) {
  UnitState u;
  const std::string status = j.at("status").get<std::string>();
  if (status == "pending") {
    u.status = UnitState::Status::pending;
  } else if (status == "active") {
    u.status = UnitState::Status::active;
  } else if (status == "done") {
    u.status = UnitState::Status::done;
  } else {
    throw CheckpointError("unknown unit status '" + status + "'");
  }
  u.prefix = j.at("prefix").get<std::vector<std::uint8_t>>();
  u.stack = j.at("stack").get<std::vector<std::uint8_t>>();
  const auto& s = j.at("stats");
  u.stats = {s.at("visited").get<std::uint64_t>(), s.at("pruned").get<std::uint64_t>(), s.at("bounded").get<std::uint64_t>(),
             s.at("nodes").get<std::uint64_t>()};
  u.visitor = j.at("visitor");
  return u;
}

const char* status_name(UnitState::Status s) {
  switch (s) {
    case UnitState::Status::pending: return "pending";
    case UnitState::Status::active: return "active";
    case UnitState::Status::done: return "done";
  }
  return "pending";
}

}  // namespace

nlohmann::json to_json(const SearchCheckpoint& checkpoint) {
  nlohmann::json units = nlohmann::json::array();
  for (const UnitState& u : checkpoint.units) {
    units.push_back({{"status", status_name(u.status)},
                     {"prefix", u.prefix},
                     {"stack", u.stack},
                     {"stats", to_json(u.stats)},
                     {"visitor", u.visitor}});
  }
  return {{"version", checkpoint.version},
          {"space", checkpoint.space},
          {"prefix_stats", to_json(checkpoint.prefix_stats)},
          {"units", std::move(units)}};
}

SearchCheckpoint checkpoint_from_json(const nlohmann::json& j) {
  try {
    SearchCheckpoint c;
    c.version = j.at("version").get<int>();
    if (c.version != kCheckpointVersion) {
      throw CheckpointError("checkpoint version " + std::to_string(c.version) + " is not " + std::to_string(kCheckpointVersion));
    }
    c.space = j.at("space");
    const auto& s = j.at("prefix_stats");
    c.prefix_stats = {s.at("visited").get<std::uint64_t>(), s.at("pruned").get<std::uint64_t>(),
                      s.at("bounded").get<std::uint64_t>(), s.at("nodes").get<std::uint64_t>()};
    for (const auto& u : j.at("units")) c.units.push_back(unit_from_json(u));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
  }
}

void checkpoint_save(const SearchCheckpoint& checkpoint, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << to_json(checkpoint).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

SearchCheckpoint checkpoint_resume(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
  return checkpoint_from_json(j);
}

EnumerationRun enumerate(const GroundSet& ground, const EnumerationOptions& options, const Prune& prune,
                         const Bound& bound, const VisitorFactory& factory, const nlohmann::json& space,
                         const SearchCheckpoint* resume) {
  Shared sh{ground, options, prune, bound};
  nlohmann::json full_space = space;
  full_space["ground"] = {{"n", ground.order()}, {"r", ground.uniformity()}, {"size", ground.size()}};
  full_space["down_sets"] = options.down_sets;
  full_space["shard_depth"] = std::min(options.shard_depth, ground.size());

  SearchCheckpoint state;
  state.space = full_space;
  if (resume) {
    if (resume->version != kCheckpointVersion) throw CheckpointError("checkpoint version mismatch");
    if (resume->space != full_space) {
      throw CheckpointError("checkpoint describes " + resume->space.dump() + ", not " + full_space.dump());
    }
    state = *resume;
  } else {
    for (auto& prefix : make_prefixes(sh, state.prefix_stats)) {
      UnitState u;
      u.prefix = std::move(prefix);
      state.units.push_back(std::move(u));
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= state.units.size() || sh.stop) return;
        UnitState& unit = state.units[idx];
        if (unit.status == UnitState::Status::done) continue;
        auto visitor = factory();
        if (unit.status == UnitState::Status::active) visitor->load(unit.visitor);
        run_unit(sh, unit, *visitor);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      sh.stop = true;
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  EnumerationRun run;
  run.result = factory();
  run.stats = state.prefix_stats;
  bool complete = true;
  for (const UnitState& unit : state.units) {
    run.stats.merge(unit.stats);
    if (unit.status != UnitState::Status::pending) {
      auto v = factory();
      v->load(unit.visitor);
      run.result->merge(*v);
    }
    complete = complete && unit.status == UnitState::Status::done;
  }
  run.status = complete ? RunStatus::complete : RunStatus::capped;
  if (!complete) run.checkpoint = std::move(state);
  return run;
}

EnumerationStats enumerate_left_compressed(Vertex n, int r, const Prune& prune,
                                           const std::function<void(const Hypergraph&)>& visit) {
  if (n < static_cast<Vertex>(r)) throw ValidationError("need n >= r");
  const GroundSet ground(n, r);
  EnumerationOptions options;
  const VisitorFactory factory = [&] {
    return std::make_unique<CallbackVisitor>([&](const PartialGraph& leaf) { visit(leaf.graph()); });
  };
  return enumerate(ground, options, prune, {}, factory, {{"problem", "left_compressed"}}).stats;
}

EnumerationStats enumerate_all(Vertex n, int r, const std::function<bool(const Hypergraph&)>& filter,
                               const std::function<void(const Hypergraph&)>& visit, const WholeSpaceOptions& options) {
  const std::uint64_t size = binomial(n, static_cast<std::uint64_t>(r));
  if (size > options.max_ground) {
    throw ValidationError("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(size) +
                          " exceeds the whole-space cap " + std::to_string(options.max_ground));
  }
  if (options.up_to_isomorphism && n > 7) throw ValidationError("isomorphism reduction is limited to 7 vertices");
  const GroundSet ground(n, r);
  EnumerationStats stats;
  std::vector<std::vector<Edge>> seen;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    ++stats.nodes;
    edges.clear();
    for (std::size_t k = 0; k < size; ++k) {
      if ((mask >> k) & 1u) edges.push_back(ground[k]);
    }
    Hypergraph g(r, n, edges);
    if (filter && !filter(g)) {
      ++stats.pruned;
      continue;
    }
    if (options.up_to_isomorphism) {
      Hypergraph c = canonical_form(g);
      auto it = std::lower_bound(seen.begin(), seen.end(), c.edges());
      if (it != seen.end() && *it == c.edges()) continue;
      seen.insert(it, c.edges());
    }
    ++stats.visited;
    visit(g);
  }
  return stats;
}

}  // namespace hlag
