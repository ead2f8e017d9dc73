#include "hlag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"
#include "hlag/generators.hpp"
#include "hlag/io.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/search.hpp"

namespace hlag::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(double v, int precision = 10) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

std::mt19937_64 stream(const SuiteOptions& options, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

MaximizeOptions full_options(const SuiteOptions& options) {
  MaximizeOptions m;
  m.seed = options.seed;
  return m;
}

struct Outcome {
  bool passed = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

// Complete 3-graphs on 3..9 vertices.
Outcome complete_graphs(const SuiteOptions& options) {
  Outcome o{true, {}, {}};
  const auto start = Clock::now();
  double worst = 0.0;
  for (int t = 3; t <= 9; ++t) {
    const double expected = static_cast<double>(binomial(t, 3)) / (t * t * t);
    const double got = maximize(complete(t, 3), full_options(options)).value;
    worst = std::max(worst, std::abs(got - expected));
    o.data["K" + std::to_string(t)] = got;
  }
  const double seconds = elapsed(start);
  o.passed = worst <= 1e-9 && seconds < 1.0;
  o.data["max_error"] = worst;
  o.data["seconds"] = seconds;
  o.detail = "max |error| " + fmt(worst, 3) + " over t=3..9 in " + fmt(seconds, 3) + " s";
  return o;
}

Outcome k4_minus(const SuiteOptions& options) {
  const double got = maximize(complete_minus(4, 3), full_options(options)).value;
  const double err = std::abs(got - 4.0 / 81.0);
  return {err <= 1e-9, "lambda " + fmt(got, 12) + ", |error| " + fmt(err, 3), {{"value", got}, {"error", err}}};
}

Outcome k6_k8_minus(const SuiteOptions& options) {
  Outcome o;
  const double k6 = maximize(complete_minus(6, 3), full_options(options)).value;
  const double k8 = maximize(complete_minus(8, 3), full_options(options)).value;
  const double k6_cf = closed_form("K6-").value;
  const double k8_cf = closed_form("K8-").value;
  const double e6 = std::abs(k6 - k6_cf);
  const double e8 = std::abs(k8 - k8_cf);
  o.passed = e6 <= 1e-7 && k6 < 0.0887 && e8 <= 1e-7 && k8 < 0.1077;
  o.data = {{"K6-", k6}, {"K6-_closed_form", k6_cf}, {"K8-", k8}, {"K8-_closed_form", k8_cf}};
  o.detail = "K6- " + fmt(k6) + " (closed form " + fmt(k6_cf) + "), K8- " + fmt(k8) + " (closed form " + fmt(k8_cf) + ")";
  return o;
}

Outcome motzkin_straus_agreement(const SuiteOptions& options) {
  auto rng = stream(options, 4);
  std::uniform_int_distribution<Vertex> order(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const auto start = Clock::now();
  int mismatches = 0;
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Hypergraph g = random_hypergraph(order(rng), 2, density(rng), rng);
    const CliqueLagrangian ms = motzkin_straus(g);
    const double expected = ms.clique_number == 0 ? 0.0 : 0.5 * (1.0 - 1.0 / ms.clique_number);
    MaximizeOptions m = full_options(options);
    m.seed = options.seed + static_cast<std::uint64_t>(k);
    const double err = std::abs(maximize(g, m).value - expected);
    worst = std::max(worst, err);
    if (err > 1e-7) ++mismatches;
  }
  const double seconds = elapsed(start);
  return {mismatches == 0 && seconds < 30.0,
          std::to_string(mismatches) + " mismatches in 500 graphs, max |error| " + fmt(worst, 3) + ", " + fmt(seconds, 3) + " s",
          {{"mismatches", mismatches}, {"max_error", worst}, {"seconds", seconds}}};
}

Outcome kkt_certification(const SuiteOptions& options) {
  std::vector<std::pair<std::string, Hypergraph>> graphs;
  for (int t = 3; t <= 9; ++t) graphs.emplace_back("K" + std::to_string(t), complete(t, 3));
  for (int t : {4, 6, 8}) graphs.emplace_back("K" + std::to_string(t) + "-", complete_minus(t, 3));
  Outcome o{true, {}, nlohmann::json::object()};
  double worst = 0.0;
  for (const auto& [name, g] : graphs) {
    const OptimumResult opt = maximize(g, full_options(options));
    const std::vector<double> grad = gradient(g, opt.weighting.values());
    double dev = 0.0;
    for (Vertex v : opt.support) dev = std::max(dev, std::abs(grad[v - 1] - 3.0 * opt.value));
    o.data[name] = dev;
    worst = std::max(worst, dev);
  }
  o.passed = worst <= 1e-6;
  o.detail = "max |partial - 3 lambda| on supports " + fmt(worst, 3) + " over " + std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome compression_monotonicity(const SuiteOptions& options) {
  auto rng = stream(options, 6);
  std::uniform_int_distribution<Vertex> order(3, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  int violations = 0;
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const Vertex n = order(rng);
    const Hypergraph g = random_hypergraph(n, 3, density(rng), rng);
    std::vector<double> x = random_simplex_point(n, rng);
    std::uniform_int_distribution<Vertex> pick(1, n);
    Vertex i = pick(rng);
    Vertex j = pick(rng);
    while (j == i) j = pick(rng);
    if (i > j) std::swap(i, j);
    if (x[i - 1] < x[j - 1]) std::swap(x[i - 1], x[j - 1]);
    const double drop = evaluate(g, x) - evaluate(compress(g, i, j), x);
    worst = std::max(worst, drop);
    if (drop > 1e-12) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 10000 instances, max drop " + fmt(worst, 3),
          {{"violations", violations}, {"max_drop", worst}}};
}

Outcome path3_compression_exhaustive(const SuiteOptions&) {
  const auto start = Clock::now();
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t counterexamples = 0;
  const Hypergraph p3 = linear_path(3);
  enumerate_left_compressed(6, 3, prune_containing({p3}), [&](const Hypergraph& g) {
    if (!covers_pairs(g)) return;
    ++graphs;
    for (Vertex i = 1; i <= g.order(); ++i) {
      for (Vertex j = i + 1; j <= g.order(); ++j) {
        ++checks;
        if (contains_linear_path(compress(g, i, j), 3)) ++counterexamples;
      }
    }
  });
  const double seconds = elapsed(start);
  return {counterexamples == 0 && graphs > 0 && seconds < 300.0,
          std::to_string(graphs) + " graphs, " + std::to_string(checks) + " compressions, " +
              std::to_string(counterexamples) + " counterexamples, " + fmt(seconds, 3) + " s",
          {{"graphs", graphs}, {"compressions", checks}, {"counterexamples", counterexamples}, {"seconds", seconds}}};
}

Outcome path3_density(const SuiteOptions& options) {
  DensityEvidenceOptions d;
  d.enumeration.threads = options.threads;
  d.fast.seed = options.seed;
  d.full = full_options(options);
  const DensityReport report = density_evidence("P3", 7, d);
  const double target = 5.0 / 54.0;
  Outcome o;
  o.data = to_json(report);
  if (!report.best || !report.best_core) {
    o.detail = "no P3-free graph found";
    return o;
  }
  const double err = std::abs(report.best->lambda - target);
  const bool clique_core = isomorphic(*report.best_core, complete(6, 3));
  const double free_max = report.best_clique_free ? report.best_clique_free->lambda : 0.0;
  const double gap = target - free_max;
  o.passed = report.status == RunStatus::complete && err <= 1e-7 && clique_core && free_max <= target - 0.0048;
  o.detail = "max lambda " + fmt(report.best->lambda) + (clique_core ? " on a K6 core" : " not on a K6 core") +
             "; K6-free max " + fmt(free_max) + ", gap " + fmt(gap, 6) + " (need >= 0.0048)";
  return o;
}

Outcome path4_samples(const SuiteOptions& options) {
  Outcome o;
  const Hypergraph k8 = complete(8, 3);
  const double k8_lambda = maximize(k8, full_options(options)).value;
  const bool k8_free = !contains_linear_path(k8, 4);
  const bool lower_ok = k8_free && std::abs(6.0 * k8_lambda - 21.0 / 32.0) <= 1e-9;

  auto rng = stream(options, 9);
  DensityOptions dense;
  dense.maximize = MaximizeOptions::fast();
  dense.maximize.seed = options.seed;
  const double clique_bound = 7.0 / 64.0 + 1e-9;
  const double free_bound = std::max(2.0 / 27.0, 1250.0 / 11907.0) + 1e-7;
  int samples = 0;
  int tries = 0;
  int above_clique = 0;
  int above_free = 0;
  int clique_free = 0;
  double max_lambda = 0.0;
  while (samples < 1000 && tries < 50000) {
    const double stop = (tries % 4) * 0.03;
    ++tries;
    const Hypergraph g = random_left_compressed_path_free(9, 4, stop, rng);
    if (!is_dense(g, dense)) continue;
    ++samples;
    const double lambda = maximize(g, full_options(options)).value;
    max_lambda = std::max(max_lambda, lambda);
    if (lambda > clique_bound) ++above_clique;
    if (is_free(g, k8)) {
      ++clique_free;
      if (lambda > free_bound) ++above_free;
    }
  }
  o.passed = lower_ok && samples == 1000 && above_clique == 0 && above_free == 0;
  o.data = {{"k8_p4_free", k8_free},      {"six_lambda_k8", 6.0 * k8_lambda}, {"samples", samples},
            {"tries", tries},             {"k8_free_samples", clique_free},   {"max_lambda", max_lambda},
            {"above_7_64", above_clique}, {"above_free_bound", above_free}};
  o.detail = std::string("K8 ") + (k8_free ? "P4-free" : "contains P4") + ", 6 lambda(K8) " + fmt(6.0 * k8_lambda, 12) +
             "; " + std::to_string(samples) + " dense samples (" + std::to_string(tries) + " draws), max lambda " +
             fmt(max_lambda) + ", " + std::to_string(above_clique + above_free) + " over bound";
  return o;
}

// The listed edge set has 14 distinct triples; every 15-edge completion inside
// the same six vertices is checked as well.
Outcome hstar_spot_check(const SuiteOptions& options) {
  const Hypergraph h = named("Hstar");
  std::vector<Hypergraph> graphs{h};
  std::vector<Vertex> vs;
  for (const Edge& e : h.edges()) vs.insert(vs.end(), e.begin(), e.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        const Edge e{vs[a], vs[b], vs[c]};
        if (h.has_edge(e)) continue;
        std::vector<Edge> edges = h.edges();
        edges.push_back(e);
        graphs.emplace_back(3, h.order(), std::move(edges));
      }
    }
  }
  double worst = 0.0;
  nlohmann::json values = nlohmann::json::array();
  for (const Hypergraph& g : graphs) {
    const double v = maximize(g, full_options(options)).value;
    values.push_back({{"edges", g.size()}, {"lambda", v}});
    worst = std::max(worst, std::abs(v - 2.0 / 25.0));
  }
  return {worst <= 1e-8,
          "lambda(H*) " + fmt(maximize(h, full_options(options)).value, 12) + " with " + std::to_string(h.size()) +
              " edges; max |error| over it and " + std::to_string(graphs.size() - 1) + " completions " + fmt(worst, 3),
          {{"graphs", values}, {"max_error", worst}}};
}

Outcome turan_machinery(const SuiteOptions& options) {
  Outcome o;
  const bool extension_ok = isomorphic(extension(named("T2")), named("F5"));

  TuranOptions bb;
  bb.enumeration.threads = options.threads;
  TuranOptions ws;
  ws.strategy = TuranStrategy::whole_space;
  const TuranResult a = turan_number(5, {named("F5")}, bb);
  const TuranResult b = turan_number(5, {named("F5")}, ws);
  const bool turan_ok = a.status == TuranStatus::exact && a.max_edges == b.max_edges && a.witnesses == b.witnesses;

  int count_mismatches = 0;
  for (int m = 3; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 15; ++n) {
      if (turan_count(m, 3, n) != turan_blowup(m, 3, n).size()) ++count_mismatches;
    }
  }

  int cores = 0;
  const Hypergraph p3 = linear_path(3);
  for (std::size_t n = 1; n <= 14; ++n) {
    if (contains_core(turan_blowup(6, 3, n), p3, 7)) ++cores;
  }

  o.passed = extension_ok && turan_ok && count_mismatches == 0 && cores == 0;
  o.data = {{"extension_isomorphic", extension_ok},
            {"ex_branch_and_bound", a.max_edges},
            {"ex_whole_space", b.max_edges},
            {"witness_classes", a.witnesses.size()},
            {"witnesses_equal", a.witnesses == b.witnesses},
            {"count_mismatches", count_mismatches},
            {"core_hits", cores}};
  o.detail = std::string("extension(T2) ") + (extension_ok ? "~" : "!~") + " F5; ex(5,F5) " + std::to_string(a.max_edges) +
             "/" + std::to_string(b.max_edges) + " with " + std::to_string(a.witnesses.size()) + "/" +
             std::to_string(b.witnesses.size()) + " witness classes; " + std::to_string(count_mismatches) +
             " count mismatches; " + std::to_string(cores) + " K7^P3 cores in T6(n<=14)";
  return o;
}

Outcome lemma_structures(const SuiteOptions& options) {
  auto rng = stream(options, 12);
  const Hypergraph f1 = named("F1");
  const Hypergraph f2 = named("F2");
  int bad_inputs = 0;
  int hits = 0;
  for (int k = 0; k < 200; ++k) {
    const Hypergraph g = random_covers_pairs_path_free(static_cast<Vertex>(9 + k % 2), 4, rng);
    if (!covers_pairs(g) || contains_linear_path(g, 4)) ++bad_inputs;
    if (!is_free(g, f1) || !is_free(g, f2)) ++hits;
  }
  return {bad_inputs == 0 && hits == 0,
          std::to_string(hits) + " of 200 samples contain F1 or F2 (" + std::to_string(bad_inputs) + " invalid samples)",
          {{"samples", 200}, {"containing", hits}, {"invalid", bad_inputs}}};
}

using Check = Outcome (*)(const SuiteOptions&);

struct Entry {
  Criterion criterion;
  Check check;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{1, "facts", "complete 3-graph Lagrangians"}, complete_graphs},
      {{2, "facts", "K4- Lagrangian"}, k4_minus},
      {{3, "facts", "K6- and K8- closed forms"}, k6_k8_minus},
      {{4, "motzkin-straus", "clique Lagrangians of 2-graphs"}, motzkin_straus_agreement},
      {{5, "facts", "KKT partials on optimal supports"}, kkt_certification},
      {{6, "compression", "compression does not lower the weighted sum"}, compression_monotonicity},
      {{7, "compression", "compressions keep P3-freeness on 6 vertices"}, path3_compression_exhaustive},
      {{8, "density", "P3 density evidence on 7 vertices"}, path3_density},
      {{9, "density", "P4 bounds on sampled dense graphs"}, path4_samples},
      {{10, "spot-check", "H* Lagrangian"}, hstar_spot_check},
      {{11, "turan", "extension, exact Turan numbers and blowups"}, turan_machinery},
      {{12, "lemmas", "P4-free pair-covering graphs avoid F1 and F2"}, lemma_structures},
  };
  return all;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = [] {
    std::vector<Criterion> out;
    for (const Entry& e : entries()) out.push_back(e.criterion);
    return out;
  }();
  return list;
}

std::vector<int> select(const std::vector<std::string>& only) {
  std::vector<int> ids;
  if (only.empty()) {
    for (const Criterion& c : criteria()) ids.push_back(c.id);
    return ids;
  }
  for (const std::string& s : only) {
    bool matched = false;
    for (const Criterion& c : criteria()) {
      if (s == c.group || s == std::to_string(c.id)) {
        ids.push_back(c.id);
        matched = true;
      }
    }
    if (!matched) throw ValidationError("unknown criterion or group '" + s + "'");
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const auto it = std::find_if(entries().begin(), entries().end(), [id](const Entry& e) { return e.criterion.id == id; });
  if (it == entries().end()) throw ValidationError("unknown criterion " + std::to_string(id));
  CriterionResult result;
  result.criterion = it->criterion;
  const auto start = Clock::now();
  try {
    Outcome o = it->check(options);
    result.passed = o.passed;
    result.detail = std::move(o.detail);
    result.data = std::move(o.data);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = elapsed(start);
  return result;
}

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

SuiteReport run_suite(const std::vector<int>& ids, const SuiteOptions& options,
                      const std::function<void(const CriterionResult&)>& on_result) {
  SuiteReport report;
  report.seed = options.seed;
  for (int id : ids) {
    report.results.push_back(run_criterion(id, options));
    if (on_result) on_result(report.results.back());
  }
  return report;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion.id) + "] " + r.criterion.title + ": " +
         r.detail + " (" + fmt(r.seconds, 3) + " s)";
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.criterion.id},   {"group", r.criterion.group}, {"title", r.criterion.title}, {"passed", r.passed},
          {"detail", r.detail},     {"seconds", r.seconds},       {"data", r.data}};
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json results = nlohmann::json::array();
  std::size_t passed = 0;
  for (const CriterionResult& r : report.results) {
    results.push_back(to_json(r));
    if (r.passed) ++passed;
  }
  return {{"seed", report.seed},
          {"passed", report.passed()},
          {"total", report.results.size()},
          {"passed_count", passed},
          {"results", std::move(results)}};
}

}  // namespace hlag::verify
