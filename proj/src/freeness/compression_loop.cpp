#include <algorithm>
#include <numeric>
#include <set>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"

namespace hlag {

CompressionLoopResult left_compress_loop(const Hypergraph& g, int t, std::optional<double> lambda_floor,
                                         const CompressionLoopOptions& options) {
  if (g.uniformity() != 3) throw ValidationError("the compression loop needs a 3-graph");
  if (t != 3 && t != 4) throw ValidationError("the compression loop supports P_3 and P_4 only");
  if (auto witness = contains_linear_path(g, t)) {
    throw ValidationError("input contains P_" + std::to_string(t) + ": " + to_json(*witness).dump());
  }
  CompressionLoopResult result;
  result.lambda_in = maximize(g, options.density.maximize).value;
  if (t == 4) {
    const double floor = lambda_floor.value_or(7.0 / 64.0 - 0.005);
    if (result.lambda_in < floor) {
      throw ValidationError("lambda " + std::to_string(result.lambda_in) + " is below the floor " + std::to_string(floor));
    }
  }

  Hypergraph h = g;
  std::set<std::vector<Edge>> seen;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= options.max_iterations) throw Error("compression loop hit its iteration cap");
    DenseCore core = densify(h, options.density);
    h = std::move(core.graph);
    const std::size_t n = h.order();
    std::vector<Vertex> by_weight(n);
    std::iota(by_weight.begin(), by_weight.end(), Vertex{1});
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](Vertex a, Vertex b) {
      return core.optimum.weighting[a - 1] > core.optimum.weighting[b - 1];
    });
    std::vector<Vertex> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[by_weight[k] - 1] = static_cast<Vertex>(k + 1);
    h = relabel(h, perm);
    if (!seen.insert(h.edges()).second) throw Error("compression loop revisited a graph");
    if (is_left_compressed(h)) {
      result.lambda_out = core.optimum.value;
      break;
    }
    bool done = false;
    for (Vertex i = 1; i <= n && !done; ++i) {
      for (Vertex j = i + 1; j <= n && !done; ++j) {
        if (link_diff(h, j, i).empty()) continue;
        h = compress(h, i, j);
        result.steps.push_back({i, j, n, core.optimum.value});
        done = true;
      }
    }
  }

  result.graph = h;
  if (!is_left_compressed(h)) throw Error("compression loop output is not left-compressed");
  if (contains_linear_path(h, t)) throw Error("compression loop output contains P_" + std::to_string(t));
  if (!is_dense(h, options.density)) throw Error("compression loop output is not dense");
  if (result.lambda_out < result.lambda_in - 1e-8) throw Error("compression loop lowered the Lagrangian");
  return result;
}

}  // namespace hlag
