#include <algorithm>

#include "hlag/error.hpp"
#include "hlag/freeness.hpp"

namespace hlag {

bool is_alpha_dense(const Hypergraph& g, double alpha) {
  if (g.order() == 0) return true;
  const double need = alpha * static_cast<double>(binomial(g.order() - 1, static_cast<std::uint64_t>(g.uniformity() - 1)));
  for (std::size_t d : g.degrees()) {
    if (static_cast<double>(d) < need) return false;
  }
  return true;
}

SymmetrizeCleanResult symmetrize_clean(const Hypergraph& g, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0, 1]");
  SymmetrizeCleanResult result;
  Hypergraph h = g;
  for (;;) {
    if (h.empty()) break;
    const VertexPartition classes = link_classes(h);
    const std::vector<std::size_t> deg = h.degrees();
    Vertex u = 0;
    Vertex v = 0;
    for (Vertex a = 1; a <= h.order() && u == 0; ++a) {
      for (Vertex b = a + 1; b <= h.order(); ++b) {
        if (adjacent(h, a, b) || classes.class_of(a) == classes.class_of(b)) continue;
        u = deg[a - 1] >= deg[b - 1] ? a : b;
        v = u == a ? b : a;
        break;
      }
    }
    if (u == 0) break;

    SymmetrizationStep step;
    step.u = u;
    step.v = v;
    step.edges_before = h.size();
    const std::vector<Vertex> u_class = classes.classes[classes.class_of(u)];
    const std::vector<Vertex> v_class = classes.classes[classes.class_of(v)];
    step.class_size = v_class.size();
    for (Vertex w : v_class) h = symmetrize(h, w, u);
    step.edges_symmetrized = h.size();

    // current[k] is the id in G_{i+1} of vertex k+1 of the cleaned graph.
    std::vector<Vertex> current(h.order());
    for (Vertex k = 1; k <= h.order(); ++k) current[k - 1] = k;
    while (!h.empty() && !is_alpha_dense(h, alpha)) {
      const std::vector<std::size_t> d = h.degrees();
      const Vertex z = static_cast<Vertex>(std::min_element(d.begin(), d.end()) - d.begin() + 1);
      Vertex victim = z;
      if (std::binary_search(u_class.begin(), u_class.end(), current[z - 1])) {
        // v itself if still present, else the smallest survivor of its class.
        auto it = std::find(current.begin(), current.end(), v);
        for (Vertex k = 1; k <= h.order() && it == current.end(); ++k) {
          if (std::binary_search(v_class.begin(), v_class.end(), current[k - 1])) it = current.begin() + (k - 1);
        }
        if (it != current.end()) victim = static_cast<Vertex>(it - current.begin() + 1);
      }
      step.removed.push_back(current[victim - 1]);
      h = delete_vertex(h, victim);
      current.erase(current.begin() + (victim - 1));
    }
    step.edges_cleaned = h.size();
    result.steps.push_back(std::move(step));
  }
  result.graph = std::move(h);
  return result;
}

}  // namespace hlag
