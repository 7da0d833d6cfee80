#include <algorithm>
#include <unordered_map>
#include <vector>

#include <omp.h>

#include "greedy/errors.hpp"
#include "greedy/hypergraph.hpp"

namespace greedy {

std::uint32_t max_codegree(const Hypergraph& h) {
  if (h.edge_count() == 0) throw StateError("co-degree undefined on an edgeless hypergraph");
  const auto n = static_cast<std::int64_t>(h.vertex_count());
  std::uint32_t best = 0;

#pragma omp parallel reduction(max : best)
  {
    std::vector<std::uint32_t> count(h.vertex_count(), 0);
    std::vector<VertexId> touched;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t vi = 0; vi < n; ++vi) {
      const auto v = static_cast<VertexId>(vi);
      for (EdgeId e : h.incident(v)) {
        for (VertexId u : h.edge(e)) {
          // Each unordered pair is counted from its smaller endpoint.
          if (u <= v) continue;
          if (count[u]++ == 0) touched.push_back(u);
        }
      }
      for (VertexId u : touched) {
        best = std::max(best, count[u]);
        count[u] = 0;
      }
      touched.clear();
    }
  }
  return best;
}

std::uint32_t max_codegree_serial(const Hypergraph& h) {
  if (h.edge_count() == 0) throw StateError("co-degree undefined on an edgeless hypergraph");
  std::unordered_map<std::uint64_t, std::uint32_t> pairs;
  std::uint32_t best = 0;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const std::uint64_t key = (std::uint64_t{vs[a]} << 32) | vs[b];
        best = std::max(best, ++pairs[key]);
      }
    }
  }
  return best;
}

}  // namespace greedy
