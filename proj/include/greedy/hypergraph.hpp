#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace greedy {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable r-uniform hypergraph on vertices [0, N).
///
/// Edges are stored flat (edge e occupies [e*r, (e+1)*r)), each sorted
/// ascending, in input order. Incidence is kept in CSR form and is never
/// modified after construction, so one Hypergraph can back any number of
/// concurrent process runs.
class Hypergraph {
 public:
  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  std::uint32_t uniformity() const noexcept { return uniformity_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> edge(EdgeId e) const noexcept {
    return {vertices_.data() + std::size_t{e} * uniformity_, uniformity_};
  }

  /// Indices of the edges containing v, ascending.
  std::span<const EdgeId> incident(VertexId v) const noexcept {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::uint32_t degree(VertexId v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> flat_vertices() const noexcept { return vertices_; }

 private:
  friend Hypergraph build_hypergraph_flat(std::uint32_t, std::uint32_t,
                                          std::vector<VertexId>);

  std::uint32_t vertex_count_ = 0;
  std::uint32_t uniformity_ = 2;
  std::size_t edge_count_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

/// Validates and builds a hypergraph. Each edge is sorted; edge indices follow
/// input order. Throws HypergraphError naming the offending edge.
Hypergraph build_hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
                            const std::vector<std::vector<VertexId>>& edges);

/// Same, from a flat array of edge_count * uniformity vertex ids.
Hypergraph build_hypergraph_flat(std::uint32_t vertex_count, std::uint32_t uniformity,
                                 std::vector<VertexId> flat_edges);

/// D when every vertex has degree D, nullopt otherwise.
std::optional<std::uint32_t> is_regular(const Hypergraph& h);

struct DegreeSpread {
  std::uint32_t min = 0;
  std::uint32_t max = 0;
};
DegreeSpread degree_spread(const Hypergraph& h);

/// Maximum number of edges containing a pair of distinct vertices.
/// Throws StateError on an edgeless hypergraph.
///
/// OpenMP kernel: each vertex scatters co-degree counts of its neighbours
/// into a thread-local dense counter.
std::uint32_t max_codegree(const Hypergraph& h);

/// Serial reference for max_codegree: accumulates a count for each of the
/// C(r,2) pairs inside every edge in a hash map.
std::uint32_t max_codegree_serial(const Hypergraph& h);

}  // namespace greedy
