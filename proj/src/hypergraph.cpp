#include "greedy/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "greedy/errors.hpp"

namespace greedy {

namespace {

using Kind = HypergraphError::Kind;

[[noreturn]] void reject(Kind kind, std::size_t e, const std::string& why) {
  throw HypergraphError(kind, e, "edge " + std::to_string(e) + ": " + why);
}

}  // namespace

Hypergraph build_hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
                            const std::vector<std::vector<VertexId>>& edges) {
  if (uniformity < 2) {
    throw HypergraphError(Kind::BadUniformity, 0, "uniformity must be at least 2");
  }
  std::vector<VertexId> flat;
  flat.reserve(edges.size() * uniformity);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].size() != uniformity) {
      reject(Kind::WrongCardinality, e,
             "has " + std::to_string(edges[e].size()) + " vertices, expected " +
                 std::to_string(uniformity));
    }
    flat.insert(flat.end(), edges[e].begin(), edges[e].end());
  }
  return build_hypergraph_flat(vertex_count, uniformity, std::move(flat));
}

Hypergraph build_hypergraph_flat(std::uint32_t vertex_count, std::uint32_t uniformity,
                                 std::vector<VertexId> flat) {
  if (uniformity < 2) {
    throw HypergraphError(Kind::BadUniformity, 0, "uniformity must be at least 2");
  }
  if (flat.size() % uniformity != 0) {
    reject(Kind::WrongCardinality, flat.size() / uniformity, "is truncated");
  }
  const std::size_t m = flat.size() / uniformity;
  if (m > std::numeric_limits<EdgeId>::max()) {
    throw ParameterError("edge count exceeds 32-bit edge ids");
  }

  for (std::size_t e = 0; e < m; ++e) {
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(e * uniformity);
    auto last = first + uniformity;
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      reject(Kind::RepeatedVertex, e, "repeats a vertex");
    }
    if (*(last - 1) >= vertex_count) {
      reject(Kind::VertexOutOfRange, e,
             "vertex " + std::to_string(*(last - 1)) + " is not below N = " +
                 std::to_string(vertex_count));
    }
  }

  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  auto row = [&](EdgeId e) { return flat.data() + std::size_t{e} * uniformity; };
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const VertexId* pa = row(a);
    const VertexId* pb = row(b);
    auto c = std::lexicographical_compare_three_way(pa, pa + uniformity, pb,
                                                     pb + uniformity);
    return c < 0 || (c == 0 && a < b);
  });
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (std::equal(row(order[j - 1]), row(order[j - 1]) + uniformity, row(order[j]))) {
      reject(Kind::DuplicateEdge, order[j],
             "duplicates edge " + std::to_string(order[j - 1]));
    }
  }

  Hypergraph h;
  h.vertex_count_ = vertex_count;
  h.uniformity_ = uniformity;
  h.edge_count_ = m;
  h.offsets_.assign(std::size_t{vertex_count} + 1, 0);
  for (VertexId v : flat) ++h.offsets_[v + 1];
  std::partial_sum(h.offsets_.begin(), h.offsets_.end(), h.offsets_.begin());
  h.incidence_.resize(flat.size());
  std::vector<std::size_t> cursor(h.offsets_.begin(), h.offsets_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t j = 0; j < uniformity; ++j) {
      h.incidence_[cursor[flat[e * uniformity + j]]++] = static_cast<EdgeId>(e);
    }
  }
  h.vertices_ = std::move(flat);
  return h;
}

std::optional<std::uint32_t> is_regular(const Hypergraph& h) {
  if (h.vertex_count() == 0) return std::nullopt;
  const std::uint32_t d = h.degree(0);
  for (VertexId v = 1; v < h.vertex_count(); ++v) {
    if (h.degree(v) != d) return std::nullopt;
  }
  return d;
}

DegreeSpread degree_spread(const Hypergraph& h) {
  DegreeSpread s;
  if (h.vertex_count() == 0) return s;
  s.min = s.max = h.degree(0);
  for (VertexId v = 1; v < h.vertex_count(); ++v) {
    s.min = std::min(s.min, h.degree(v));
    s.max = std::max(s.max, h.degree(v));
  }
  return s;
}

}  // namespace greedy
