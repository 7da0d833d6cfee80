#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedy/drift.hpp"
#include "greedy/hypergraph.hpp"

namespace greedy::analysis {

struct NamedInstance {
  std::string name;
  Hypergraph hypergraph;
};

/// Single edge (r=3), two disjoint 2-edges, a 3-leaf star, H_{2,3}(4),
/// H_{2,3}(5) and H_{2,4}(6).
std::vector<NamedInstance> drift_corpus();

struct DriftSuiteConfig {
  std::size_t random_instances = 50;
  std::size_t max_edges = 200;  // at most kMaxEnumerationEdges
  std::size_t states_per_instance = 20;
  std::uint64_t seed = 0;
  std::size_t lemma_trials = 1000;
  DriftOptions fault;  // non-zero only in fault-injection runs
};

struct DriftSuiteReport {
  std::size_t instances = 0;
  std::size_t states = 0;
  std::size_t q_checks = 0;
  std::size_t dv_checks = 0;
  std::size_t lemma_checks = 0;
  std::size_t tail_checks = 0;
  std::size_t violations = 0;
  /// First violation: the instance, the choices leading to the state and the
  /// failing quantity.
  std::optional<nlohmann::ordered_json> counterexample;
};

/// Walks random reachable states of the corpus and of random instances and
/// checks both drift sandwiches exactly, then runs the product-bound lemma on
/// random inputs and the tail-bound hypothesis checks. Throws ParameterError
/// if max_edges exceeds kMaxEnumerationEdges.
DriftSuiteReport run_drift_suite(const DriftSuiteConfig& config);

}  // namespace greedy::analysis
