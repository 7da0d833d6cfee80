#include "greedy/drift_suite.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "greedy/binomial.hpp"
#include "greedy/bounds.hpp"
#include "greedy/errors.hpp"
#include "greedy/generators.hpp"
#include "greedy/process.hpp"
#include "greedy/random.hpp"

namespace greedy::analysis {

namespace {

std::string str(const Rational& q) {
  std::ostringstream os;
  os << q.numerator() << '/' << q.denominator();
  return os.str();
}

nlohmann::ordered_json describe(const NamedInstance& inst, const ProcessState& state,
                                const std::string& check, std::optional<VertexId> vertex,
                                const DriftReport& rep) {
  const Hypergraph& h = inst.hypergraph;
  nlohmann::ordered_json j;
  j["instance"] = inst.name;
  j["r"] = h.uniformity();
  j["N"] = h.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto vs = h.edge(e);
    edges.push_back(std::vector<VertexId>(vs.begin(), vs.end()));
  }
  j["edges"] = edges;
  j["choices"] = std::vector<EdgeId>(state.matching().begin(), state.matching().end());
  j["check"] = check;
  j["vertex"] = vertex ? nlohmann::ordered_json(*vertex) : nullptr;
  j["exact"] = str(rep.exact);
  j["main_term"] = str(rep.main_term);
  j["gap"] = str(rep.gap);
  j["bound"] = str(rep.bound);
  return j;
}

// Random hypergraph with at most max_edges edges and r in {2, 3, 4}.
NamedInstance random_instance(Rng& rng, std::size_t max_edges, std::size_t index) {
  std::uniform_int_distribution<std::uint32_t> pick_r(2, 4);
  while (true) {
    const std::uint32_t r = pick_r(rng);
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(r + 1, 20)(rng);
    const std::uint64_t by_size = max_edges * r / n;
    const std::uint64_t by_room = binomial(n - 1, r - 1) / 2;
    const std::uint64_t top = std::min(by_size, by_room);
    if (top < 1) continue;
    const auto d = std::uniform_int_distribution<std::uint32_t>(
        1, static_cast<std::uint32_t>(top))(rng);
    try {
      auto made = random_near_regular(n, r, d, rng);
      if (made.hypergraph.edge_count() == 0) continue;
      return {"random" + std::to_string(index) + "_r" + std::to_string(r) + "_N" +
                  std::to_string(n) + "_D" + std::to_string(d),
              std::move(made.hypergraph)};
    } catch (const ParameterError&) {
      continue;
    }
  }
}

}  // namespace

std::vector<NamedInstance> drift_corpus() {
  std::vector<NamedInstance> out;
  out.push_back({"single_edge", build_hypergraph(3, 3, {{0, 1, 2}})});
  out.push_back({"disjoint_edges", build_hypergraph(4, 2, {{0, 1}, {2, 3}})});
  out.push_back({"star", build_hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}})});
  out.push_back({"H23_4", build_steiner(steiner_params(4, 2, 3))});
  out.push_back({"H23_5", build_steiner(steiner_params(5, 2, 3))});
  out.push_back({"H24_6", build_steiner(steiner_params(6, 2, 4))});
  return out;
}

DriftSuiteReport run_drift_suite(const DriftSuiteConfig& cfg) {
  if (cfg.max_edges > kMaxEnumerationEdges) {
    throw ParameterError("max edges " + std::to_string(cfg.max_edges) +
                         " exceeds the enumeration cap " +
                         std::to_string(kMaxEnumerationEdges));
  }
  DriftSuiteReport rep;
  Rng rng = make_rng(cfg.seed);

  auto instances = drift_corpus();
  for (std::size_t i = 0; i < cfg.random_instances; ++i) {
    instances.push_back(random_instance(rng, cfg.max_edges, i));
  }

  auto fail = [&](nlohmann::ordered_json j) {
    ++rep.violations;
    if (!rep.counterexample) rep.counterexample = std::move(j);
  };

  std::uint64_t walk = 0;
  for (const auto& inst : instances) {
    const Hypergraph& h = inst.hypergraph;
    const std::uint64_t L = max_codegree(h);
    ++rep.instances;
    std::size_t seen = 0;
    // Every non-terminal state along each walk counts; walks repeat until
    // enough states have been examined.
    while (seen < cfg.states_per_instance) {
      ProcessState state(h, derive_seed(cfg.seed, ++walk));
      while (state.q() > 0) {
        ++seen;
        ++rep.states;
        const DriftReport q = exact_drift_q(state, h, L, cfg.fault);
        ++rep.q_checks;
        if (!q.within_bound) fail(describe(inst, state, "q", std::nullopt, q));
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
          if (state.is_saturated(v)) continue;
          const DriftReport d = exact_drift_dv(state, h, v, L, cfg.fault);
          ++rep.dv_checks;
          if (!d.within_bound) fail(describe(inst, state, "dv", v, d));
        }
        greedy_step(state, h);
      }
    }
  }

  std::uniform_real_distribution<double> centre(-100.0, 100.0);
  std::uniform_real_distribution<double> radius(0.0, 10.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t t = 0; t < cfg.lemma_trials; ++t) {
    const auto len = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    const double x = centre(rng), y = centre(rng);
    double delta = radius(rng), eps = radius(rng);
    std::vector<double> xs(len), ys(len);
    for (std::size_t i = 0; i < len; ++i) {
      xs[i] = x + delta * unit(rng);
      ys[i] = y + eps * unit(rng);
      // Rounding in x + u can push an element just past its radius.
      delta = std::max(delta, std::abs(xs[i] - x));
      eps = std::max(eps, std::abs(ys[i] - y));
    }
    ++rep.lemma_checks;
    const auto c = lemma_product_bound_check(xs, ys, x, y, delta, eps);
    if (!c.holds) {
      nlohmann::ordered_json j;
      j["check"] = "product_lemma";
      j["xs"] = xs;
      j["ys"] = ys;
      j["x"] = x;
      j["y"] = y;
      j["delta"] = delta;
      j["epsilon"] = eps;
      j["lhs_gap"] = c.lhs_gap;
      j["bound"] = c.bound;
      fail(std::move(j));
    }
  }

  auto tail_case = [&](const char* name, bool ok) {
    ++rep.tail_checks;
    if (!ok) {
      nlohmann::ordered_json j;
      j["check"] = std::string("tail_bound_") + name;
      fail(std::move(j));
    }
  };
  {
    // a^2 = 3 theta Theta m gives exactly e^-1.
    const double theta = 1.0, big = 20.0;
    const std::uint64_t m = 100;
    const double a = std::sqrt(3.0 * theta * big * static_cast<double>(m));
    tail_case("plug_in", std::abs(supermartingale_tail_bound(a, theta, big, m) -
                                  std::exp(-1.0)) < 1e-12);
    tail_case("small_a", supermartingale_tail_bound(1e-9, theta, big, m) > 1.0 - 1e-12);
  }
  auto raises = [](auto&& f, HypothesisError::Kind kind) {
    try {
      f();
    } catch (const HypothesisError& e) {
      return e.kind() == kind;
    }
    return false;
  };
  tail_case("step_ratio", raises([] { supermartingale_tail_bound(1.0, 1.0, 5.0, 100); },
                                 HypothesisError::Kind::StepRatio));
  tail_case("deviation", raises([] { supermartingale_tail_bound(100.0, 1.0, 20.0, 100); },
                                HypothesisError::Kind::DeviationTooLarge));
  return rep;
}

}  // namespace greedy::analysis
