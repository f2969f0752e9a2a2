#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zxconn/graph.hpp"

namespace zxconn {

// How a gate picks its layer when edges are scheduled in list order.
enum class LayerPolicy {
  // Smallest layer not used by either endpoint (gates commute, so a later
  // gate may fill an earlier gap).
  kEarliestFree,
  // One past the latest layer used by either endpoint; no backfilling.
  kAfterLastUse,
};

std::string to_string(LayerPolicy policy);
LayerPolicy parse_layer_policy(const std::string& name);

struct DepthSchedule {
  std::vector<std::optional<std::size_t>> layer_of_edge;  // nullopt for self-loops
  std::size_t depth = 0;
};

DepthSchedule asap_schedule(const Graph& graph, LayerPolicy policy = LayerPolicy::kEarliestFree);

// True if no two gates in a layer share a qubit and depth = max layer + 1.
bool is_valid_schedule(const Graph& graph, const DepthSchedule& schedule);

struct DepthBounds {
  std::size_t best = 0;   // ⌈m/n⌉
  std::size_t worst = 0;  // m
};

DepthBounds depth_bounds(std::size_t n, std::size_t m);

// Depth of K_n scheduled in lexicographic edge order. n ≥ 2.
std::size_t sorted_complete_depth(std::size_t n, LayerPolicy policy = LayerPolicy::kEarliestFree);

// 2m / (1 + n/2)^0.88, the empirical fit for the shuffled-order mean depth.
double lower_bound_fit(std::size_t n, std::size_t m);

struct ErdosRenyiModel {
  double p = 0.0;
};
struct FixedEdgeCountModel {
  std::size_t m = 0;
};
// m non-loop pairs drawn with replacement (duplicates allowed).
struct MultigraphModel {
  std::size_t m = 0;
};
// Reuses one graph every trial; only its edge order is reshuffled.
struct FixedGraphModel {
  Graph graph;
};

using GraphModel = std::variant<ErdosRenyiModel, FixedEdgeCountModel, MultigraphModel, FixedGraphModel>;

struct DepthExperiment {
  std::size_t n = 0;
  GraphModel model;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  LayerPolicy policy = LayerPolicy::kEarliestFree;
  // 0 = hardware concurrency.
  std::size_t threads = 0;
};

struct DepthTrial {
  std::size_t trial = 0;
  std::size_t edge_count = 0;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

struct DepthExperimentReport {
  std::size_t n = 0;
  std::string model;      // "er", "fixed-m", "multigraph-m", "graph"
  double model_value = 0;  // p or m
  std::size_t trials = 0;
  double mean_depth = 0.0;
  double std_error = 0.0;
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
  double mean_edge_count = 0.0;
  std::uint64_t seed = 0;
  std::vector<DepthTrial> per_trial;
};

// Each trial: draw a graph (seed derived from experiment seed and trial
// index), shuffle its edges, schedule, record depth.
DepthExperimentReport monte_carlo_depth(const DepthExperiment& experiment);

// CSV with columns n,m_or_p,trial,depth,seed.
std::string depth_trials_csv(const DepthExperimentReport& report);

}  // namespace zxconn
