#include "zxconn/depth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <thread>

#include "zxconn/errors.hpp"
#include "zxconn/rng.hpp"

namespace zxconn {

std::string to_string(LayerPolicy policy) {
  return policy == LayerPolicy::kEarliestFree ? "earliest-free" : "after-last-use";
}

LayerPolicy parse_layer_policy(const std::string& name) {
  if (name == "earliest-free") return LayerPolicy::kEarliestFree;
  if (name == "after-last-use") return LayerPolicy::kAfterLastUse;
  throw DomainError("unknown layer policy '" + name + "'");
}

namespace {

// Per-qubit occupancy bitset over layers.
class LayerOccupancy {
 public:
  explicit LayerOccupancy(std::size_t qubits) : words_(qubits) {}

  std::size_t first_free(std::size_t a, std::size_t b) const {
    const auto& wa = words_[a];
    const auto& wb = words_[b];
    const std::size_t common = std::max(wa.size(), wb.size());
    for (std::size_t w = 0; w < common; ++w) {
      const std::uint64_t used = (w < wa.size() ? wa[w] : 0) | (w < wb.size() ? wb[w] : 0);
      if (used != ~std::uint64_t{0}) return w * 64 + static_cast<std::size_t>(std::countr_one(used));
    }
    return common * 64;
  }

  void occupy(std::size_t q, std::size_t layer) {
    auto& w = words_[q];
    if (w.size() <= layer / 64) w.resize(layer / 64 + 1, 0);
    w[layer / 64] |= std::uint64_t{1} << (layer % 64);
  }

 private:
  std::vector<std::vector<std::uint64_t>> words_;
};

}  // namespace

DepthSchedule asap_schedule(const Graph& graph, LayerPolicy policy) {
  const auto& edges = graph.edges();
  DepthSchedule schedule;
  schedule.layer_of_edge.resize(edges.size());

  if (policy == LayerPolicy::kAfterLastUse) {
    std::vector<std::size_t> next_free(graph.node_count(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.is_loop()) continue;
      const std::size_t layer = std::max(next_free[e.u], next_free[e.v]);
      next_free[e.u] = next_free[e.v] = layer + 1;
      schedule.layer_of_edge[i] = layer;
      schedule.depth = std::max(schedule.depth, layer + 1);
    }
    return schedule;
  }

  LayerOccupancy occupancy(graph.node_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.is_loop()) continue;
    const std::size_t layer = occupancy.first_free(e.u, e.v);
    occupancy.occupy(e.u, layer);
    occupancy.occupy(e.v, layer);
    schedule.layer_of_edge[i] = layer;
    schedule.depth = std::max(schedule.depth, layer + 1);
  }
  return schedule;
}

bool is_valid_schedule(const Graph& graph, const DepthSchedule& schedule) {
  const auto& edges = graph.edges();
  if (schedule.layer_of_edge.size() != edges.size()) return false;
  std::vector<std::vector<std::size_t>> layers_of_node(graph.node_count());
  std::size_t max_layer_plus_one = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& layer = schedule.layer_of_edge[i];
    if (edges[i].is_loop()) {
      if (layer) return false;
      continue;
    }
    if (!layer) return false;
    layers_of_node[edges[i].u].push_back(*layer);
    layers_of_node[edges[i].v].push_back(*layer);
    max_layer_plus_one = std::max(max_layer_plus_one, *layer + 1);
  }
  for (auto& layers : layers_of_node) {
    std::sort(layers.begin(), layers.end());
    if (std::adjacent_find(layers.begin(), layers.end()) != layers.end()) return false;
  }
  return max_layer_plus_one == schedule.depth;
}

DepthBounds depth_bounds(std::size_t n, std::size_t m) {
  if (n < 1) throw DomainError("depth bounds need n >= 1");
  return {(m + n - 1) / n, m};
}

std::size_t sorted_complete_depth(std::size_t n, LayerPolicy policy) {
  if (n < 2) throw DomainError("sorted complete depth needs n >= 2");
  return asap_schedule(generate_complete(n), policy).depth;
}

double lower_bound_fit(std::size_t n, std::size_t m) {
  if (n < 1) throw DomainError("lower-bound fit needs n >= 1");
  constexpr double kScale = 2.0;
  constexpr double kOffset = 1.0;
  constexpr double kSlope = 0.5;
  constexpr double kExponent = 0.88;
  return kScale * static_cast<double>(m) /
         std::pow(kOffset + kSlope * static_cast<double>(n), kExponent);
}

namespace {

Graph draw_graph(const DepthExperiment& ex, std::uint64_t trial_seed) {
  struct Visitor {
    std::size_t n;
    std::uint64_t seed;
    Graph operator()(const ErdosRenyiModel& m) const { return generate_erdos_renyi(n, m.p, seed); }
    Graph operator()(const FixedEdgeCountModel& m) const {
      return generate_fixed_edge_count(n, m.m, seed);
    }
    Graph operator()(const MultigraphModel& m) const {
      return generate_random_multigraph(n, m.m, seed, false);
    }
    Graph operator()(const FixedGraphModel& m) const { return m.graph; }
  };
  return std::visit(Visitor{ex.n, trial_seed}, ex.model);
}

}  // namespace

DepthExperimentReport monte_carlo_depth(const DepthExperiment& ex) {
  if (ex.trials < 1) throw DomainError("at least one trial is required");
  if (const auto* fixed = std::get_if<FixedGraphModel>(&ex.model);
      fixed && fixed->graph.node_count() != ex.n) {
    throw DomainError("fixed graph node count differs from experiment n");
  }

  DepthExperimentReport report;
  report.n = ex.n;
  report.trials = ex.trials;
  report.seed = ex.seed;
  report.per_trial.resize(ex.trials);
  std::visit(
      [&report](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErdosRenyiModel>) {
          report.model = "er";
          report.model_value = m.p;
        } else if constexpr (std::is_same_v<T, FixedEdgeCountModel>) {
          report.model = "fixed-m";
          report.model_value = static_cast<double>(m.m);
        } else if constexpr (std::is_same_v<T, MultigraphModel>) {
          report.model = "multigraph-m";
          report.model_value = static_cast<double>(m.m);
        } else {
          report.model = "graph";
          report.model_value = static_cast<double>(m.graph.edge_count());
        }
      },
      ex.model);

  auto run_trial = [&](std::size_t t) {
    const std::uint64_t trial_seed = mix_seed(ex.seed, t);
    const Graph g = draw_graph(ex, trial_seed);
    const Graph shuffled = shuffle_edges(g, mix_seed(trial_seed, 1));
    report.per_trial[t] = {t, g.edge_count(), asap_schedule(shuffled, ex.policy).depth, trial_seed};
  };

  std::size_t threads = ex.threads ? ex.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, ex.trials);
  if (threads <= 1) {
    for (std::size_t t = 0; t < ex.trials; ++t) run_trial(t);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < ex.trials; t += threads) run_trial(t);
      });
    }
  }

  double sum = 0.0;
  double edges = 0.0;
  report.min_depth = report.per_trial.front().depth;
  report.max_depth = report.per_trial.front().depth;
  for (const auto& t : report.per_trial) {
    sum += static_cast<double>(t.depth);
    edges += static_cast<double>(t.edge_count);
    report.min_depth = std::min(report.min_depth, t.depth);
    report.max_depth = std::max(report.max_depth, t.depth);
  }
  const double trials = static_cast<double>(ex.trials);
  report.mean_depth = sum / trials;
  report.mean_edge_count = edges / trials;
  if (ex.trials > 1) {
    double ss = 0.0;
    for (const auto& t : report.per_trial) {
      const double d = static_cast<double>(t.depth) - report.mean_depth;
      ss += d * d;
    }
    report.std_error = std::sqrt(ss / (trials - 1.0)) / std::sqrt(trials);
  }
  return report;
}

std::string depth_trials_csv(const DepthExperimentReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "n,m_or_p,trial,depth,seed\n";
  for (const auto& t : report.per_trial) {
    out << report.n << ',' << report.model_value << ',' << t.trial << ',' << t.depth << ','
        << t.seed << '\n';
  }
  return out.str();
}

}  // namespace zxconn
