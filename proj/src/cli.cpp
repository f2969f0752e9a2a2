#include "zxconn/cli.hpp"

#include <cmath>
#include <ios>
#include <random>
#include <sstream>

#include "zxconn/analyzer.hpp"
#include "zxconn/errors.hpp"
#include "zxconn/json_io.hpp"
#include "zxconn/partition_bound.hpp"
#include "zxconn/rng.hpp"

namespace zxconn::cli {

namespace {

constexpr const char* kSchema = "1";

// Streams derived from the run seed so that each stochastic stage is
// independently reproducible.
enum SeedStream : std::uint64_t { kGraphStream = 0, kSampleStream = 1, kAncillaStream = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph load_graph(const RunConfig& config) {
  struct Visitor {
    std::uint64_t seed;
    Graph operator()(std::monostate) const {
      throw UsageError("a graph source is required (--graph, --er, --complete or --random-m)");
    }
    Graph operator()(const FileSource& s) const {
      ParseOptions options;
      options.node_count = s.node_count;
      return read_edge_list_file(s.path, options);
    }
    Graph operator()(const ErdosRenyiSource& s) const {
      return generate_erdos_renyi(s.n, s.p, mix_seed(seed, kGraphStream));
    }
    Graph operator()(const CompleteSource& s) const { return generate_complete(s.n); }
    Graph operator()(const RandomEdgeCountSource& s) const {
      return generate_fixed_edge_count(s.n, s.m, mix_seed(seed, kGraphStream));
    }
  };
  return std::visit(Visitor{*config.seed}, config.graph);
}

std::string mode_name(Mode m) { return m == Mode::kProjector ? "projector" : "ancilla"; }

Json header(const RunConfig& config, const char* command) {
  return {{"schema", kSchema}, {"command", command}, {"seed", *config.seed}};
}

Json graph_summary(const Graph& g) {
  return {{"n", g.node_count()}, {"m", g.edge_count()}, {"self_loops", g.edge_count() - g.proper_edge_count()}};
}

struct Sampled {
  MeasurementRecord record;
  double survival = 1.0;
  std::string simulation;
  Json extra = Json::object();
};

Sampled simulate_and_sample(const RunConfig& config, const Graph& graph, std::size_t shots) {
  const std::uint64_t sample_seed = mix_seed(*config.seed, kSampleStream);
  Sampled out;
  if (graph.node_count() > config.qubit_cap) {
    if (!config.analytic) {
      throw SizeError(std::to_string(graph.node_count()) + " qubits exceed the state-vector cap of " +
                      std::to_string(config.qubit_cap) +
                      "; rerun with --analytic to sample the closed-form final state");
    }
    const auto partition = bfs_components(graph);
    out.record = sample_component_outcomes(partition, shots, sample_seed);
    out.survival = survival_report(graph).survival;
    out.simulation = "analytic";
    return out;
  }

  const SpiderCircuit circuit = compile_graph_to_circuit(graph);
  out.simulation = "statevector";
  if (config.mode == Mode::kProjector) {
    const QuantumState state = run_circuit(circuit, config.qubit_cap);
    out.survival = state.survival_probability;
    out.record = sample_measurements(state, shots, sample_seed);
  } else {
    const AncillaRun run =
        run_circuit_ancilla_mode(circuit, mix_seed(*config.seed, kAncillaStream), config.qubit_cap);
    out.survival = run.state.survival_probability;
    out.record = sample_measurements(run.state, shots, sample_seed);
    out.extra["ancillas_used"] = run.ancillas_used;
    out.extra["ancilla_outcomes"] = run.outcomes;
  }
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

CommandResult cmd_connect(const RunConfig& config) {
  if (config.format == Format::kCsv) throw UsageError("connect supports --format json|text");
  const Graph graph = load_graph(config);
  const std::size_t shots = config.shots.value_or(2);
  const Sampled sampled = simulate_and_sample(config, graph, shots);
  const ConnectivityVerdict verdict = decide_connected(sampled.record);

  Json report = header(config, "connect");
  report["mode"] = mode_name(config.mode);
  report["simulation"] = sampled.simulation;
  report["graph"] = graph_summary(graph);
  report["survival"] = sampled.survival;
  report["record"] = to_json(sampled.record);
  report["verdict"] = to_json(verdict);
  report.update(sampled.extra);
  std::optional<ComponentPartition> truth;
  if (config.oracle) {
    truth = bfs_components(graph);
    const bool connected = truth->component_count() <= 1;
    report["oracle"] = {{"source", "bfs"},
                        {"connected", connected},
                        {"k", truth->component_count()},
                        {"verdict_correct", connected == (verdict.verdict == Verdict::kConnected)}};
  }

  if (config.format == Format::kText) {
    std::ostringstream out;
    out << "verdict: " << to_string(verdict.verdict) << " (" << to_string(verdict.certainty)
        << ", error bound " << verdict.error_probability_bound << ")\n";
    out << "shots:";
    for (const auto& s : sampled.record.shots) out << ' ' << s;
    out << "\nsurvival: " << sampled.survival << "\nseed: " << *config.seed << '\n';
    if (truth) out << "oracle: " << (truth->component_count() <= 1 ? "connected" : "disconnected")
                   << " (k=" << truth->component_count() << ")\n";
    return {kOk, out.str()};
  }
  return {kOk, render(report)};
}

CommandResult cmd_components(const RunConfig& config) {
  if (config.format == Format::kCsv) throw UsageError("components supports --format json|text");
  const Graph graph = load_graph(config);
  std::optional<ComponentPartition> truth;
  if (config.oracle) truth = bfs_components(graph);
  const std::size_t shots = config.shots ? *config.shots : truth ? 2 * truth->component_count() : 2;
  const Sampled sampled = simulate_and_sample(config, graph, shots);
  const ComponentPartition recovered = group_components(sampled.record);

  Json report = header(config, "components");
  report["mode"] = mode_name(config.mode);
  report["simulation"] = sampled.simulation;
  report["graph"] = graph_summary(graph);
  report["survival"] = sampled.survival;
  report["record"] = to_json(sampled.record);
  report["recovered"] = to_json(recovered);
  report.update(sampled.extra);
  if (truth) {
    report["oracle"] = to_json(*truth);
    report["match"] = recovered == *truth;
  }

  if (config.format == Format::kText) {
    std::ostringstream out;
    out << "recovered " << recovered.component_count() << " group(s) from " << shots << " shots\n";
    for (const auto& group : recovered.components) {
      out << " ";
      for (Node v : group) out << ' ' << v;
      out << '\n';
    }
    if (truth) out << "oracle k=" << truth->component_count() << ", match=" << (recovered == *truth ? "yes" : "no") << '\n';
    out << "seed: " << *config.seed << '\n';
    return {kOk, out.str()};
  }
  return {kOk, render(report)};
}

CommandResult cmd_depth(const RunConfig& config) {
  Json report = header(config, "depth");
  report["policy"] = to_string(config.policy);

  if (!config.trials) {
    const Graph graph = load_graph(config);
    const DepthSchedule schedule = asap_schedule(graph, config.policy);
    const std::size_t proper = graph.proper_edge_count();
    if (config.format == Format::kCsv) {
      std::ostringstream out;
      out << "edge,u,v,layer\n";
      for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        const auto& e = graph.edges()[i];
        out << i << ',' << e.u << ',' << e.v << ',';
        if (schedule.layer_of_edge[i]) out << *schedule.layer_of_edge[i];
        out << '\n';
      }
      return {kOk, out.str()};
    }
    const DepthBounds bounds = depth_bounds(graph.node_count(), proper);
    if (config.format == Format::kText) {
      std::ostringstream out;
      out << "depth " << schedule.depth << " (bounds " << bounds.best << ".." << bounds.worst
          << ", fit " << lower_bound_fit(graph.node_count(), proper) << ")\n";
      return {kOk, out.str()};
    }
    report["graph"] = graph_summary(graph);
    report["depth"] = schedule.depth;
    report["layer_of_edge"] = to_json(schedule)["layer_of_edge"];
    report["bounds"] = {{"best", bounds.best}, {"worst", bounds.worst}};
    report["lower_bound_fit"] = lower_bound_fit(graph.node_count(), proper);
    return {kOk, render(report)};
  }

  DepthExperiment ex;
  ex.trials = *config.trials;
  ex.seed = *config.seed;
  ex.policy = config.policy;
  ex.threads = config.threads;
  if (const auto* er = std::get_if<ErdosRenyiSource>(&config.graph)) {
    ex.n = er->n;
    ex.model = ErdosRenyiModel{er->p};
  } else if (const auto* rm = std::get_if<RandomEdgeCountSource>(&config.graph)) {
    ex.n = rm->n;
    ex.model = FixedEdgeCountModel{rm->m};
  } else {
    Graph graph = load_graph(config);
    ex.n = graph.node_count();
    ex.model = FixedGraphModel{std::move(graph)};
  }
  const DepthExperimentReport result = monte_carlo_depth(ex);
  if (config.format == Format::kCsv) return {kOk, depth_trials_csv(result)};

  const auto mean_m = static_cast<std::size_t>(std::llround(result.mean_edge_count));
  const DepthBounds bounds = depth_bounds(ex.n, mean_m);
  if (config.format == Format::kText) {
    std::ostringstream out;
    out << "mean depth " << result.mean_depth << " ± " << result.std_error << " over "
        << result.trials << " trials (min " << result.min_depth << ", max " << result.max_depth
        << ", fit " << lower_bound_fit(ex.n, mean_m) << ")\nseed: " << *config.seed << '\n';
    return {kOk, out.str()};
  }
  report["experiment"] = to_json(result);
  report["bounds"] = {{"best", bounds.best}, {"worst", bounds.worst}};
  report["lower_bound_fit"] = lower_bound_fit(ex.n, mean_m);
  return {kOk, render(report)};
}

CommandResult cmd_bound(const RunConfig& config) {
  if (!config.bound_n || !config.bound_m) throw UsageError("bound requires --n and --m");
  const PartitionBoundReport result = mean_depth_upper_bound(*config.bound_n, *config.bound_m);
  if (config.format == Format::kCsv) return {kOk, per_depth_csv(result)};
  if (config.format == Format::kText) {
    std::ostringstream out;
    for (const auto& [d, count] : result.per_depth) out << "N_" << d << " = " << count << '\n';
    out << "mean depth bound = " << result.mean_exact << " ≈ " << result.mean << '\n';
    return {kOk, out.str()};
  }
  Json report = to_json(result);
  report["schema"] = kSchema;
  report["command"] = "bound";
  return {kOk, render(report)};
}

CommandResult cmd_tables(const RunConfig& config) {
  const std::size_t max = config.table_max;
  const RowCountTable rows = row_count_table(max);
  if (config.format == Format::kJson) {
    Json row_json = Json::array();
    for (const auto& row : rows.entries) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.str());
      row_json.push_back(std::move(r));
    }
    Json sums = Json::array();
    for (const auto& v : rows.column_sums) sums.push_back(v.str());
    Json parts = Json::array();
    for (std::size_t n = 1; n <= max; ++n) {
      Json r = Json::array();
      for (std::size_t k = 1; k <= max; ++k) r.push_back(partitions_into_k(n, k).str());
      parts.push_back(std::move(r));
    }
    Json report{{"schema", kSchema},
                {"command", "tables"},
                {"row_counts", {{"max_n_prime", max}, {"by_lambda", row_json}, {"column_sums", sums}}},
                {"partitions_into_k", parts}};
    return {kOk, render(report)};
  }
  return {kOk, row_count_table_csv(rows) + "\n" + partition_table_csv(max)};
}

CommandResult cmd_compile(const RunConfig& config) {
  if (config.format != Format::kJson) throw UsageError("compile supports --format json");
  const Graph graph = load_graph(config);
  const SpiderCircuit circuit = compile_graph_to_circuit(graph);
  const Contraction fused = contract_spiders(circuit);
  Json spiders = Json::array();
  for (const auto& s : fused.spiders) spiders.push_back({{"legs", s.legs()}, {"phase", s.phase()}});
  Json report = header(config, "compile");
  report["circuit"] = to_json(circuit);
  report["fused_spiders"] = std::move(spiders);
  report["partition"] = to_json(fused.partition);
  return {kOk, render(report)};
}

CommandResult cmd_simulate(const RunConfig& config) {
  if (config.format == Format::kText) throw UsageError("simulate supports --format json|csv");
  const Graph graph = load_graph(config);
  const SpiderCircuit circuit = compile_graph_to_circuit(graph);
  Json report = header(config, "simulate");
  report["mode"] = mode_name(config.mode);
  QuantumState state;
  if (config.mode == Mode::kProjector) {
    state = run_circuit(circuit, config.qubit_cap);
  } else {
    auto run = run_circuit_ancilla_mode(circuit, mix_seed(*config.seed, kAncillaStream), config.qubit_cap);
    report["ancilla_outcomes"] = run.outcomes;
    state = std::move(run.state);
  }
  if (config.format == Format::kCsv) {
    std::ostringstream out;
    out << "bits,re,im\n";
    out.precision(17);
    for (const auto& [bits, amp] : nonzero_amplitudes(state)) {
      out << bits << ',' << amp.real() << ',' << amp.imag() << '\n';
    }
    return {kOk, out.str()};
  }
  const SurvivalReport survival = survival_report(graph);
  report["graph"] = graph_summary(graph);
  report["survival"] = state.survival_probability;
  report["survival_exact"] = survival.survival;
  report["quoted_decay_estimate"] =
      survival.quoted_decay_estimate ? Json(*survival.quoted_decay_estimate) : Json(nullptr);
  report["state"] = state_dump(state);
  return {kOk, render(report)};
}

}  // namespace

std::uint64_t random_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

Mode parse_mode(const std::string& name) {
  if (name == "projector") return Mode::kProjector;
  if (name == "ancilla") return Mode::kAncilla;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + name + "'");
}

CommandResult run(RunConfig config) {
  if (!config.seed) config.seed = random_seed();
  try {
    if (config.shots && *config.shots == 0) throw UsageError("--shots must be at least 1");
    if (config.trials && *config.trials == 0) throw UsageError("--trials must be at least 1");
    switch (config.command) {
      case Command::kConnect: return cmd_connect(config);
      case Command::kComponents: return cmd_components(config);
      case Command::kDepth: return cmd_depth(config);
      case Command::kBound: return cmd_bound(config);
      case Command::kTables: return cmd_tables(config);
      case Command::kCompile: return cmd_compile(config);
      case Command::kSimulate: return cmd_simulate(config);
    }
    return {kFailure, "unknown command\n"};
  } catch (const UsageError& e) {
    return {kUsage, std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::ios_base::failure& e) {
    return {kIo, std::string("i/o error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kIo, std::string("parse error: ") + e.what() + "\n"};
  } catch (const RangeError& e) {
    return {kIo, std::string("range error: ") + e.what() + "\n"};
  } catch (const SizeError& e) {
    return {kCapExceeded, std::string("size error: ") + e.what() + "\n"};
  } catch (const InfeasibleError& e) {
    return {kInfeasible, std::string("infeasible: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kUsage, std::string("invalid argument: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kFailure, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace zxconn::cli
