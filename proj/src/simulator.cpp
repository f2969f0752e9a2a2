#include "zxconn/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zxconn/errors.hpp"
#include "zxconn/rng.hpp"
#include "zxconn/union_find.hpp"

namespace zxconn {

namespace {

constexpr double kImpossibleBranch = 1e-14;

void check_register(std::size_t n, std::size_t cap) {
  if (n < 1) throw DomainError("a register needs at least one qubit");
  if (n > cap) {
    throw SizeError(std::to_string(n) + " qubits exceed the dense-state cap of " +
                    std::to_string(cap));
  }
}

std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

void apply_phase_to_ones(std::vector<Amplitude>& amps, Qubit q, double theta) {
  if (wrap_phase(theta) == 0.0) return;
  const Amplitude factor = std::polar(1.0, theta);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit(q)) amps[i] *= factor;
  }
}

void apply_cnot(std::vector<Amplitude>& amps, Qubit control, Qubit target) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & bit(control)) && !(i & bit(target))) std::swap(amps[i], amps[i | bit(target)]);
  }
}

}  // namespace

double QuantumState::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

std::string basis_label(std::uint64_t index, std::size_t qubit_count) {
  std::string out(qubit_count, '0');
  for (std::size_t q = 0; q < qubit_count; ++q) {
    if (index & bit(q)) out[q] = '1';
  }
  return out;
}

std::uint64_t basis_index(std::string_view label) {
  if (label.size() > 64) throw SizeError("bitstring longer than 64 qubits");
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    if (label[q] == '1') {
      index |= bit(q);
    } else if (label[q] != '0') {
      throw DomainError("bitstring may only contain '0' and '1'");
    }
  }
  return index;
}

QuantumState init_plus_state(std::size_t n, std::size_t qubit_cap) {
  check_register(n, qubit_cap);
  QuantumState state;
  state.qubit_count = n;
  state.amplitudes.assign(std::size_t{1} << n, Amplitude(std::pow(2.0, -static_cast<double>(n) / 2.0)));
  state.survival_probability = 1.0;
  return state;
}

QuantumState apply_spider_projector(QuantumState state, Qubit a, Qubit b, double phase,
                                    std::size_t gate_index) {
  if (a >= state.qubit_count || b >= state.qubit_count) {
    throw RangeError("projector leg outside the register");
  }
  if (a == b) throw DomainError("projector legs must be distinct");
  if (!(state.survival_probability > 0.0)) throw DissipationError(gate_index);

  double total = 0.0;
  double kept = 0.0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w = std::norm(state.amplitudes[i]);
    total += w;
    const bool ba = (i & bit(a)) != 0;
    const bool bb = (i & bit(b)) != 0;
    if (ba != bb) {
      state.amplitudes[i] = 0.0;
    } else {
      kept += w;
    }
  }
  if (!(kept > 0.0)) throw DissipationError(gate_index);
  apply_phase_to_ones(state.amplitudes, a, phase);

  const double success = kept / total;
  if (success != 1.0) {
    const double scale = 1.0 / std::sqrt(kept);
    for (auto& amp : state.amplitudes) amp *= scale;
  }
  state.survival_probability *= success;
  return state;
}

QuantumState run_circuit(const SpiderCircuit& circuit, std::size_t qubit_cap) {
  circuit.validate();
  QuantumState state = init_plus_state(circuit.qubit_count, qubit_cap);
  if (!circuit.hadamard_layer) {
    std::fill(state.amplitudes.begin(), state.amplitudes.end(), Amplitude(0.0));
    state.amplitudes[0] = 1.0;
  }
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const auto& g = circuit.gates[i];
    state = apply_spider_projector(std::move(state), g.a, g.b, g.phase, i);
  }
  return state;
}

QuantumState run_circuit_dense(const SpiderCircuit& circuit) {
  const QuantumState start = run_circuit(SpiderCircuit{circuit.qubit_count, circuit.hadamard_layer, {}, {}});
  Eigen::VectorXcd v(static_cast<Eigen::Index>(start.amplitudes.size()));
  for (std::size_t i = 0; i < start.amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = start.amplitudes[i];
  v = circuit_operator(circuit) * v;

  QuantumState out;
  out.qubit_count = circuit.qubit_count;
  out.survival_probability = v.squaredNorm();
  if (out.survival_probability == 0.0) throw DissipationError(circuit.gates.size());
  v /= std::sqrt(out.survival_probability);
  out.amplitudes.assign(v.data(), v.data() + v.size());
  return out;
}

QuantumState expected_final_state(const Graph& graph, std::size_t qubit_cap) {
  check_register(graph.node_count(), qubit_cap);
  const ComponentPartition parts = bfs_components(graph);
  const std::size_t k = parts.component_count();

  std::vector<std::uint64_t> masks;
  masks.reserve(k);
  for (const auto& members : parts.components) {
    std::uint64_t mask = 0;
    for (Node v : members) mask |= bit(v);
    masks.push_back(mask);
  }

  QuantumState state;
  state.qubit_count = graph.node_count();
  state.amplitudes.assign(std::size_t{1} << state.qubit_count, Amplitude(0.0));
  const double amplitude = std::pow(2.0, -static_cast<double>(k) / 2.0);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    std::uint64_t index = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (choice & bit(c)) index |= masks[c];
    }
    state.amplitudes[index] = amplitude;
  }
  state.survival_probability =
      std::ldexp(1.0, static_cast<int>(k) - static_cast<int>(state.qubit_count));
  return state;
}

MeasurementRecord sample_measurements(const QuantumState& state, std::size_t shots,
                                      std::uint64_t seed) {
  if (shots < 1) throw DomainError("at least one shot is required");
  std::vector<std::uint64_t> support;
  std::vector<double> cumulative;
  double running = 0.0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w = std::norm(state.amplitudes[i]);
    if (w == 0.0) continue;
    running += w;
    support.push_back(i);
    cumulative.push_back(running);
  }
  if (support.empty()) throw DissipationError(0);

  Rng rng(seed);
  MeasurementRecord record;
  record.qubit_count = state.qubit_count;
  record.seed = seed;
  record.shots.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    record.shots.push_back(basis_label(support[static_cast<std::size_t>(it - cumulative.begin())],
                                       state.qubit_count));
  }
  return record;
}

MeasurementRecord sample_component_outcomes(const ComponentPartition& partition, std::size_t shots,
                                            std::uint64_t seed) {
  if (shots < 1) throw DomainError("at least one shot is required");
  Rng rng(seed);
  MeasurementRecord record;
  record.qubit_count = partition.node_count();
  record.seed = seed;
  record.shots.reserve(shots);
  std::vector<char> component_bit(partition.component_count());
  for (std::size_t s = 0; s < shots; ++s) {
    for (auto& b : component_bit) b = static_cast<char>('0' + (rng.next() >> 63));
    std::string shot(partition.node_count(), '0');
    for (std::size_t v = 0; v < shot.size(); ++v) shot[v] = component_bit[partition.assignment[v]];
    record.shots.push_back(std::move(shot));
  }
  return record;
}

namespace {

// Returns nullopt when `choose` selects a zero-probability branch.
std::optional<AncillaRun> run_ancilla(const SpiderCircuit& circuit,
                                      const AncillaOutcomeChooser& choose, std::size_t qubit_cap) {
  circuit.validate();
  const std::size_t n = circuit.qubit_count;
  check_register(n + (circuit.gates.empty() ? 0 : 1), qubit_cap);

  AncillaRun run;
  run.state = run_circuit(SpiderCircuit{n, circuit.hadamard_layer, {}, {}}, qubit_cap);
  auto& data = run.state.amplitudes;
  const std::size_t half = data.size();

  UnionFind clusters(n);
  std::vector<std::vector<Qubit>> members(n);
  std::vector<double> cluster_phase(n, 0.0);
  for (Qubit q = 0; q < n; ++q) members[q] = {q};

  std::vector<Amplitude> extended(2 * half);
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const auto& g = circuit.gates[gi];
    const Qubit ancilla = n;

    std::fill(extended.begin(), extended.end(), Amplitude(0.0));
    std::copy(data.begin(), data.end(), extended.begin());
    apply_cnot(extended, g.a, ancilla);
    apply_cnot(extended, g.b, ancilla);

    double p_even = 0.0;
    double p_odd = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      p_even += std::norm(extended[i]);
      p_odd += std::norm(extended[half + i]);
    }
    const double total = p_even + p_odd;
    const int outcome = choose(gi, p_odd / total);
    const double p_outcome = (outcome ? p_odd : p_even) / total;
    if (p_outcome < kImpossibleBranch) return std::nullopt;

    const double scale = 1.0 / std::sqrt(outcome ? p_odd : p_even);
    const std::size_t offset = outcome ? half : 0;
    for (std::size_t i = 0; i < half; ++i) data[i] = extended[offset + i] * scale;
    run.outcomes.push_back(outcome);
    ++run.ancillas_used;

    std::size_t ra = clusters.find(g.a);
    std::size_t rb = clusters.find(g.b);
    double correction = g.phase;
    if (outcome == 1) {
      const std::size_t flipped = members[rb].size() <= members[ra].size() ? rb : ra;
      std::uint64_t mask = 0;
      for (Qubit q : members[flipped]) mask |= bit(q);
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t j = i ^ mask;
        if (i < j) std::swap(data[i], data[j]);
      }
      correction += 2.0 * cluster_phase[flipped];
    }
    apply_phase_to_ones(data, g.a, correction);

    if (ra == rb) {
      cluster_phase[ra] = wrap_phase(cluster_phase[ra] + g.phase);
    } else {
      const double merged_phase = wrap_phase(cluster_phase[ra] + cluster_phase[rb] + g.phase);
      const std::size_t root = clusters.unite(ra, rb);
      const std::size_t other = root == ra ? rb : ra;
      members[root].insert(members[root].end(), members[other].begin(), members[other].end());
      members[other].clear();
      cluster_phase[root] = merged_phase;
    }
  }
  run.state.survival_probability = 1.0;
  return run;
}

}  // namespace

AncillaRun run_circuit_ancilla_mode(const SpiderCircuit& circuit, std::uint64_t seed,
                                    std::size_t qubit_cap) {
  Rng rng(seed);
  auto result = run_ancilla(
      circuit, [&rng](std::size_t, double p_odd) { return rng.uniform01() < p_odd ? 1 : 0; },
      qubit_cap);
  return std::move(*result);
}

AncillaRun run_circuit_ancilla_mode(const SpiderCircuit& circuit,
                                    const AncillaOutcomeChooser& choose, std::size_t qubit_cap) {
  auto result = run_ancilla(circuit, choose, qubit_cap);
  if (!result) throw DomainError("ancilla outcome chooser selected a zero-probability branch");
  return std::move(*result);
}

std::optional<AncillaRun> run_circuit_ancilla_branch(const SpiderCircuit& circuit,
                                                     std::span<const int> outcomes,
                                                     std::size_t qubit_cap) {
  if (outcomes.size() != circuit.gates.size()) {
    throw DomainError("one forced outcome per gate is required");
  }
  return run_ancilla(
      circuit, [outcomes](std::size_t gi, double) { return outcomes[gi] ? 1 : 0; }, qubit_cap);
}

SurvivalReport survival_report(const Graph& graph) {
  SurvivalReport report;
  const std::size_t n = graph.node_count();
  report.component_count = bfs_components(graph).component_count();
  report.survival =
      std::ldexp(1.0, static_cast<int>(report.component_count) - static_cast<int>(n));
  if (n >= 2) report.quoted_decay_estimate = 1.0 / (std::ldexp(1.0, static_cast<int>(n)) - 2.0);
  return report;
}

double max_deviation_up_to_phase(const QuantumState& a, const QuantumState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) return std::numeric_limits<double>::infinity();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i]) > std::abs(a.amplitudes[pivot])) pivot = i;
  }
  Amplitude align = 1.0;
  if (std::abs(b.amplitudes[pivot]) > 0.0 && std::abs(a.amplitudes[pivot]) > 0.0) {
    align = std::polar(1.0, std::arg(a.amplitudes[pivot]) - std::arg(b.amplitudes[pivot]));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes[i] - align * b.amplitudes[i]));
  }
  return worst;
}

std::vector<std::pair<std::string, Amplitude>> nonzero_amplitudes(const QuantumState& state,
                                                                  double threshold) {
  std::vector<std::pair<std::string, Amplitude>> out;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    if (std::abs(state.amplitudes[i]) > threshold) {
      out.emplace_back(basis_label(i, state.qubit_count), state.amplitudes[i]);
    }
  }
  return out;
}

}  // namespace zxconn
