#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zxconn/graph.hpp"
#include "zxconn/zx.hpp"

namespace zxconn {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultQubitCap = 20;

// Dense state over n qubits; basis index bit q is qubit q. Amplitudes are
// unit-norm; survival_probability is the squared norm retained by all
// projections so far, relative to the post-Hadamard state.
struct QuantumState {
  std::size_t qubit_count = 0;
  std::vector<Amplitude> amplitudes;
  double survival_probability = 1.0;

  double norm_squared() const noexcept;
};

// Bitstring with character q = value of qubit q.
std::string basis_label(std::uint64_t index, std::size_t qubit_count);
std::uint64_t basis_index(std::string_view label);

struct MeasurementRecord {
  std::size_t qubit_count = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> shots;

  std::size_t shot_count() const noexcept { return shots.size(); }
};

QuantumState init_plus_state(std::size_t n, std::size_t qubit_cap = kDefaultQubitCap);

// Projects qubits (a, b) onto span{|00⟩, |11⟩}, multiplies |11⟩ by e^{iα},
// renormalizes and folds the retained weight into survival_probability.
// Throws DissipationError(gate_index) when nothing is retained.
QuantumState apply_spider_projector(QuantumState state, Qubit a, Qubit b, double phase,
                                    std::size_t gate_index = 0);

// Hadamard layer (if requested) then every gate in order.
QuantumState run_circuit(const SpiderCircuit& circuit, std::size_t qubit_cap = kDefaultQubitCap);

// Same evolution through dense gate matrices; for cross-checks at small n.
QuantumState run_circuit_dense(const SpiderCircuit& circuit);

// ⊗ over components of (|0…0⟩ + |1…1⟩)/√2, isolated nodes as |+⟩.
QuantumState expected_final_state(const Graph& graph, std::size_t qubit_cap = kDefaultQubitCap);

MeasurementRecord sample_measurements(const QuantumState& state, std::size_t shots,
                                      std::uint64_t seed);

// Samples the product-of-GHZ distribution directly from a partition without
// building a state vector: every component draws one fair bit per shot.
MeasurementRecord sample_component_outcomes(const ComponentPartition& partition, std::size_t shots,
                                            std::uint64_t seed);

// Ancilla realization: per gate, a fresh ancilla receives the parity of the
// two legs, is measured, and an odd outcome is fixed by flipping the smaller
// fused cluster (tie → cluster of the gate's second leg).
struct AncillaRun {
  QuantumState state;
  std::vector<int> outcomes;  // one per gate
  std::size_t ancillas_used = 0;
};

// Decides an ancilla outcome given (gate index, probability of odd parity).
using AncillaOutcomeChooser = std::function<int(std::size_t gate_index, double p_odd)>;

AncillaRun run_circuit_ancilla_mode(const SpiderCircuit& circuit, std::uint64_t seed,
                                    std::size_t qubit_cap = kDefaultQubitCap);
AncillaRun run_circuit_ancilla_mode(const SpiderCircuit& circuit,
                                    const AncillaOutcomeChooser& choose,
                                    std::size_t qubit_cap = kDefaultQubitCap);
// Forces every outcome; nullopt if the branch has zero probability.
std::optional<AncillaRun> run_circuit_ancilla_branch(const SpiderCircuit& circuit,
                                                     std::span<const int> outcomes,
                                                     std::size_t qubit_cap = kDefaultQubitCap);

struct SurvivalReport {
  double survival = 1.0;
  // 1/(2^n − 2) as quoted for the decay of the direct implementation;
  // undefined for n = 1.
  std::optional<double> quoted_decay_estimate;
  std::size_t component_count = 0;
};

SurvivalReport survival_report(const Graph& graph);

// Max |a_i − e^{iφ} b_i| after aligning the global phase on the largest
// amplitude of `a`. Infinity if the sizes differ.
double max_deviation_up_to_phase(const QuantumState& a, const QuantumState& b);

// Nonzero amplitudes as (bitstring, amplitude), for debug dumps.
std::vector<std::pair<std::string, Amplitude>> nonzero_amplitudes(const QuantumState& state,
                                                                  double threshold = 1e-15);

}  // namespace zxconn
