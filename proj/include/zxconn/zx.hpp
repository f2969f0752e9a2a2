#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zxconn/graph.hpp"

namespace zxconn {

using Qubit = std::size_t;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxDenseLegs = 12;

// Reduces an angle to [0, 2π).
double wrap_phase(double phase) noexcept;

// Z spider used as a gate on its legs: |0…0⟩⟨0…0| + e^{iα}|1…1⟩⟨1…1|.
class Spider {
 public:
  // Legs are sorted and deduplicated; throws DomainError if empty.
  Spider(std::vector<Qubit> legs, double phase = 0.0);

  const std::vector<Qubit>& legs() const noexcept { return legs_; }
  double phase() const noexcept { return phase_; }
  std::size_t leg_count() const noexcept { return legs_.size(); }

  friend bool operator==(const Spider&, const Spider&) = default;

 private:
  std::vector<Qubit> legs_;
  double phase_ = 0.0;
};

// Two-leg gate in circuit order. `source_edge` indexes Graph::edges().
struct SpiderGate {
  Qubit a = 0;
  Qubit b = 0;
  double phase = 0.0;
  std::size_t source_edge = 0;

  friend bool operator==(const SpiderGate&, const SpiderGate&) = default;
};

struct SpiderCircuit {
  std::size_t qubit_count = 0;
  bool hadamard_layer = true;
  std::vector<SpiderGate> gates;
  // Edge indices of self-loops compiled to no-ops.
  std::vector<std::size_t> skipped_self_loops;

  // Throws RangeError for a leg outside the register, DomainError for a
  // gate whose legs coincide.
  void validate() const;
};

// Dense 2^L × 2^L matrix; throws SizeError above kMaxDenseLegs.
ComplexMatrix spider_matrix(std::size_t leg_count, double phase);

// One gate per non-loop edge, in edge order, all phases set to `phase`.
SpiderCircuit compile_graph_to_circuit(const Graph& graph, double phase = 0.0);

struct Contraction {
  // One fused spider per component with at least two qubits, ordered by
  // smallest leg.
  std::vector<Spider> spiders;
  ComponentPartition partition;
};

// Fuses gates that share a qubit until no two spiders share a leg.
Contraction contract_spiders(const SpiderCircuit& circuit);

// Embeds `op` (acting on `legs`, bit b of its index ↔ legs[b]) into an
// n-qubit operator with identity elsewhere. Qubit q ↔ bit q of the register
// index. Intended for cross-validation at small n.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const Qubit> legs,
                             std::size_t qubit_count);

// Ordered product of every gate's embedded matrix (no Hadamard layer).
ComplexMatrix circuit_operator(const SpiderCircuit& circuit);

// Tensor product of the contraction's fused spiders, identity on uncovered qubits.
ComplexMatrix contraction_operator(const Contraction& contraction, std::size_t qubit_count);

}  // namespace zxconn
