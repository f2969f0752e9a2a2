#include "zxconn/zx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zxconn/errors.hpp"
#include "zxconn/union_find.hpp"

namespace zxconn {

double wrap_phase(double phase) noexcept {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Spider::Spider(std::vector<Qubit> legs, double phase) : legs_(std::move(legs)), phase_(wrap_phase(phase)) {
  if (legs_.empty()) throw DomainError("a spider needs at least one leg");
  std::sort(legs_.begin(), legs_.end());
  legs_.erase(std::unique(legs_.begin(), legs_.end()), legs_.end());
}

void SpiderCircuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    if (g.a >= qubit_count || g.b >= qubit_count) {
      throw RangeError("gate " + std::to_string(i) + " acts outside the " +
                       std::to_string(qubit_count) + "-qubit register");
    }
    if (g.a == g.b) throw DomainError("gate " + std::to_string(i) + " has coinciding legs");
  }
}

ComplexMatrix spider_matrix(std::size_t leg_count, double phase) {
  if (leg_count == 0) throw DomainError("a spider needs at least one leg");
  if (leg_count > kMaxDenseLegs) {
    throw SizeError("dense spider matrix limited to " + std::to_string(kMaxDenseLegs) + " legs");
  }
  const Eigen::Index dim = Eigen::Index{1} << leg_count;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(0, 0) = 1.0;
  m(dim - 1, dim - 1) = std::polar(1.0, phase);
  return m;
}

SpiderCircuit compile_graph_to_circuit(const Graph& graph, double phase) {
  if (graph.node_count() < 1) throw DomainError("cannot compile a graph without nodes");
  SpiderCircuit circuit;
  circuit.qubit_count = graph.node_count();
  circuit.hadamard_layer = true;
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_loop()) {
      circuit.skipped_self_loops.push_back(i);
      continue;
    }
    circuit.gates.push_back({edges[i].u, edges[i].v, wrap_phase(phase), i});
  }
  return circuit;
}

Contraction contract_spiders(const SpiderCircuit& circuit) {
  circuit.validate();
  const std::size_t n = circuit.qubit_count;
  UnionFind sets(n);
  for (const auto& g : circuit.gates) sets.unite(g.a, g.b);

  std::vector<std::size_t> root(n);
  for (Qubit q = 0; q < n; ++q) root[q] = sets.find(q);
  Contraction out;
  out.partition = ComponentPartition::from_labels(root);

  std::vector<double> phase_sum(out.partition.component_count(), 0.0);
  for (const auto& g : circuit.gates) phase_sum[out.partition.assignment[g.a]] += g.phase;

  for (std::size_t c = 0; c < out.partition.component_count(); ++c) {
    const auto& members = out.partition.components[c];
    if (members.size() < 2) continue;
    out.spiders.emplace_back(members, phase_sum[c]);
  }
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const Qubit> legs,
                             std::size_t qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::size_t legs_mask = 0;
  for (Qubit q : legs) legs_mask |= std::size_t{1} << q;
  auto local_index = [&](std::size_t global) {
    std::size_t local = 0;
    for (std::size_t b = 0; b < legs.size(); ++b) {
      if (global >> legs[b] & 1U) local |= std::size_t{1} << b;
    }
    return local;
  };

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if ((row & ~legs_mask) != (col & ~legs_mask)) continue;
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          op(static_cast<Eigen::Index>(local_index(row)), static_cast<Eigen::Index>(local_index(col)));
    }
  }
  return out;
}

ComplexMatrix circuit_operator(const SpiderCircuit& circuit) {
  circuit.validate();
  const auto dim = Eigen::Index{1} << circuit.qubit_count;
  ComplexMatrix total = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : circuit.gates) {
    const Qubit legs[] = {g.a, g.b};
    total = embed_operator(spider_matrix(2, g.phase), legs, circuit.qubit_count) * total;
  }
  return total;
}

ComplexMatrix contraction_operator(const Contraction& contraction, std::size_t qubit_count) {
  const auto dim = Eigen::Index{1} << qubit_count;
  ComplexMatrix total = ComplexMatrix::Identity(dim, dim);
  for (const auto& s : contraction.spiders) {
    total = embed_operator(spider_matrix(s.leg_count(), s.phase()), s.legs(), qubit_count) * total;
  }
  return total;
}

}  // namespace zxconn
