#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zxconn/graph.hpp"
#include "zxconn/simulator.hpp"

namespace zxconn {

enum class Verdict { kConnected, kDisconnected };
enum class Certainty { kCertain, kProbabilistic };

std::string to_string(Verdict v);
std::string to_string(Certainty c);

struct ConnectivityVerdict {
  Verdict verdict = Verdict::kConnected;
  Certainty certainty = Certainty::kProbabilistic;
  // Probability that the verdict is wrong under the worst case the decider
  // cannot exclude; 0 for certain verdicts.
  double error_probability_bound = 0.0;
  std::size_t shot_count = 0;
};

// A shot mixing 0s and 1s proves disconnection. Otherwise the graph is
// reported connected with the two-component worst-case error 2^{-M}.
// Throws DomainError on an empty record.
ConnectivityVerdict decide_connected(const MeasurementRecord& record);

// Nodes share a group iff they agree in every shot.
ComponentPartition group_components(const MeasurementRecord& record);

struct FailureProbability {
  // Probability that every shot is constant over the whole register.
  double exact = 0.0;
  // 1/k^M (k ≥ 2) or 1/2^M (k = 1), as quoted for the decision procedure.
  double quoted = 0.0;
};

// k ≥ 1 components, M ≥ 1 shots; DomainError otherwise.
FailureProbability exact_failure_probability(std::size_t component_count, std::size_t shots);

struct RecoveryAnalysis {
  // probability_exact[M-1]: probability that group_components of M shots
  // equals `truth`.
  std::vector<double> probability_exact;
  // True if every reachable grouping (every M, every outcome sequence) is a
  // union of truth components, i.e. connected nodes are never separated.
  bool never_splits_components = true;
  // Probability that some truth components are merged, per M.
  std::vector<double> probability_merged;
};

// Exact outcome-distribution analysis of group_components: propagates the
// distribution over groupings shot by shot using the state's Born weights.
// Practical for qubit_count ≲ 8.
RecoveryAnalysis analyze_component_recovery(const QuantumState& state,
                                            const ComponentPartition& truth, std::size_t max_shots);

}  // namespace zxconn
