#include "zxconn/analyzer.hpp"

#include <cmath>
#include <map>

#include "zxconn/errors.hpp"

namespace zxconn {

std::string to_string(Verdict v) {
  return v == Verdict::kConnected ? "connected" : "disconnected";
}

std::string to_string(Certainty c) {
  return c == Certainty::kCertain ? "certain" : "probabilistic";
}

ConnectivityVerdict decide_connected(const MeasurementRecord& record) {
  if (record.shots.empty()) throw DomainError("cannot decide connectivity from zero shots");
  ConnectivityVerdict out;
  out.shot_count = record.shot_count();
  for (const auto& shot : record.shots) {
    if (shot.empty()) throw DomainError("shots must cover at least one qubit");
    if (shot.find('0') != std::string::npos && shot.find('1') != std::string::npos) {
      out.verdict = Verdict::kDisconnected;
      out.certainty = Certainty::kCertain;
      out.error_probability_bound = 0.0;
      return out;
    }
  }
  out.verdict = Verdict::kConnected;
  out.certainty = Certainty::kProbabilistic;
  out.error_probability_bound = exact_failure_probability(2, out.shot_count).exact;
  return out;
}

ComponentPartition group_components(const MeasurementRecord& record) {
  if (record.shots.empty()) throw DomainError("cannot group qubits from zero shots");
  const std::size_t n = record.shots.front().size();
  std::vector<std::string> column(n, std::string(record.shot_count(), '0'));
  for (std::size_t s = 0; s < record.shot_count(); ++s) {
    const auto& shot = record.shots[s];
    if (shot.size() != n) throw DomainError("all shots must have the same length");
    for (std::size_t q = 0; q < n; ++q) column[q][s] = shot[q];
  }
  return ComponentPartition::from_labels(column);
}

FailureProbability exact_failure_probability(std::size_t component_count, std::size_t shots) {
  if (component_count < 1) throw DomainError("component count must be at least 1");
  if (shots < 1) throw DomainError("at least one shot is required");
  const double m = static_cast<double>(shots);
  FailureProbability out;
  if (component_count == 1) {
    out.exact = std::pow(2.0, -m);
    out.quoted = out.exact;
    return out;
  }
  out.exact = std::pow(2.0, (1.0 - static_cast<double>(component_count)) * m);
  out.quoted = std::pow(static_cast<double>(component_count), -m);
  return out;
}

RecoveryAnalysis analyze_component_recovery(const QuantumState& state,
                                            const ComponentPartition& truth,
                                            std::size_t max_shots) {
  const std::size_t n = state.qubit_count;
  if (truth.node_count() != n) throw DomainError("partition and state sizes differ");

  std::vector<std::pair<std::uint64_t, double>> outcomes;
  double total = 0.0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w = std::norm(state.amplitudes[i]);
    if (w > 0.0) {
      outcomes.emplace_back(i, w);
      total += w;
    }
  }
  if (outcomes.empty()) throw DissipationError(0);

  // A grouping is a canonical label vector; refining by an outcome pairs each
  // label with the outcome bit.
  using Labels = std::vector<std::size_t>;
  auto canonical = [](const Labels& raw) { return ComponentPartition::from_labels(raw).assignment; };

  std::map<Labels, double> current{{Labels(n, 0), 1.0}};
  RecoveryAnalysis out;
  for (std::size_t m = 1; m <= max_shots; ++m) {
    std::map<Labels, double> next;
    for (const auto& [labels, p] : current) {
      for (const auto& [index, w] : outcomes) {
        Labels refined(n);
        for (std::size_t q = 0; q < n; ++q) refined[q] = labels[q] * 2 + ((index >> q) & 1U);
        next[canonical(refined)] += p * w / total;
      }
    }
    current = std::move(next);

    double hit = 0.0;
    double merged = 0.0;
    for (const auto& [labels, p] : current) {
      const auto grouping = ComponentPartition::from_labels(labels);
      if (grouping == truth) hit += p;
      if (!truth.refines(grouping)) out.never_splits_components = false;
      if (!grouping.refines(truth)) merged += p;
    }
    out.probability_exact.push_back(hit);
    out.probability_merged.push_back(merged);
  }
  return out;
}

}  // namespace zxconn
