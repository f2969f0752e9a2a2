#include "zxconn/json_io.hpp"

#include "zxconn/errors.hpp"

namespace zxconn {

Json to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});
  Json j{{"n", graph.node_count()}, {"edges", std::move(edges)}};
  if (!graph.labels().empty()) j["labels"] = graph.labels();
  return j;
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2) throw DomainError("edge must be a [u, v] pair");
    edges.push_back({pair[0].get<Node>(), pair[1].get<Node>()});
  }
  Graph g(j.at("n").get<std::size_t>(), std::move(edges));
  if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::int64_t>>());
  return g;
}

Json to_json(const ComponentPartition& partition) {
  return {{"k", partition.component_count()}, {"assignment", partition.assignment}};
}

Json to_json(const SpiderCircuit& circuit) {
  Json gates = Json::array();
  for (const auto& g : circuit.gates) {
    gates.push_back({{"legs", {g.a, g.b}}, {"phase", g.phase}, {"edge", g.source_edge}});
  }
  return {{"n", circuit.qubit_count},
          {"hadamard_layer", circuit.hadamard_layer},
          {"gates", std::move(gates)},
          {"skipped_self_loops", circuit.skipped_self_loops}};
}

SpiderCircuit circuit_from_json(const Json& j) {
  SpiderCircuit c;
  c.qubit_count = j.at("n").get<std::size_t>();
  c.hadamard_layer = j.value("hadamard_layer", true);
  std::size_t index = 0;
  for (const auto& g : j.at("gates")) {
    const auto legs = g.at("legs").get<std::vector<Qubit>>();
    if (legs.size() != 2) throw DomainError("circuit gates must have exactly two legs");
    c.gates.push_back({legs[0], legs[1], wrap_phase(g.value("phase", 0.0)), g.value("edge", index)});
    ++index;
  }
  if (j.contains("skipped_self_loops")) {
    c.skipped_self_loops = j["skipped_self_loops"].get<std::vector<std::size_t>>();
  }
  c.validate();
  return c;
}

Json to_json(const MeasurementRecord& record) {
  return {{"M", record.shot_count()}, {"seed", record.seed}, {"shots", record.shots}};
}

MeasurementRecord record_from_json(const Json& j) {
  MeasurementRecord r;
  r.seed = j.value("seed", std::uint64_t{0});
  r.shots = j.at("shots").get<std::vector<std::string>>();
  if (j.contains("M") && j["M"].get<std::size_t>() != r.shots.size()) {
    throw DomainError("record M does not match the number of shots");
  }
  r.qubit_count = r.shots.empty() ? 0 : r.shots.front().size();
  for (const auto& s : r.shots) {
    if (s.size() != r.qubit_count) throw DomainError("all shots must have the same length");
    if (s.find_first_not_of("01") != std::string::npos) {
      throw DomainError("shots may only contain '0' and '1'");
    }
  }
  return r;
}

Json to_json(const ConnectivityVerdict& v) {
  return {{"verdict", to_string(v.verdict)},
          {"certainty", to_string(v.certainty)},
          {"error_bound", v.error_probability_bound},
          {"M", v.shot_count}};
}

Json to_json(const DepthSchedule& schedule) {
  Json layers = Json::array();
  for (const auto& l : schedule.layer_of_edge) layers.push_back(l ? Json(*l) : Json(nullptr));
  return {{"depth", schedule.depth}, {"layer_of_edge", std::move(layers)}};
}

Json to_json(const DepthExperimentReport& r) {
  return {{"n", r.n},
          {"model", r.model},
          {"m_or_p", r.model_value},
          {"trials", r.trials},
          {"mean_depth", r.mean_depth},
          {"std_error", r.std_error},
          {"min_depth", r.min_depth},
          {"max_depth", r.max_depth},
          {"mean_edge_count", r.mean_edge_count},
          {"seed", r.seed}};
}

Json to_json(const PartitionBoundReport& r) {
  Json per_depth = Json::object();
  for (const auto& [d, count] : r.per_depth) per_depth[std::to_string(d)] = count.str();
  const auto num = boost::multiprecision::numerator(r.mean_exact);
  const auto den = boost::multiprecision::denominator(r.mean_exact);
  return {{"n", r.n},
          {"m", r.m},
          {"per_depth", std::move(per_depth)},
          {"mean_exact", den == 1 ? num.str() : num.str() + "/" + den.str()},
          {"mean", r.mean}};
}

Json state_dump(const QuantumState& state) {
  Json out = Json::array();
  for (const auto& [label, amp] : nonzero_amplitudes(state)) {
    out.push_back({label, amp.real(), amp.imag()});
  }
  return out;
}

}  // namespace zxconn
