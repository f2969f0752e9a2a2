#pragma once

#include <nlohmann/json.hpp>

#include "zxconn/analyzer.hpp"
#include "zxconn/depth.hpp"
#include "zxconn/graph.hpp"
#include "zxconn/partition_bound.hpp"
#include "zxconn/simulator.hpp"
#include "zxconn/zx.hpp"

namespace zxconn {

using Json = nlohmann::json;

Json to_json(const Graph& graph);                  // {n, edges:[[u,v],...]}
Graph graph_from_json(const Json& j);
Json to_json(const ComponentPartition& partition);  // {k, assignment:[...]}
Json to_json(const SpiderCircuit& circuit);         // {n, hadamard_layer, gates:[{legs, phase}]}
SpiderCircuit circuit_from_json(const Json& j);
Json to_json(const MeasurementRecord& record);      // {M, seed, shots:[...]}
MeasurementRecord record_from_json(const Json& j);
Json to_json(const ConnectivityVerdict& verdict);   // {verdict, certainty, error_bound, M}
Json to_json(const DepthSchedule& schedule);
Json to_json(const DepthExperimentReport& report);  // summary only, no per-trial rows
Json to_json(const PartitionBoundReport& report);   // N_d as decimal strings, mean_exact "p/q"
Json state_dump(const QuantumState& state);         // [[bitstring, re, im], ...]

}  // namespace zxconn
