#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zxconn/analyzer.hpp"
#include "zxconn/depth.hpp"
#include "zxconn/errors.hpp"
#include "zxconn/graph.hpp"
#include "zxconn/json_io.hpp"
#include "zxconn/partition_bound.hpp"
#include "zxconn/simulator.hpp"
#include "zxconn/zx.hpp"

namespace py = pybind11;
using namespace zxconn;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object to_py(const BigRational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(r)),
                  to_py(boost::multiprecision::denominator(r)));
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Node, Node>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

std::vector<std::pair<Node, Node>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

MeasurementRecord make_record(const std::vector<std::string>& shots) {
  MeasurementRecord r;
  r.qubit_count = shots.empty() ? 0 : shots.front().size();
  r.shots = shots;
  return r;
}

LayerPolicy policy_from(const std::string& name) { return parse_layer_policy(name); }

py::dict report_dict(const DepthExperimentReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["model"] = r.model;
  d["model_value"] = r.model_value;
  d["trials"] = r.trials;
  d["mean_depth"] = r.mean_depth;
  d["std_error"] = r.std_error;
  d["min_depth"] = r.min_depth;
  d["max_depth"] = r.max_depth;
  d["mean_edge_count"] = r.mean_edge_count;
  d["seed"] = r.seed;
  py::list depths;
  for (const auto& t : r.per_trial) depths.append(t.depth);
  d["depths"] = depths;
  return d;
}

}  // namespace

PYBIND11_MODULE(_zxconn, m) {
  m.doc() = "Graph connectivity via Z-spider fusion, plus depth tools";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<DissipationError>(m, "DissipationError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::node_count)
      .def_property_readonly("edges", &edge_pairs)
      .def_property_readonly("proper_edge_count", &Graph::proper_edge_count)
      .def("to_edge_list", &to_edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::edge_count)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text, std::optional<std::size_t> n) {
    ParseOptions o;
    o.node_count = n;
    return parse_edge_list(text, o);
  }, py::arg("text"), py::arg("n") = py::none());
  m.def("erdos_renyi", &generate_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("fixed_edge_count", &generate_fixed_edge_count, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("random_multigraph", &generate_random_multigraph, py::arg("n"), py::arg("m"), py::arg("seed"),
        py::arg("allow_loops") = false);
  m.def("complete", &generate_complete, py::arg("n"));
  m.def("shuffle_edges", &shuffle_edges, py::arg("graph"), py::arg("seed"));

  m.def("bfs_components", [](const Graph& g) { return bfs_components(g).components; }, py::arg("graph"));

  // Circuits stay in C++; Python sees their JSON form.
  m.def("compile", [](const Graph& g, double phase) {
    return to_json(compile_graph_to_circuit(g, phase)).dump();
  }, py::arg("graph"), py::arg("phase") = 0.0);
  m.def("fused_components", [](const Graph& g) {
    return contract_spiders(compile_graph_to_circuit(g)).partition.components;
  }, py::arg("graph"));

  py::class_<QuantumState>(m, "State")
      .def_readonly("n", &QuantumState::qubit_count)
      .def_readonly("survival", &QuantumState::survival_probability)
      .def_readonly("amplitudes", &QuantumState::amplitudes)
      .def("nonzero", [](const QuantumState& s, double threshold) { return nonzero_amplitudes(s, threshold); },
           py::arg("threshold") = 1e-15)
      .def("sample", [](const QuantumState& s, std::size_t shots, std::uint64_t seed) {
        return sample_measurements(s, shots, seed).shots;
      }, py::arg("shots"), py::arg("seed"));

  m.def("simulate", [](const Graph& g, double phase, std::size_t qubit_cap) {
    return run_circuit(compile_graph_to_circuit(g, phase), qubit_cap);
  }, py::arg("graph"), py::arg("phase") = 0.0, py::arg("qubit_cap") = kDefaultQubitCap);
  m.def("simulate_ancilla", [](const Graph& g, std::uint64_t seed, std::size_t qubit_cap) {
    auto run = run_circuit_ancilla_mode(compile_graph_to_circuit(g), seed, qubit_cap);
    return py::make_tuple(run.state, run.outcomes);
  }, py::arg("graph"), py::arg("seed"), py::arg("qubit_cap") = kDefaultQubitCap);
  m.def("survival", [](const Graph& g) {
    const auto r = survival_report(g);
    py::dict d;
    d["survival"] = r.survival;
    d["quoted_decay_estimate"] = r.quoted_decay_estimate;
    d["components"] = r.component_count;
    return d;
  }, py::arg("graph"));

  m.def("decide_connected", [](const std::vector<std::string>& shots) {
    const auto v = decide_connected(make_record(shots));
    py::dict d;
    d["connected"] = v.verdict == Verdict::kConnected;
    d["certain"] = v.certainty == Certainty::kCertain;
    d["error_bound"] = v.error_probability_bound;
    return d;
  }, py::arg("shots"));
  m.def("group_components", [](const std::vector<std::string>& shots) {
    return group_components(make_record(shots)).components;
  }, py::arg("shots"));
  m.def("failure_probability", [](std::size_t k, std::size_t shots) {
    const auto f = exact_failure_probability(k, shots);
    return py::make_tuple(f.exact, f.quoted);
  }, py::arg("k"), py::arg("shots"));

  m.def("schedule", [](const Graph& g, const std::string& policy) {
    const auto s = asap_schedule(g, policy_from(policy));
    return py::make_tuple(s.depth, s.layer_of_edge);
  }, py::arg("graph"), py::arg("policy") = "earliest-free");
  m.def("depth_bounds", [](std::size_t n, std::size_t m_) {
    const auto b = depth_bounds(n, m_);
    return py::make_tuple(b.best, b.worst);
  }, py::arg("n"), py::arg("m"));
  m.def("sorted_complete_depth", [](std::size_t n, const std::string& policy) {
    return sorted_complete_depth(n, policy_from(policy));
  }, py::arg("n"), py::arg("policy") = "earliest-free");
  m.def("lower_bound_fit", &lower_bound_fit, py::arg("n"), py::arg("m"));
  m.def("monte_carlo_depth", [](std::size_t n, std::optional<double> p, std::optional<std::size_t> edges,
                                std::optional<Graph> graph, std::size_t trials, std::uint64_t seed,
                                const std::string& policy, std::size_t threads) {
    DepthExperiment ex;
    ex.n = n;
    const int given = p.has_value() + edges.has_value() + graph.has_value();
    if (given != 1) throw DomainError("give exactly one of p, m or graph");
    if (p) ex.model = ErdosRenyiModel{*p};
    if (edges) ex.model = FixedEdgeCountModel{*edges};
    if (graph) ex.model = FixedGraphModel{*graph};
    ex.trials = trials;
    ex.seed = seed;
    ex.policy = policy_from(policy);
    ex.threads = threads;
    DepthExperimentReport r;
    {
      py::gil_scoped_release release;
      r = monte_carlo_depth(ex);
    }
    return report_dict(r);
  }, py::arg("n"), py::kw_only(), py::arg("p") = py::none(), py::arg("m") = py::none(),
     py::arg("graph") = py::none(), py::arg("trials") = 100, py::arg("seed") = 0,
     py::arg("policy") = "earliest-free", py::arg("threads") = 0);

  m.def("n_d", [](std::size_t n, std::size_t m_, std::size_t d) { return to_py(n_d(n, m_, d)); },
        py::arg("n"), py::arg("m"), py::arg("d"));
  m.def("mean_depth_bound", [](std::size_t n, std::size_t m_) {
    const auto r = mean_depth_upper_bound(n, m_);
    py::dict per_depth;
    for (const auto& [d, c] : r.per_depth) per_depth[py::int_(d)] = to_py(c);
    return py::make_tuple(to_py(r.mean_exact), per_depth);
  }, py::arg("n"), py::arg("m"));
  m.def("row_count", [](std::size_t np, std::size_t lam) { return to_py(row_count(np, lam)); },
        py::arg("n_prime"), py::arg("lam"));
  m.def("partitions_into_k", [](std::size_t n, std::size_t k) { return to_py(partitions_into_k(n, k)); },
        py::arg("n"), py::arg("k"));
}
