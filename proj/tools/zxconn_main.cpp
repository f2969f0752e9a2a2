#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "zxconn/cli.hpp"

namespace {

using zxconn::cli::Command;
using zxconn::cli::RunConfig;

struct RawOptions {
  std::string graph_file;
  std::optional<std::size_t> node_count;
  std::vector<std::string> er;
  std::optional<std::size_t> complete;
  std::vector<std::size_t> random_m;
  std::string mode = "projector";
  std::string format = "json";
  std::string policy = "earliest-free";
  std::string out;
  bool no_oracle = false;
};

void add_graph_options(CLI::App* sub, RawOptions& raw) {
  auto* group = sub->add_option_group("graph source");
  group->add_option("--graph", raw.graph_file, "edge-list file (one 'u v' pair per line)");
  group->add_option("--er", raw.er, "Erdos-Renyi graph: N P")->expected(2);
  group->add_option("--complete", raw.complete, "complete graph K_N, sorted edges");
  group->add_option("--random-m", raw.random_m, "N nodes with M distinct random edges")->expected(2);
  group->require_option(1);
  sub->add_option("--nodes", raw.node_count, "node count for --graph (keeps isolated nodes)");
}

void add_common_options(CLI::App* sub, RunConfig& config, RawOptions& raw) {
  sub->add_option("--seed", config.seed, "seed (random if omitted; always echoed)");
  sub->add_option("--format", raw.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", raw.out, "write the report to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z-spider graph connectivity simulator and depth analysis"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto* connect = app.add_subcommand("connect", "decide connectivity from sampled shots");
  auto* components = app.add_subcommand("components", "recover connected components from shots");
  auto* depth = app.add_subcommand("depth", "schedule edge gates into layers");
  auto* bound = app.add_subcommand("bound", "mean-depth upper bound from restricted compositions");
  auto* tables = app.add_subcommand("tables", "row-count and partition-count tables");
  auto* compile = app.add_subcommand("compile", "emit the spider circuit and its fused spiders");
  auto* simulate = app.add_subcommand("simulate", "dump the final state vector");

  for (auto* sub : {connect, components, simulate}) {
    add_graph_options(sub, raw);
    add_common_options(sub, config, raw);
    sub->add_option("--mode", raw.mode, "projector|ancilla")->check(CLI::IsMember({"projector", "ancilla"}));
    sub->add_option("--qubit-cap", config.qubit_cap, "largest dense register");
  }
  for (auto* sub : {connect, components}) {
    sub->add_option("--shots", config.shots, "number of shots M");
    sub->add_flag("--no-oracle", raw.no_oracle, "skip the classical BFS comparison");
    sub->add_flag("--analytic", config.analytic, "sample the closed-form state above the qubit cap");
  }
  add_graph_options(depth, raw);
  add_common_options(depth, config, raw);
  depth->add_option("--trials", config.trials, "Monte-Carlo trials (regenerate + shuffle per trial)");
  depth->add_option("--policy", raw.policy, "earliest-free|after-last-use")
      ->check(CLI::IsMember({"earliest-free", "after-last-use"}));
  depth->add_option("--threads", config.threads, "worker threads (0 = all cores)");

  add_common_options(bound, config, raw);
  bound->add_option("--n", config.bound_n, "node count")->required();
  bound->add_option("--m", config.bound_m, "edge count")->required();

  add_common_options(tables, config, raw);
  tables->add_option("--max", config.table_max, "largest n' / n in the tables");

  add_graph_options(compile, raw);
  add_common_options(compile, config, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : zxconn::cli::kUsage;
  }

  if (*connect) config.command = Command::kConnect;
  if (*components) config.command = Command::kComponents;
  if (*depth) config.command = Command::kDepth;
  if (*bound) config.command = Command::kBound;
  if (*tables) config.command = Command::kTables;
  if (*compile) config.command = Command::kCompile;
  if (*simulate) config.command = Command::kSimulate;

  try {
    config.mode = zxconn::cli::parse_mode(raw.mode);
    config.format = zxconn::cli::parse_format(raw.format);
    config.policy = zxconn::parse_layer_policy(raw.policy);
    config.oracle = !raw.no_oracle;
    if (!raw.graph_file.empty()) {
      config.graph = zxconn::cli::FileSource{raw.graph_file, raw.node_count};
    } else if (!raw.er.empty()) {
      config.graph = zxconn::cli::ErdosRenyiSource{std::stoul(raw.er[0]), std::stod(raw.er[1])};
    } else if (raw.complete) {
      config.graph = zxconn::cli::CompleteSource{*raw.complete};
    } else if (!raw.random_m.empty()) {
      config.graph = zxconn::cli::RandomEdgeCountSource{raw.random_m[0], raw.random_m[1]};
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return zxconn::cli::kUsage;
  }

  const auto result = zxconn::cli::run(config);
  if (result.exit_code != zxconn::cli::kOk) {
    std::cerr << result.output;
    return result.exit_code;
  }
  if (raw.out.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(raw.out);
    if (!out || !(out << result.output)) {
      std::cerr << "i/o error: cannot write '" << raw.out << "'\n";
      return zxconn::cli::kIo;
    }
  }
  return zxconn::cli::kOk;
}
