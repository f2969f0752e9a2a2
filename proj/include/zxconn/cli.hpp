#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "zxconn/depth.hpp"
#include "zxconn/simulator.hpp"

namespace zxconn::cli {

enum class Command { kConnect, kComponents, kDepth, kBound, kTables, kCompile, kSimulate };
enum class Mode { kProjector, kAncilla };
enum class Format { kJson, kCsv, kText };

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIo = 3,
  kCapExceeded = 4,
  kInfeasible = 5,
};

struct FileSource {
  std::string path;
  std::optional<std::size_t> node_count;
};
struct ErdosRenyiSource {
  std::size_t n = 0;
  double p = 0.0;
};
struct CompleteSource {
  std::size_t n = 0;
};
struct RandomEdgeCountSource {
  std::size_t n = 0;
  std::size_t m = 0;
};

using GraphSource = std::variant<std::monostate, FileSource, ErdosRenyiSource, CompleteSource,
                                 RandomEdgeCountSource>;

struct RunConfig {
  Command command = Command::kConnect;
  GraphSource graph;
  std::optional<std::size_t> shots;
  std::optional<std::uint64_t> seed;
  Mode mode = Mode::kProjector;
  std::optional<std::size_t> trials;
  Format format = Format::kJson;
  bool oracle = true;
  // Sample the product-of-GHZ law directly when the register is too large.
  bool analytic = false;
  std::size_t qubit_cap = kDefaultQubitCap;
  LayerPolicy policy = LayerPolicy::kEarliestFree;
  std::size_t threads = 0;
  // bound / tables
  std::optional<std::size_t> bound_n;
  std::optional<std::size_t> bound_m;
  std::size_t table_max = 13;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;  // report on success, message on failure
};

std::uint64_t random_seed();

// Runs one command. Never throws; errors map to exit codes. The effective
// seed is filled in when the config leaves it unset.
CommandResult run(RunConfig config);

Mode parse_mode(const std::string& name);
Format parse_format(const std::string& name);

}  // namespace zxconn::cli
