#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/graph.hpp"

namespace maxsub::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kParseError = 2,
  kInternalError = 3,
};

enum class Engine { kAuto, kHered, kVcs, kOrdered, kIncremental, kOracle };

std::optional<Engine> engine_from_string(const std::string& s);

struct RunConfig {
  std::string graph_path;
  std::string property;
  Engine engine = Engine::kAuto;
  std::optional<VertexId> vertex;
  std::optional<std::size_t> limit;
  bool json = false;
  bool stats = false;
  bool canonical = false;
};

struct CheckConfig {
  std::string graph_path;
  std::string property;
  std::vector<VertexId> members;
};

struct BenchConfig {
  std::string family;
  std::string property;
  Engine engine = Engine::kAuto;
  std::size_t from = 1;
  std::size_t to = 1;
  std::size_t n = 12;
  double density = 0.3;
  std::uint64_t seed = 1;
  bool timing = true;
};

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point. A leading option (no subcommand) runs
/// `enumerate`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace maxsub::cli
