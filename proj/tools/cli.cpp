#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/families.hpp"
#include "maxsub/hered.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/properties.hpp"
#include "maxsub/vcs.hpp"

namespace maxsub::cli {

namespace {

const std::vector<std::pair<std::string, Engine>>& engine_names() {
  static const std::vector<std::pair<std::string, Engine>> names{
      {"auto", Engine::kAuto},     {"hered", Engine::kHered},
      {"vcs", Engine::kVcs},       {"ordered", Engine::kOrdered},
      {"incremental", Engine::kIncremental}, {"oracle", Engine::kOracle}};
  return names;
}

std::string engine_name(Engine e) {
  for (const auto& [name, value] : engine_names()) {
    if (value == e) return name;
  }
  return "?";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Property& lookup_property(const std::string& name) {
  const Property* p = find_property(name);
  if (!p) {
    std::string known;
    for (const Property* q : property_catalog()) {
      known += (known.empty() ? "" : ", ") + q->name;
    }
    throw UsageError("unknown property '" + name + "' (known: " + known + ")");
  }
  return *p;
}

Engine resolve_engine(Engine e, const Property& p) {
  if (e != Engine::kAuto) return e;
  return p.cls == PropertyClass::kHereditary ? Engine::kHered : Engine::kVcs;
}

void validate(Engine engine, const Property& p, const Graph& g,
              std::optional<VertexId> vertex) {
  const bool hereditary = p.cls == PropertyClass::kHereditary;
  if (engine == Engine::kHered && !hereditary) {
    throw UsageError("engine 'hered' needs a hereditary property; '" + p.name +
                     "' is " + std::string(to_string(p.cls)));
  }
  if ((engine == Engine::kVcs || engine == Engine::kOrdered) && hereditary) {
    throw UsageError("engine '" + engine_name(engine) +
                     "' needs a connected- or rooted-hereditary property; '" +
                     p.name + "' is hereditary");
  }
  if (vertex) {
    if (*vertex >= g.size()) {
      throw UsageError("vertex " + std::to_string(*vertex) +
                       " out of range (n = " + std::to_string(g.size()) + ")");
    }
    if (engine == Engine::kHered) {
      throw UsageError("--vertex is not meaningful for engine 'hered'");
    }
    if (engine == Engine::kIncremental && hereditary) {
      throw UsageError(
          "--vertex with engine 'incremental' needs a connected- or "
          "rooted-hereditary property");
    }
  }
}

struct Outcome {
  EngineStats stats;
  bool streamed = false;
  bool stack_engine = false;
  SolutionSet solutions;
};

using Emit = std::function<void(const VertexSet&)>;

// Runs the selected engine. Stack-based engines call `emit` as solutions
// appear (honouring `limit`); the others only fill `solutions`.
Outcome solve(const Property& p, const Graph& g, Engine engine,
              std::optional<VertexId> vertex, std::optional<std::size_t> limit,
              const Emit& emit) {
  Outcome out;
  auto ordered_all = [&](EngineStats* st) {
    SolutionSet all;
    std::vector<VertexId> starts;
    if (p.cls == PropertyClass::kRootedHereditary) {
      if (g.root()) starts.push_back(*g.root());
    } else {
      for (VertexId v = 0; v < g.size(); ++v) starts.push_back(v);
    }
    for (VertexId v : starts) {
      if (!sat(p, induced(g, VertexSet(g.size(), {v})))) continue;
      for (const auto& s : gen_ordered(p, g, v, st)) all.insert(s);
    }
    return all;
  };

  switch (engine) {
    case Engine::kAuto:
    case Engine::kHered:
      out.solutions = gen_hered(p, g, &out.stats);
      break;
    case Engine::kOrdered:
      out.solutions =
          vertex ? gen_ordered(p, g, *vertex, &out.stats) : ordered_all(&out.stats);
      break;
    case Engine::kOracle: {
      const auto start = std::chrono::steady_clock::now();
      out.solutions = vertex ? brute_force_with_vertex(p, g, *vertex)
                             : brute_force_all(p, g);
      out.stats.elapsed = std::chrono::steady_clock::now() - start;
      out.stats.emissions = out.solutions.size();
      break;
    }
    case Engine::kVcs:
    case Engine::kIncremental: {
      out.streamed = true;
      out.stack_engine = true;
      SolutionSink sink(emit, limit);
      if (vertex) {
        out.solutions = gen_with_vertex(p, g, *vertex, sink, &out.stats);
      } else if (engine == Engine::kIncremental) {
        out.solutions = enumerate_incremental(p, g, sink, &out.stats);
      } else if (p.cls == PropertyClass::kConnectedHereditary) {
        out.solutions = gen_all_connected(p, g, sink, &out.stats);
      } else {
        out.solutions = gen_all_rooted(p, g, sink, &out.stats);
      }
      break;
    }
  }
  return out;
}

std::string format_solution(const VertexSet& s, bool json) {
  if (!json) return s.to_string();
  std::string text = "[";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) text += ',';
    text += std::to_string(v);
    first = false;
  });
  return text + "]";
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

}  // namespace

std::optional<Engine> engine_from_string(const std::string& s) {
  for (const auto& [name, value] : engine_names()) {
    if (name == s) return value;
  }
  return std::nullopt;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Property& p = lookup_property(cfg.property);
    const Graph g = read_graph(cfg.graph_path);
    const Engine engine = resolve_engine(cfg.engine, p);
    validate(engine, p, g, cfg.vertex);

    std::size_t printed = 0;
    const bool stream = !cfg.canonical;
    auto print = [&](const VertexSet& s) {
      out << format_solution(s, cfg.json) << '\n';
      out.flush();
      ++printed;
    };
    Outcome result =
        solve(p, g, engine, cfg.vertex, cfg.limit,
              stream ? Emit(print) : Emit([](const VertexSet&) {}));

    if (!(result.streamed && stream)) {
      std::vector<VertexSet> lines = cfg.canonical ? result.solutions.sorted()
                                                   : result.solutions.members();
      if (cfg.limit && lines.size() > *cfg.limit) lines.resize(*cfg.limit);
      for (const auto& s : lines) print(s);
    }

    if (result.streamed && stream && !cfg.limit &&
        printed != result.solutions.size()) {
      err << "internal error: emitted " << printed
          << " solutions but collected " << result.solutions.size() << '\n';
      return static_cast<int>(kInternalError);
    }

    if (cfg.stats) {
      const auto& st = result.stats;
      err << "# stats\n"
          << "engine: " << engine_name(engine) << '\n'
          << "solutions: " << printed << '\n'
          << "iterations: " << st.outer_iterations << '\n'
          << "restricted_calls: " << st.restricted_calls << '\n'
          << "max_candidate_pool: " << st.max_candidate_pool << '\n';
      if (result.stack_engine) {
        err << "max_delay: " << st.max_completion_gap() << '\n'
            << "max_emission_gap: " << st.max_emission_gap() << '\n';
      }
      err << "elapsed_ms: " << std::fixed << std::setprecision(3)
          << std::chrono::duration<double, std::milli>(st.elapsed).count()
          << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Property& p = lookup_property(cfg.property);
    const Graph g = read_graph(cfg.graph_path);
    VertexSet s(g.size());
    for (VertexId v : cfg.members) {
      if (v >= g.size()) {
        throw UsageError("vertex " + std::to_string(v) + " out of range");
      }
      s.insert(v);
    }
    const InducedSubgraph h(g, s);
    const bool ok = sat(p, h);
    out << "set: " << s.to_string() << '\n';
    out << "sat: " << (ok ? "true" : "false") << '\n';
    if (!ok) {
      std::string reason = h.empty() ? "empty graph is not in the property"
                                     : (p.explain ? p.explain(h) : "");
      out << "reason: " << reason << '\n';
      out << "max: false\n";
      return static_cast<int>(kOk);
    }
    std::optional<VertexId> witness;
    const VertexSet outside = g.all_vertices() - s;
    for (auto v = outside.first(); v && !witness; v = outside.next_after(*v)) {
      if (sat(p, extend(h, *v))) witness = v;
    }
    out << "max: " << (witness ? "false" : "true") << '\n';
    if (witness) out << "witness: " << *witness << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string property = cfg.property;
    if (property.empty()) {
      if (cfg.family == "g2") property = "bipartite";
      else if (cfg.family == "triangles") property = "independent-set";
      else throw UsageError("family '" + cfg.family + "' needs --property");
    }
    const Property& p = lookup_property(property);
    const Engine engine = resolve_engine(cfg.engine, p);
    if (cfg.from > cfg.to) throw UsageError("--from must not exceed --to");

    out << "family\tinstance\tn\tK";
    if (cfg.timing) out << "\telapsed_us\tus_per_solution";
    out << "\tmax_delay\n";
    for (std::size_t i = cfg.from; i <= cfg.to; ++i) {
      Graph g;
      if (cfg.family == "g2") {
        if (i < 1) throw UsageError("g2 instances start at 1");
        g = make_g2(i);
      } else if (cfg.family == "triangles") {
        g = disjoint_triangles(i);
      } else if (cfg.family == "random") {
        g = random_digraph(cfg.n, cfg.density, cfg.seed + i, true);
      } else {
        throw UsageError("unknown family '" + cfg.family +
                         "' (known: g2, triangles, random)");
      }
      validate(engine, p, g, std::nullopt);
      const auto start = std::chrono::steady_clock::now();
      Outcome result = solve(p, g, engine, std::nullopt, std::nullopt,
                             [](const VertexSet&) {});
      const double us = std::chrono::duration<double, std::micro>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      const std::size_t k = result.solutions.size();
      out << cfg.family << '\t' << i << '\t' << g.size() << '\t' << k;
      if (cfg.timing) {
        out << '\t' << std::fixed << std::setprecision(1) << us << '\t'
            << std::setprecision(3) << (k ? us / static_cast<double>(k) : 0.0);
      }
      out << '\t';
      if (result.stack_engine) out << result.stats.max_completion_gap();
      else out << '-';
      out << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (!args.empty() && args[0].rfind("--", 0) == 0 && args[0] != "--help" &&
      args[0] != "--version") {
    args.insert(args.begin(), "enumerate");
  }

  CLI::App app{"Enumerate maximal induced subgraphs satisfying a graph property"};
  app.require_subcommand(1);

  std::map<std::string, Engine> engine_map;
  for (const auto& [name, value] : engine_names()) engine_map[name] = value;

  RunConfig run_cfg;
  std::optional<std::size_t> vertex_opt;
  auto* enumerate = app.add_subcommand("enumerate", "List maximal P-subgraphs");
  enumerate->add_option("--graph", run_cfg.graph_path, "Graph file")->required();
  enumerate->add_option("--property", run_cfg.property, "Property name")->required();
  enumerate->add_option("--engine", run_cfg.engine, "auto|hered|vcs|ordered|incremental|oracle")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  enumerate->add_option("--vertex", vertex_opt, "Only solutions containing this vertex");
  enumerate->add_option("--limit", run_cfg.limit, "Stop after this many solutions");
  enumerate->add_flag("--stats", run_cfg.stats, "Print statistics to stderr");
  enumerate->add_flag("--json", run_cfg.json, "One JSON array per line");
  enumerate->add_flag("--canonical", run_cfg.canonical, "Sort the output");

  CheckConfig check_cfg;
  auto* check = app.add_subcommand("check", "Test one vertex set for sat and maximality");
  check->add_option("--graph", check_cfg.graph_path, "Graph file")->required();
  check->add_option("--property", check_cfg.property, "Property name")->required();
  check->add_option("--set", check_cfg.members, "Vertex ids")->delimiter(',');

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "Run a benchmark family");
  bench->add_option("--family", bench_cfg.family, "g2|triangles|random")->required();
  bench->add_option("--property", bench_cfg.property, "Property name");
  bench->add_option("--engine", bench_cfg.engine, "Engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  bench->add_option("--from", bench_cfg.from, "First instance parameter");
  bench->add_option("--to", bench_cfg.to, "Last instance parameter");
  bench->add_option("--n", bench_cfg.n, "Vertex count (random family)");
  bench->add_option("--density", bench_cfg.density, "Edge probability (random family)");
  bench->add_option("--seed", bench_cfg.seed, "Base seed (random family)");
  bool no_timing = false;
  bench->add_flag("--no-timing", no_timing, "Omit timing columns");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (*enumerate) {
    if (vertex_opt) run_cfg.vertex = static_cast<VertexId>(*vertex_opt);
    return cmd_enumerate(run_cfg, out, err);
  }
  if (*check) return cmd_check(check_cfg, out, err);
  bench_cfg.timing = !no_timing;
  return cmd_bench(bench_cfg, out, err);
}

}  // namespace maxsub::cli
