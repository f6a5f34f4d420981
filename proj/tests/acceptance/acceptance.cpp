// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "maxsub/hered.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/properties.hpp"
#include "maxsub/vcs.hpp"

using namespace maxsub;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = seconds_since(start);
  if (!v.pass) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", id, title.c_str(),
              v.detail.c_str(), secs);
  std::fflush(stdout);
}

// G[S] as a standalone graph on 0..|S|-1, with ids kept in ascending order.
Graph relabelled(const Graph& g, const VertexSet& s, std::vector<VertexId>& ids) {
  ids = s.members();
  std::vector<VertexId> pos(g.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (s.contains(a) && s.contains(b)) edges.emplace_back(pos[a], pos[b]);
  }
  std::optional<VertexId> root;
  if (g.root() && s.contains(*g.root())) root = pos[*g.root()];
  return Graph(ids.size(), edges, root);
}

Graph prefix_graph(const Graph& g, std::size_t i) {
  std::vector<VertexId> ids;
  VertexSet s(g.size());
  for (VertexId v = 0; v < i; ++v) s.insert(v);
  return relabelled(g, s, ids);
}

SolutionSet lift(const SolutionSet& in, std::size_t n) {
  SolutionSet out;
  for (const auto& m : in) {
    VertexSet v(n);
    m.for_each([&](VertexId x) { v.insert(x); });
    out.insert(v);
  }
  return out;
}

// Exhaustive undirected graphs n <= 5 (root 0) followed by 500 seeded
// random digraphs n <= 9 with a random root.
void for_each_criterion3_graph(const std::function<void(const Graph&)>& fn) {
  for (std::size_t n = 1; n <= 5; ++n) for_each_undirected_graph(n, VertexId{0}, fn);
  testing::for_each_random_digraph(500, 9, 20240601, fn);
}

std::string describe_mismatch(const std::string& what, const Property& p, const Graph& g) {
  return what + " differs from oracle for " + p.name + " on\n" + format_graph(g);
}

Verdict criterion1() {
  using namespace g1;
  const auto start = Clock::now();
  SolutionSink sink;
  const auto got = gen_all_connected(connected_bipartite_property(), make_g1(), sink);
  const double secs = seconds_since(start);
  const auto all = VertexSet::full(5);
  const SolutionSet expect{all.without(kW), all.without(kU2),
                           all - VertexSet(5, {kV1, kV2, kU1})};
  const bool ok = got == expect && secs < 1.0;
  std::string detail = std::to_string(got.size()) + " solutions";
  for (const auto& s : got.sorted()) detail += " {" + s.to_string() + "}";
  return {ok, detail + (got == expect ? ", exact match" : ", MISMATCH")};
}

Verdict criterion2() {
  const auto start = Clock::now();
  std::string counts;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto k = gen_hered(bipartite_property(), make_g2(n)).size();
    counts += (n > 1 ? "," : "") + std::to_string(k);
    ok = ok && k == (std::size_t{1} << n) + 1;
  }
  const double secs = seconds_since(start);
  return {ok && secs < 30.0, "K(n=1..8) = " + counts + " (expected 2^n+1; budget 30 s)"};
}

Verdict criterion3() {
  const auto start = Clock::now();
  std::size_t graphs = 0, comparisons = 0;
  std::string failure;
  auto check = [&](const Graph& g) {
    if (!failure.empty()) return;
    ++graphs;
    auto expect = [&](const std::string& what, const SolutionSet& got, const SolutionSet& want,
                      const Property& p) {
      ++comparisons;
      if (!(got == want) && failure.empty()) failure = describe_mismatch(what, p, g);
    };
    for (const Property* p : property_catalog()) {
      const auto all = brute_force_all(*p, g);
      SolutionSink inc;
      expect("enumerate_incremental", enumerate_incremental(*p, g, inc), all, *p);
      if (p->cls == PropertyClass::kHereditary) {
        expect("gen_hered", gen_hered(*p, g), all, *p);
        continue;
      }
      SolutionSink sink;
      if (p->cls == PropertyClass::kConnectedHereditary) {
        expect("gen_all_connected", gen_all_connected(*p, g, sink), all, *p);
      } else {
        expect("gen_all_rooted", gen_all_rooted(*p, g, sink), all, *p);
      }
      const bool tree = is_undirected_tree(g);
      const bool rooted_dag = g.root() && is_acyclic(g);
      for (VertexId v = 0; v < g.size(); ++v) {
        if (!sat(*p, induced(g, VertexSet(g.size(), {v})))) continue;
        const auto want = brute_force_with_vertex(*p, g, v);
        expect("gen_with_vertex", gen_with_vertex(*p, g, v), want, *p);
        const bool ordered_ok = p->cls == PropertyClass::kConnectedHereditary
                                    ? tree
                                    : rooted_dag && v == *g.root();
        if (ordered_ok) expect("gen_ordered", gen_ordered(*p, g, v), want, *p);
      }
    }
  };
  for_each_criterion3_graph(check);
  const double secs = seconds_since(start);
  const bool ok = failure.empty() && secs < 300.0;
  return {ok, std::to_string(graphs) + " graphs, " + std::to_string(comparisons) +
                  " engine/oracle comparisons" +
                  (failure.empty() ? ", 0 mismatches" : ", first mismatch: " + failure)};
}

Verdict criterion4() {
  std::size_t instances = 0;
  std::string failure;
  const std::vector<const Property*> props{&clique_property(), &independent_set_property(),
                                           &bipartite_property()};
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_undirected_graph(n, std::nullopt, [&](const Graph& g) {
      if (!failure.empty()) return;
      for (const Property* p : props) {
        ++instances;
        std::size_t previous = 0;
        for (std::size_t i = 0; i <= g.size(); ++i) {
          const auto pool = prefix_solutions(*p, g, i);
          if (!(pool == lift(brute_force_all(*p, prefix_graph(g, i)), g.size()))) {
            failure = "prefix law, " + p->name + ", i=" + std::to_string(i);
          } else if (pool.size() < previous) {
            failure = "pool shrank, " + p->name + ", i=" + std::to_string(i);
          }
          previous = pool.size();
        }
      }
    });
  }
  return {failure.empty(), std::to_string(instances) + " (graph, property) instances" +
                               (failure.empty() ? ", prefix law and monotone pool hold"
                                                : ", violation: " + failure)};
}

struct DelayGraph {
  std::string label;
  Graph graph;
};

std::vector<DelayGraph> delay_graphs() {
  std::vector<DelayGraph> out;
  out.push_back({"G1", make_g1()});
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"G2(" + std::to_string(n) + ")", make_g2(n)});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"triangles", disjoint_triangles(k)});
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const double density = 0.1 + 0.08 * static_cast<double>(seed % 6);
    out.push_back({"digraph", random_digraph(n, density, 7000 + seed, true)});
    out.push_back({"undirected", random_undirected(n, density, 9000 + seed, VertexId{0})});
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    out.push_back({"tree", random_tree(12, seed)});
    out.push_back({"dag", random_rooted_dag(12, 0.2, seed)});
  }
  return out;
}

const std::vector<const Property*>& polynomial_properties() {
  static const std::vector<const Property*> props{
      &connected_bipartite_property(), &star_property(), &rooted_clique_property(),
      &clique_property(), &independent_set_property()};
  return props;
}

Verdict criterion5() {
  std::size_t runs = 0, worst = 0, worst_session = 0, over_session = 0;
  std::string failure;
  for (const auto& [label, g] : delay_graphs()) {
    const std::size_t n = g.size();
    for (const Property* p : polynomial_properties()) {
      EngineStats st;
      SolutionSink sink;
      enumerate_incremental(*p, g, sink, &st);
      ++runs;
      worst = std::max(worst, st.max_completion_gap());
      worst_session = std::max(worst_session, st.max_emission_gap());
      if (st.max_emission_gap() > n * n) ++over_session;
      if (st.max_completion_gap() > n * n && failure.empty()) {
        failure = p->name + " on " + label + " n=" + std::to_string(n) + " gap " +
                  std::to_string(st.max_completion_gap());
      }
    }
  }
  return {failure.empty(),
          std::to_string(runs) + " runs up to n=12; max iterations between finished "
          "graphs within a run = " + std::to_string(worst) + " (bound n^2 <= 144)" +
          (failure.empty() ? "" : "; violation: " + failure) +
          "; informational: max gap between distinct emissions across runs = " +
          std::to_string(worst_session) + ", above n^2 in " + std::to_string(over_session) +
          " runs"};
}

Verdict criterion6() {
  std::size_t checked = 0, skipped = 0, worst_ratio_num = 0;
  std::string failure;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = seed % 2 ? random_digraph(12, 0.15 + 0.05 * (seed % 4), 500 + seed, true)
                             : random_undirected(12, 0.2 + 0.05 * (seed % 4), 500 + seed, VertexId{0});
    const std::size_t n = g.size();
    for (const Property* p : polynomial_properties()) {
      SolutionSink full;
      const std::size_t total = enumerate_incremental(*p, g, full).size();
      for (std::size_t k = 1; k <= 3; ++k) {
        if (total < k) {
          ++skipped;
          continue;
        }
        std::size_t emitted = 0;
        SolutionSink sink([&](const VertexSet&) { ++emitted; }, k);
        enumerate_incremental(*p, g, sink);
        ++checked;
        worst_ratio_num = std::max(worst_ratio_num, sink.ticks());
        if ((emitted != k || sink.ticks() > k * n * n) && failure.empty()) {
          failure = p->name + " seed " + std::to_string(seed) + " k=" + std::to_string(k) +
                    ": emitted " + std::to_string(emitted) + " after " +
                    std::to_string(sink.ticks()) + " iterations";
        }
      }
    }
  }
  return {failure.empty() && checked > 0,
          std::to_string(checked) + " limited runs on n=12, exactly k emitted, max iterations " +
              std::to_string(worst_ratio_num) + " (bound k*144)" +
              (skipped ? ", " + std::to_string(skipped) + " skipped with fewer than k solutions" : "") +
              (failure.empty() ? "" : "; violation: " + failure)};
}

Verdict criterion7() {
  std::vector<double> per_solution;
  std::string detail;
  bool counts_ok = true;
  for (std::size_t k = 3; k <= 7; ++k) {
    const Graph g = disjoint_triangles(k);
    double best = 1e300;
    std::size_t found = 0;
    const int repeats = k <= 5 ? 7 : 3;
    for (int r = 0; r < repeats; ++r) {
      const auto start = Clock::now();
      found = gen_hered(independent_set_property(), g).size();
      best = std::min(best, seconds_since(start));
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < k; ++i) expect *= 3;
    counts_ok = counts_ok && found == expect;
    per_solution.push_back(best * 1e6 / static_cast<double>(found));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sk=%zu K=%zu %.2f us/sol", k > 3 ? ", " : "", k, found,
                  per_solution.back());
    detail += buf;
  }
  const double ratio = *std::max_element(per_solution.begin(), per_solution.end()) /
                       *std::min_element(per_solution.begin(), per_solution.end());
  char buf[64];
  std::snprintf(buf, sizeof buf, "; max/min = %.2f (limit 10)", ratio);
  return {counts_ok && ratio < 10.0, detail + buf};
}

Verdict criterion8() {
  std::size_t pairs = 0;
  std::string failure;
  auto check = [&](const Graph& g, const Property& p, VertexId vr) {
    const std::size_t whole_count = brute_force_with_vertex(p, g, vr).size();
    testing::for_each_subset(g, [&](const VertexSet& h) {
      if (!h.contains(vr) || !failure.empty()) return;
      std::vector<VertexId> ids;
      const Graph sub = relabelled(g, h, ids);
      const auto pos = static_cast<VertexId>(
          std::find(ids.begin(), ids.end(), vr) - ids.begin());
      const std::size_t sub_count = brute_force_with_vertex(p, sub, pos).size();
      ++pairs;
      if (sub_count > whole_count) {
        failure = p.name + ": H={" + h.to_string() + "} has " + std::to_string(sub_count) +
                  " > " + std::to_string(whole_count) + " on\n" + format_graph(g);
      }
    });
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_undirected_graph(n, VertexId{0}, [&](const Graph& g) {
      for (VertexId v = 0; v < g.size(); ++v) check(g, connected_bipartite_property(), v);
      check(g, rooted_clique_property(), 0);
    });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_digraph(n, VertexId{0}, [&](const Graph& g) { check(g, rooted_clique_property(), 0); });
  }
  return {failure.empty(), std::to_string(pairs) + " (G, H, v_r) triples" +
                               (failure.empty() ? ", inequality holds" : "; violation: " + failure)};
}

}  // namespace

int main() {
  report(1, "G1 maximal connected bipartite subgraphs", criterion1);
  report(2, "G2(n) maximal bipartite subgraph counts", criterion2);
  report(3, "engines equal the brute-force oracle", criterion3);
  report(4, "prefix law and pool monotonicity", criterion4);
  report(5, "iteration gap between completed solutions <= n^2", criterion5);
  report(6, "limit k emits k solutions within k*n^2 iterations", criterion6);
  report(7, "per-solution cost on disjoint triangles", criterion7);
  report(8, "MaxSolVert(G[H]; v) never exceeds MaxSolVert(G; v)", criterion8);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
