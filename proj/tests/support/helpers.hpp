#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "maxsub/families.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/properties.hpp"
#include "maxsub/property.hpp"

namespace testing {

using maxsub::Graph;
using maxsub::VertexId;
using maxsub::VertexSet;

// Undirected graph from a list of unordered pairs.
inline Graph ue_graph(std::size_t n,
                      std::initializer_list<std::pair<VertexId, VertexId>> pairs,
                      std::optional<VertexId> root = std::nullopt) {
  std::vector<maxsub::Edge> edges;
  for (auto [a, b] : pairs) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return Graph(n, edges, root);
}

inline Graph triangle() { return ue_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph path3() { return ue_graph(3, {{0, 1}, {1, 2}}); }
// Triangle 0,1,2 plus vertex 3 adjacent to 0 and 1.
inline Graph triangle_apex() {
  return ue_graph(4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}});
}

inline VertexSet vs(std::size_t n, std::initializer_list<VertexId> members) {
  return VertexSet(n, members);
}

inline maxsub::SolutionSet sets(std::size_t n,
                                std::initializer_list<std::initializer_list<VertexId>> groups) {
  maxsub::SolutionSet out;
  for (const auto& g : groups) out.insert(VertexSet(n, g));
  return out;
}

inline std::vector<const maxsub::Property*> properties_of(maxsub::PropertyClass cls) {
  std::vector<const maxsub::Property*> out;
  for (const auto* p : maxsub::property_catalog()) {
    if (p->cls == cls) out.push_back(p);
  }
  return out;
}

// Every subset of V(G) as a VertexSet.
inline void for_each_subset(const Graph& g, const std::function<void(const VertexSet&)>& fn) {
  const std::size_t n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.insert(v);
    }
    fn(s);
  }
}

// Undirected graphs n <= max_n (exhaustive, root 0 when requested) plus
// seeded random digraphs.
inline void for_each_small_graph(std::size_t max_n, bool with_root,
                                 const std::function<void(const Graph&)>& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    maxsub::for_each_undirected_graph(
        n, with_root ? std::optional<VertexId>(0) : std::nullopt, fn);
  }
}

inline void for_each_random_digraph(std::size_t count, std::size_t max_n,
                                    std::uint64_t seed,
                                    const std::function<void(const Graph&)>& fn) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + i % (max_n - 1);
    const double density = 0.15 + 0.1 * static_cast<double>(i % 5);
    fn(maxsub::random_digraph(n, density, seed + i, true));
  }
}

}  // namespace testing
