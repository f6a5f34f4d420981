#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "maxsub/graph.hpp"

namespace maxsub {

/// k vertex-disjoint triangles on vertices 3i, 3i+1, 3i+2.
Graph disjoint_triangles(std::size_t k);

/// Each ordered pair gets an edge with probability `density`. With
/// `with_root` a uniformly chosen vertex becomes the root. Deterministic in
/// `seed` on every platform.
Graph random_digraph(std::size_t n, double density, std::uint64_t seed,
                     bool with_root = false);

/// Each unordered pair gets a `ue` edge with probability `density`.
Graph random_undirected(std::size_t n, double density, std::uint64_t seed,
                        std::optional<VertexId> root = std::nullopt);

/// Uniform random labelled recursive tree (vertex i attaches to a random
/// earlier vertex), with `ue` edges.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Random DAG rooted at 0: vertex i > 0 gets an edge from a random earlier
/// vertex plus extra forward edges with probability `density`.
Graph random_rooted_dag(std::size_t n, double density, std::uint64_t seed);

/// Calls `fn` for each of the 2^(n(n-1)/2) undirected graphs on n labelled
/// vertices (symmetric edges), optionally with a fixed root.
void for_each_undirected_graph(std::size_t n, std::optional<VertexId> root,
                               const std::function<void(const Graph&)>& fn);

/// Calls `fn` for each of the 4^(n(n-1)/2) simple digraphs on n labelled
/// vertices, optionally with a fixed root.
void for_each_digraph(std::size_t n, std::optional<VertexId> root,
                      const std::function<void(const Graph&)>& fn);

}  // namespace maxsub
