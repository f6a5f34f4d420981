#pragma once

#include <cstddef>
#include <vector>

#include "maxsub/engine_stats.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/property.hpp"

namespace maxsub {

/// All maximal P-subgraphs of G for a hereditary P.
///
/// Keeps a pool that, after processing vertices 0..i-1, holds exactly the
/// maximal P-subgraphs of G[{0..i-1}]. Each step replaces every pool member
/// H by those maximal P-subgraphs of G[H ∪ {v_i}] (which almost satisfies P,
/// since H does) that are still maximal in the larger prefix. The pool is a
/// set, so a subgraph reached from two parents is kept once.
///
/// Throws ContractError unless P is hereditary.
SolutionSet gen_hered(const Property& p, const Graph& g,
                      EngineStats* stats = nullptr);

/// The pool after the first `prefix` vertices have been processed; equals
/// the maximal P-subgraphs of G[{0..prefix-1}]. prefix = 0 gives {∅}.
SolutionSet prefix_solutions(const Property& p, const Graph& g,
                             std::size_t prefix, EngineStats* stats = nullptr);

/// Vertex order used by gen_ordered: breadth-first from `required` over the
/// underlying undirected graph (connected-hereditary), or a topological
/// order of the root's descendants followed by the remaining vertices
/// (rooted-hereditary). Ties go to the smaller id.
std::vector<VertexId> ordered_vertex_sequence(const Property& p, const Graph& g,
                                              VertexId required);

/// Maximal P-subgraphs of G that contain `required`, using the pool loop
/// with a vertex order that keeps every prefix usable.
///
/// Preconditions (ContractError otherwise): either P is connected-hereditary
/// and the underlying undirected graph of G is a tree, or P is
/// rooted-hereditary, G is acyclic and `required` is the root; in both
/// cases G[{required}] satisfies P.
SolutionSet gen_ordered(const Property& p, const Graph& g, VertexId required,
                        EngineStats* stats = nullptr);

/// Pool after the first `prefix` vertices of ordered_vertex_sequence.
SolutionSet ordered_prefix_solutions(const Property& p, const Graph& g,
                                     VertexId required, std::size_t prefix,
                                     EngineStats* stats = nullptr);

}  // namespace maxsub
