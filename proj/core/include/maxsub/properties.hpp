#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "maxsub/graph.hpp"
#include "maxsub/property.hpp"

namespace maxsub {

// Predicates. All treat adjacency as undirected (u~v iff (u,v) or (v,u) is
// an edge) except where reachability is involved.
bool is_clique(const InducedSubgraph& h);
bool is_independent_set(const InducedSubgraph& h);
bool is_bipartite(const InducedSubgraph& h);
bool is_connected_bipartite(const InducedSubgraph& h);
bool is_star(const InducedSubgraph& h);
bool is_rooted_clique(const InducedSubgraph& h);

/// One side of a proper 2-colouring of H, or nullopt if H has an odd cycle.
/// Each component's smallest vertex lands on the returned side.
std::optional<VertexSet> bipartition(const InducedSubgraph& h);

// Specialized restricted solvers. Each requires the universe to almost
// satisfy its property and throws ContractError otherwise.
SolutionSet restricted_clique(const InducedSubgraph& universe,
                              std::optional<VertexId> required = std::nullopt);
SolutionSet restricted_independent_set(
    const InducedSubgraph& universe,
    std::optional<VertexId> required = std::nullopt);
SolutionSet restricted_connected_bipartite(
    const InducedSubgraph& universe,
    std::optional<VertexId> required = std::nullopt);
SolutionSet restricted_star(const InducedSubgraph& universe,
                            std::optional<VertexId> required = std::nullopt);
/// Returns the empty set when the universe has no root.
SolutionSet restricted_rooted_clique(
    const InducedSubgraph& universe,
    std::optional<VertexId> required = std::nullopt);

const Property& clique_property();
const Property& independent_set_property();
const Property& bipartite_property();
const Property& connected_bipartite_property();
const Property& star_property();
const Property& rooted_clique_property();

/// All catalog properties, in registry order.
const std::vector<const Property*>& property_catalog();
/// Looks a property up by its CLI name (`clique`, `independent-set`,
/// `bipartite`, `connected-bipartite`, `star`, `rooted-clique`).
const Property* find_property(std::string_view name);

/// Vertex ids of the two example graphs.
namespace g1 {
inline constexpr VertexId kV1 = 0;
inline constexpr VertexId kV2 = 1;
inline constexpr VertexId kU1 = 2;
inline constexpr VertexId kU2 = 3;
inline constexpr VertexId kW = 4;
}  // namespace g1

/// Five vertices: top side {v1, v2}, bottom side {u1, u2} forming a 4-cycle,
/// plus w joined to v1, v2 and u2. G1 - w is connected bipartite and G1 has
/// exactly three maximal connected bipartite induced subgraphs.
Graph make_g1();

/// w = 0, v_i = 2i - 1, u_i = 2i. Edges v_i u_i, w v_i, w u_i: n triangles
/// sharing w. Has 2^n + 1 maximal bipartite induced subgraphs.
Graph make_g2(std::size_t n);
inline VertexId g2_v(std::size_t i) { return static_cast<VertexId>(2 * i - 1); }
inline VertexId g2_u(std::size_t i) { return static_cast<VertexId>(2 * i); }

}  // namespace maxsub
