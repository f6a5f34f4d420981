#pragma once

#include <cstddef>

#include "maxsub/graph.hpp"
#include "maxsub/property.hpp"

namespace maxsub {

struct OracleLimit {
  std::size_t max_n = 20;
};

/// Every vertex subset S of G with G[S] in P that is not strictly contained
/// in another such subset. Evaluates the predicate on all 2^n subsets and
/// decides maximality by set inclusion, never by single-vertex extension.
/// Results are in ascending binary order of the subset masks.
/// Throws OracleLimitError when G has more than `limit.max_n` vertices.
SolutionSet brute_force_all(const Property& p, const Graph& g,
                            OracleLimit limit = {});

/// Members of brute_force_all(p, g) containing `v`.
SolutionSet brute_force_with_vertex(const Property& p, const Graph& g,
                                    VertexId v, OracleLimit limit = {});

}  // namespace maxsub
