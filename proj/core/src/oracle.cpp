#include "maxsub/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(static_cast<VertexId>(v));
  }
  return s;
}

}  // namespace

SolutionSet brute_force_all(const Property& p, const Graph& g,
                            OracleLimit limit) {
  const std::size_t n = g.size();
  if (n > limit.max_n || n >= 32) {
    throw OracleLimitError("oracle refuses graph with " + std::to_string(n) +
                           " vertices (limit " + std::to_string(limit.max_n) +
                           ")");
  }
  const std::uint32_t count = std::uint32_t{1} << n;

  std::vector<std::uint8_t> good(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    good[mask] = sat(p, InducedSubgraph(g, from_mask(n, mask))) ? 1 : 0;
  }

  // above[S] = some satisfying T with T ⊇ S (superset-OR transform).
  std::vector<std::uint8_t> above = good;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if ((mask & b) == 0) above[mask] |= above[mask | b];
    }
  }

  SolutionSet result;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!good[mask]) continue;
    bool dominated = false;
    for (std::size_t bit = 0; bit < n && !dominated; ++bit) {
      const std::uint32_t b = std::uint32_t{1} << bit;
      dominated = (mask & b) == 0 && above[mask | b];
    }
    if (!dominated) result.insert(from_mask(n, mask));
  }
  return result;
}

SolutionSet brute_force_with_vertex(const Property& p, const Graph& g,
                                    VertexId v, OracleLimit limit) {
  if (v >= g.size()) {
    throw ContractError("vertex " + std::to_string(v) + " out of range");
  }
  SolutionSet result;
  for (const auto& s : brute_force_all(p, g, limit)) {
    if (s.contains(v)) result.insert(s);
  }
  return result;
}

}  // namespace maxsub
