#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "maxsub/graph.hpp"
#include "maxsub/property_class.hpp"
#include "maxsub/vertex_set.hpp"

namespace maxsub {

/// Duplicate-free collection of vertex sets, kept in insertion order.
class SolutionSet {
 public:
  SolutionSet() = default;
  SolutionSet(std::initializer_list<VertexSet> sets);

  /// Returns false (and does nothing) if `s` is already present.
  bool insert(const VertexSet& s);
  bool contains(const VertexSet& s) const { return index_.count(s) != 0; }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<VertexSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members in lexicographic order of their ascending id sequences.
  std::vector<VertexSet> sorted() const;

  /// Order-insensitive equality.
  friend bool operator==(const SolutionSet& a, const SolutionSet& b);

 private:
  std::vector<VertexSet> members_;
  std::unordered_set<VertexSet, VertexSetHash> index_;
};

std::ostream& operator<<(std::ostream& os, const SolutionSet& s);

/// Keeps only the sets not strictly contained in another member.
SolutionSet inclusion_maximal(const SolutionSet& sets);

struct Property;

/// Computes the maximal P-subgraphs of a universe that almost satisfies P,
/// optionally only those containing a given vertex. The universe is an
/// induced subgraph so engines can pass G[H, v] without copying.
using RestrictedSolver = std::function<SolutionSet(
    const Property&, const InducedSubgraph& universe,
    std::optional<VertexId> required)>;

struct Property {
  std::string name;
  PropertyClass cls = PropertyClass::kHereditary;
  std::function<bool(const InducedSubgraph&)> predicate;
  /// Absent means restricted problems go to generic_restricted.
  RestrictedSolver restricted;
  /// Human-readable reason `predicate` fails; empty when it holds.
  std::function<std::string(const InducedSubgraph&)> explain;
};

bool sat(const Property& p, const InducedSubgraph& h);

/// `h` satisfies P and no single vertex of `universe` outside it can be
/// added while keeping P.
bool is_max(const Property& p, const InducedSubgraph& h,
            const InducedSubgraph& universe);
bool is_max(const Property& p, const InducedSubgraph& h, const Graph& g);

/// Smallest v such that universe - v satisfies P.
std::optional<VertexId> almost_satisfies(const Property& p,
                                         const InducedSubgraph& universe);
std::optional<VertexId> almost_satisfies(const Property& p, const Graph& g);

/// MaxSol_P(universe). Requires that the universe almost satisfies P.
SolutionSet restricted_all(const Property& p, const InducedSubgraph& universe);
SolutionSet restricted_all(const Property& p, const Graph& g);

/// Members of MaxSol_P(universe) that contain `required`.
SolutionSet restricted_with_vertex(const Property& p,
                                   const InducedSubgraph& universe,
                                   VertexId required);
SolutionSet restricted_with_vertex(const Property& p, const Graph& g,
                                   VertexId required);

/// Exhaustive fallback for the restricted problems, valid on any universe.
///
/// Walks downward from the whole universe, deleting one vertex at a time
/// (never `required`) and stopping at the first satisfying set on each
/// branch. Visited sets are memoized; the satisfying sets found are then
/// filtered to the inclusion-maximal ones. Exponential in the worst case.
SolutionSet generic_restricted(const Property& p,
                               const InducedSubgraph& universe,
                               std::optional<VertexId> required = std::nullopt);
SolutionSet generic_restricted(const Property& p, const Graph& g,
                               std::optional<VertexId> required = std::nullopt);

/// Shared tail of the specialized solvers: keeps candidates that satisfy
/// P, contain `required`, are maximal in the universe, and are not
/// contained in another kept candidate.
SolutionSet finalize_candidates(const Property& p,
                                const InducedSubgraph& universe,
                                const std::vector<VertexSet>& candidates,
                                std::optional<VertexId> required);

}  // namespace maxsub
