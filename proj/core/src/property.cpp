#include "maxsub/property.hpp"

#include <algorithm>
#include <ostream>

#include "maxsub/errors.hpp"

namespace maxsub {

SolutionSet::SolutionSet(std::initializer_list<VertexSet> sets) {
  for (const auto& s : sets) insert(s);
}

bool SolutionSet::insert(const VertexSet& s) {
  if (!index_.insert(s).second) return false;
  members_.push_back(s);
  return true;
}

std::vector<VertexSet> SolutionSet::sorted() const {
  std::vector<VertexSet> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const SolutionSet& a, const SolutionSet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const VertexSet& s) { return b.contains(s); });
}

std::ostream& operator<<(std::ostream& os, const SolutionSet& s) {
  os << '{';
  bool first = true;
  for (const auto& m : s.sorted()) {
    if (!first) os << ", ";
    os << m;
    first = false;
  }
  return os << '}';
}

SolutionSet inclusion_maximal(const SolutionSet& sets) {
  SolutionSet out;
  const auto& m = sets.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m.size() && !dominated; ++j) {
      dominated = i != j && m[i].is_subset_of(m[j]) && !(m[i] == m[j]);
    }
    if (!dominated) out.insert(m[i]);
  }
  return out;
}

bool sat(const Property& p, const InducedSubgraph& h) {
  // Only hereditary properties contain the empty graph.
  if (h.empty()) return p.cls == PropertyClass::kHereditary;
  return p.predicate(h);
}

bool is_max(const Property& p, const InducedSubgraph& h,
            const InducedSubgraph& universe) {
  if (!h.vertices().is_subset_of(universe.vertices())) {
    throw ContractError("is_max: subgraph not contained in the universe");
  }
  if (!sat(p, h)) return false;
  bool extendable = false;
  const VertexSet outside = universe.vertices() - h.vertices();
  for (auto v = outside.first(); v && !extendable; v = outside.next_after(*v)) {
    extendable = sat(p, extend(h, *v));
  }
  return !extendable;
}

bool is_max(const Property& p, const InducedSubgraph& h, const Graph& g) {
  return is_max(p, h, whole(g));
}

std::optional<VertexId> almost_satisfies(const Property& p,
                                         const InducedSubgraph& universe) {
  const VertexSet& vs = universe.vertices();
  for (auto v = vs.first(); v; v = vs.next_after(*v)) {
    if (sat(p, universe.without(*v))) return v;
  }
  return std::nullopt;
}

std::optional<VertexId> almost_satisfies(const Property& p, const Graph& g) {
  return almost_satisfies(p, whole(g));
}

namespace {

SolutionSet dispatch_restricted(const Property& p,
                                const InducedSubgraph& universe,
                                std::optional<VertexId> required) {
  if (required && !universe.contains(*required)) {
    throw ContractError("required vertex " + std::to_string(*required) +
                        " is not in the graph");
  }
  if (p.restricted) return p.restricted(p, universe, required);
  if (!almost_satisfies(p, universe)) {
    throw ContractError("graph does not almost satisfy property '" + p.name +
                        "'");
  }
  return generic_restricted(p, universe, required);
}

}  // namespace

SolutionSet restricted_all(const Property& p, const InducedSubgraph& universe) {
  return dispatch_restricted(p, universe, std::nullopt);
}

SolutionSet restricted_all(const Property& p, const Graph& g) {
  return restricted_all(p, whole(g));
}

SolutionSet restricted_with_vertex(const Property& p,
                                   const InducedSubgraph& universe,
                                   VertexId required) {
  return dispatch_restricted(p, universe, required);
}

SolutionSet restricted_with_vertex(const Property& p, const Graph& g,
                                   VertexId required) {
  return restricted_with_vertex(p, whole(g), required);
}

SolutionSet generic_restricted(const Property& p,
                               const InducedSubgraph& universe,
                               std::optional<VertexId> required) {
  const Graph& g = universe.parent();
  if (required && !universe.contains(*required)) return {};

  std::unordered_set<VertexSet, VertexSetHash> visited;
  std::vector<VertexSet> pending{universe.vertices()};
  visited.insert(universe.vertices());
  SolutionSet found;

  while (!pending.empty()) {
    VertexSet current = std::move(pending.back());
    pending.pop_back();
    if (sat(p, InducedSubgraph(g, current))) {
      found.insert(current);
      continue;
    }
    current.for_each([&](VertexId v) {
      if (required && v == *required) return;
      VertexSet smaller = current.without(v);
      if (visited.insert(smaller).second) pending.push_back(std::move(smaller));
    });
  }
  return inclusion_maximal(found);
}

SolutionSet generic_restricted(const Property& p, const Graph& g,
                               std::optional<VertexId> required) {
  return generic_restricted(p, whole(g), required);
}

SolutionSet finalize_candidates(const Property& p,
                                const InducedSubgraph& universe,
                                const std::vector<VertexSet>& candidates,
                                std::optional<VertexId> required) {
  SolutionSet kept;
  const Graph& g = universe.parent();
  for (const auto& c : candidates) {
    if (required && !c.contains(*required)) continue;
    if (!is_max(p, InducedSubgraph(g, c), universe)) continue;
    kept.insert(c);
  }
  return inclusion_maximal(kept);
}

}  // namespace maxsub
