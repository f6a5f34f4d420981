#include "maxsub/properties.hpp"

#include <string>
#include <unordered_set>

#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

std::string pair_text(VertexId a, VertexId b) {
  return std::to_string(a) + " and " + std::to_string(b);
}

// First pair (a, b), a < b, of distinct members that are not adjacent.
std::optional<Edge> first_non_adjacent_pair(const InducedSubgraph& h) {
  const VertexSet& vs = h.vertices();
  for (auto a = vs.first(); a; a = vs.next_after(*a)) {
    VertexSet missing = vs - h.parent().undirected_neighbors(*a);
    missing.erase(*a);
    if (auto b = missing.next_after(*a)) return Edge{*a, *b};
  }
  return std::nullopt;
}

std::optional<Edge> first_edge(const InducedSubgraph& h) {
  const VertexSet& vs = h.vertices();
  for (auto a = vs.first(); a; a = vs.next_after(*a)) {
    if (auto b = h.adjacent_within(*a).next_after(*a)) return Edge{*a, *b};
  }
  return std::nullopt;
}

std::optional<Edge> odd_cycle_edge(const InducedSubgraph& h,
                                   VertexSet* side_out) {
  const Graph& g = h.parent();
  VertexSet side(g.size());
  VertexSet colored(g.size());
  const VertexSet& vs = h.vertices();
  for (auto s = vs.first(); s; s = vs.next_after(*s)) {
    if (colored.contains(*s)) continue;
    colored.insert(*s);
    side.insert(*s);
    std::vector<VertexId> queue{*s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      const bool u_side = side.contains(u);
      std::optional<Edge> conflict;
      h.adjacent_within(u).for_each([&](VertexId w) {
        if (conflict) return;
        if (!colored.contains(w)) {
          colored.insert(w);
          if (!u_side) side.insert(w);
          queue.push_back(w);
        } else if (side.contains(w) == u_side) {
          conflict = Edge{u, w};
        }
      });
      if (conflict) return conflict;
    }
  }
  if (side_out) *side_out = std::move(side);
  return std::nullopt;
}

// Smallest vertex whose removal leaves a P-graph; throws if there is none.
VertexId require_witness(const Property& p, const InducedSubgraph& universe) {
  auto w = almost_satisfies(p, universe);
  if (!w) {
    throw ContractError("graph does not almost satisfy property '" + p.name +
                        "'");
  }
  return *w;
}

SolutionSet whole_universe(const InducedSubgraph& universe,
                           std::optional<VertexId> required) {
  if (required && !universe.contains(*required)) return {};
  return {universe.vertices()};
}

std::string explain_clique(const InducedSubgraph& h) {
  if (auto pair = first_non_adjacent_pair(h)) {
    return "vertices " + pair_text(pair->first, pair->second) +
           " are not adjacent";
  }
  return "";
}

std::string explain_independent(const InducedSubgraph& h) {
  if (auto e = first_edge(h)) {
    return "vertices " + pair_text(e->first, e->second) + " are adjacent";
  }
  return "";
}

std::string explain_connected(const InducedSubgraph& h) {
  if (h.empty()) return "graph is empty";
  const VertexId start = *h.vertices().first();
  const VertexSet rest = h.vertices() - component_of(h, start);
  if (auto v = rest.first()) {
    return "vertex " + std::to_string(*v) + " is not connected to vertex " +
           std::to_string(start);
  }
  return "";
}

std::string explain_bipartite(const InducedSubgraph& h) {
  if (auto e = odd_cycle_edge(h, nullptr)) {
    return "odd cycle through the edge " + pair_text(e->first, e->second);
  }
  return "";
}

std::string explain_connected_bipartite(const InducedSubgraph& h) {
  if (auto why = explain_connected(h); !why.empty()) return why;
  return explain_bipartite(h);
}

std::string explain_star(const InducedSubgraph& h) {
  if (auto why = explain_connected(h); !why.empty()) return why;
  if (!is_star(h)) return "no vertex is incident to every edge";
  return "";
}

std::string explain_rooted(const InducedSubgraph& h) {
  const auto r = h.root();
  if (!r) return "graph has no root";
  const VertexSet missing = h.vertices() - reachable_within(h, *r);
  if (auto v = missing.first()) {
    return "vertex " + std::to_string(*v) + " is not reachable from root " +
           std::to_string(*r);
  }
  return "";
}

std::string explain_rooted_clique(const InducedSubgraph& h) {
  if (auto why = explain_rooted(h); !why.empty()) return why;
  return explain_clique(h);
}

}  // namespace

bool is_clique(const InducedSubgraph& h) {
  return !first_non_adjacent_pair(h).has_value();
}

bool is_independent_set(const InducedSubgraph& h) {
  return !first_edge(h).has_value();
}

std::optional<VertexSet> bipartition(const InducedSubgraph& h) {
  VertexSet side;
  if (odd_cycle_edge(h, &side)) return std::nullopt;
  return side;
}

bool is_bipartite(const InducedSubgraph& h) {
  return !odd_cycle_edge(h, nullptr).has_value();
}

bool is_connected_bipartite(const InducedSubgraph& h) {
  return !h.empty() && is_connected(h) && is_bipartite(h);
}

bool is_star(const InducedSubgraph& h) {
  const std::size_t k = h.size();
  if (k == 0 || !is_connected(h)) return false;
  if (k <= 2) return true;
  // A star on >= 3 vertices has a unique centre adjacent to everything, and
  // the remaining vertices are pairwise non-adjacent.
  const VertexSet& vs = h.vertices();
  for (auto c = vs.first(); c; c = vs.next_after(*c)) {
    if (h.adjacent_within(*c).size() + 1 == k) {
      return is_independent_set(h.without(*c));
    }
  }
  return false;
}

bool is_rooted_clique(const InducedSubgraph& h) {
  return is_rooted(h) && is_clique(h);
}

SolutionSet restricted_clique(const InducedSubgraph& universe,
                              std::optional<VertexId> required) {
  const auto& p = clique_property();
  auto pair = first_non_adjacent_pair(universe);
  if (!pair) return whole_universe(universe, required);
  // Every witness must break the non-adjacent pair.
  std::optional<VertexId> w;
  for (VertexId cand : {pair->first, pair->second}) {
    if (is_clique(universe.without(cand))) {
      w = cand;
      break;
    }
  }
  if (!w) throw ContractError("graph does not almost satisfy property 'clique'");
  const VertexSet with_w =
      (universe.parent().undirected_neighbors(*w) & universe.vertices()).with(*w);
  return finalize_candidates(p, universe,
                             {universe.vertices().without(*w), with_w}, required);
}

SolutionSet restricted_independent_set(const InducedSubgraph& universe,
                                       std::optional<VertexId> required) {
  const auto& p = independent_set_property();
  auto e = first_edge(universe);
  if (!e) return whole_universe(universe, required);
  std::optional<VertexId> w;
  for (VertexId cand : {e->first, e->second}) {
    if (is_independent_set(universe.without(cand))) {
      w = cand;
      break;
    }
  }
  if (!w) {
    throw ContractError(
        "graph does not almost satisfy property 'independent-set'");
  }
  const VertexSet rest = universe.vertices().without(*w);
  const VertexSet with_w =
      (rest - universe.parent().undirected_neighbors(*w)).with(*w);
  return finalize_candidates(p, universe, {rest, with_w}, required);
}

SolutionSet restricted_connected_bipartite(const InducedSubgraph& universe,
                                           std::optional<VertexId> required) {
  const auto& p = connected_bipartite_property();
  if (sat(p, universe)) return whole_universe(universe, required);
  const VertexId w = require_witness(p, universe);
  const Graph& g = universe.parent();
  const InducedSubgraph rest = universe.without(w);

  std::vector<VertexSet> candidates{rest.vertices()};

  // Solutions through w: {w} ∪ T with T ⊆ V(rest). Since rest is bipartite,
  // {w} ∪ T is bipartite iff no component of G[T] joins a w-neighbour on
  // one side to a w-neighbour on the other. Branch on deleting a vertex of
  // a shortest such path until none remains, then keep the components
  // touching w. Every maximal solution survives on some branch.
  const VertexSet side = *bipartition(rest);
  const VertexSet wn = g.undirected_neighbors(w) & rest.vertices();
  const VertexSet wn_a = wn & side;
  const VertexSet wn_b = wn - side;

  auto conflict_path = [&](const VertexSet& t) -> std::vector<VertexId> {
    std::vector<VertexId> parent(g.size(), static_cast<VertexId>(-1));
    VertexSet seen = wn_a & t;
    std::vector<VertexId> queue = seen.members();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      if (wn_b.contains(u)) {
        std::vector<VertexId> path{u};
        while (parent[path.back()] != static_cast<VertexId>(-1)) {
          path.push_back(parent[path.back()]);
        }
        return path;
      }
      VertexSet next = (g.undirected_neighbors(u) & t) - seen;
      next.for_each([&](VertexId x) {
        seen.insert(x);
        parent[x] = u;
        queue.push_back(x);
      });
    }
    return {};
  };

  std::unordered_set<VertexSet, VertexSetHash> visited;
  std::vector<VertexSet> pending{rest.vertices()};
  visited.insert(rest.vertices());
  while (!pending.empty()) {
    VertexSet t = std::move(pending.back());
    pending.pop_back();
    auto path = conflict_path(t);
    if (path.empty()) {
      // w plus every component of G[t] it touches.
      candidates.push_back(component_of(InducedSubgraph(g, t.with(w)), w));
      continue;
    }
    for (VertexId x : path) {
      if (required && x == *required) continue;
      VertexSet smaller = t.without(x);
      if (visited.insert(smaller).second) pending.push_back(std::move(smaller));
    }
  }
  return finalize_candidates(p, universe, candidates, required);
}

SolutionSet restricted_star(const InducedSubgraph& universe,
                            std::optional<VertexId> required) {
  const auto& p = star_property();
  if (sat(p, universe)) return whole_universe(universe, required);
  const VertexId w = require_witness(p, universe);
  const Graph& g = universe.parent();
  const InducedSubgraph rest = universe.without(w);
  const VertexSet wn = g.undirected_neighbors(w) & rest.vertices();

  std::vector<VertexSet> candidates{rest.vertices()};
  // Possible centres of the star rest: any vertex when it has at most two,
  // otherwise the one adjacent to all others.
  std::vector<VertexId> centres;
  rest.vertices().for_each([&](VertexId c) {
    if (rest.size() <= 2 || rest.adjacent_within(c).size() + 1 == rest.size()) {
      centres.push_back(c);
    }
  });
  const VertexSet only_w = VertexSet(g.size()).with(w);
  for (VertexId c : centres) {
    const VertexSet leaves = rest.vertices().without(c);
    // Centre w: w with the leaves it sees (or with c alone).
    candidates.push_back((leaves & wn) | only_w);
    if (wn.contains(c)) {
      candidates.push_back(only_w.with(c));
      // Centre c: c, w and the leaves w does not see.
      candidates.push_back((leaves - wn).with(c).with(w));
    }
    // Centre a leaf l of rest seen by w: the path c - l - w.
    (leaves & wn).for_each([&](VertexId l) {
      candidates.push_back(only_w.with(l).with(c));
    });
  }
  std::vector<VertexSet> valid;
  for (auto& c : candidates) {
    if (sat(p, InducedSubgraph(g, c))) valid.push_back(std::move(c));
  }
  return finalize_candidates(p, universe, valid, required);
}

SolutionSet restricted_rooted_clique(const InducedSubgraph& universe,
                                     std::optional<VertexId> required) {
  const auto& p = rooted_clique_property();
  const auto root = universe.root();
  if (!root) return {};
  if (sat(p, universe)) return whole_universe(universe, required);
  const VertexId w = require_witness(p, universe);
  const Graph& g = universe.parent();

  std::vector<VertexSet> candidates{universe.vertices().without(w)};
  // Cliques through w live inside {w} ∪ N(w); the largest rooted one is
  // what the root reaches there.
  const VertexSet closed_nbhd =
      (g.undirected_neighbors(w) & universe.vertices()).with(w);
  if (closed_nbhd.contains(*root)) {
    candidates.push_back(reachable_within(InducedSubgraph(g, closed_nbhd), *root));
  }
  return finalize_candidates(p, universe, candidates, required);
}

namespace {

Property make_property(std::string name, PropertyClass cls,
                       bool (*predicate)(const InducedSubgraph&),
                       SolutionSet (*solver)(const InducedSubgraph&,
                                             std::optional<VertexId>),
                       std::string (*explain)(const InducedSubgraph&)) {
  Property p;
  p.name = std::move(name);
  p.cls = cls;
  p.predicate = predicate;
  if (solver) {
    p.restricted = [solver](const Property&, const InducedSubgraph& u,
                            std::optional<VertexId> r) { return solver(u, r); };
  }
  p.explain = explain;
  return p;
}

}  // namespace

const Property& clique_property() {
  static const Property p =
      make_property("clique", PropertyClass::kHereditary, &is_clique,
                    &restricted_clique, &explain_clique);
  return p;
}

const Property& independent_set_property() {
  static const Property p = make_property(
      "independent-set", PropertyClass::kHereditary, &is_independent_set,
      &restricted_independent_set, &explain_independent);
  return p;
}

const Property& bipartite_property() {
  static const Property p =
      make_property("bipartite", PropertyClass::kHereditary, &is_bipartite,
                    nullptr, &explain_bipartite);
  return p;
}

const Property& connected_bipartite_property() {
  static const Property p = make_property(
      "connected-bipartite", PropertyClass::kConnectedHereditary,
      &is_connected_bipartite, &restricted_connected_bipartite,
      &explain_connected_bipartite);
  return p;
}

const Property& star_property() {
  static const Property p =
      make_property("star", PropertyClass::kConnectedHereditary, &is_star,
                    &restricted_star, &explain_star);
  return p;
}

const Property& rooted_clique_property() {
  static const Property p = make_property(
      "rooted-clique", PropertyClass::kRootedHereditary, &is_rooted_clique,
      &restricted_rooted_clique, &explain_rooted_clique);
  return p;
}

const std::vector<const Property*>& property_catalog() {
  static const std::vector<const Property*> catalog{
      &clique_property(),    &independent_set_property(),
      &bipartite_property(), &connected_bipartite_property(),
      &star_property(),      &rooted_clique_property()};
  return catalog;
}

const Property* find_property(std::string_view name) {
  for (const Property* p : property_catalog()) {
    if (p->name == name) return p;
  }
  return nullptr;
}

Graph make_g1() {
  using namespace g1;
  const std::vector<std::pair<VertexId, VertexId>> undirected{
      {kV1, kU1}, {kV2, kU1}, {kV1, kU2}, {kV2, kU2},
      {kW, kV1},  {kW, kV2},  {kW, kU2}};
  std::vector<Edge> edges;
  for (auto [a, b] : undirected) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return Graph(5, edges);
}

Graph make_g2(std::size_t n) {
  if (n < 1) throw ContractError("make_g2 requires n >= 1");
  std::vector<Edge> edges;
  auto both = [&](VertexId a, VertexId b) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  };
  for (std::size_t i = 1; i <= n; ++i) {
    both(g2_v(i), g2_u(i));
    both(0, g2_v(i));
    both(0, g2_u(i));
  }
  return Graph(2 * n + 1, edges);
}

}  // namespace maxsub
