#include "maxsub/hered.hpp"

#include <algorithm>
#include <chrono>
#include <list>
#include <optional>
#include <queue>
#include <unordered_map>

#include "maxsub/errors.hpp"

namespace maxsub {

std::size_t EngineStats::max_completion_gap() const {
  return completion_gaps.empty()
             ? 0
             : *std::max_element(completion_gaps.begin(), completion_gaps.end());
}

std::size_t EngineStats::max_emission_gap() const {
  return emission_gaps.empty()
             ? 0
             : *std::max_element(emission_gaps.begin(), emission_gaps.end());
}

namespace {

// Insertion-ordered set of vertex sets with O(1) erase.
class Pool {
 public:
  void insert(const VertexSet& s) {
    if (index_.count(s) != 0) return;
    order_.push_back(s);
    index_.emplace(s, std::prev(order_.end()));
  }
  void erase(const VertexSet& s) {
    auto it = index_.find(s);
    if (it == index_.end()) return;
    order_.erase(it->second);
    index_.erase(it);
  }
  std::size_t size() const { return order_.size(); }
  std::vector<VertexSet> snapshot() const {
    return {order_.begin(), order_.end()};
  }
  SolutionSet to_solutions() const {
    SolutionSet out;
    for (const auto& s : order_) out.insert(s);
    return out;
  }

 private:
  std::list<VertexSet> order_;
  std::unordered_map<VertexSet, std::list<VertexSet>::iterator, VertexSetHash>
      index_;
};

// The vertex loop shared by gen_hered and gen_ordered. `seed` is the
// initial pool member and `order` lists the vertices still to process.
SolutionSet run_pool(const Property& p, const Graph& g, const VertexSet& seed,
                     const std::vector<VertexId>& order,
                     std::optional<VertexId> required, EngineStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  EngineStats local;
  EngineStats& st = stats ? *stats : local;

  Pool pool;
  pool.insert(seed);
  VertexSet prefix = seed;
  st.max_candidate_pool = std::max(st.max_candidate_pool, pool.size());

  for (VertexId v : order) {
    ++st.outer_iterations;
    prefix.insert(v);
    const InducedSubgraph prefix_graph(g, prefix);
    for (const VertexSet& h : pool.snapshot()) {
      pool.erase(h);
      const InducedSubgraph grown(g, h.with(v));
      ++st.restricted_calls;
      const SolutionSet found = required
                                    ? restricted_with_vertex(p, grown, *required)
                                    : restricted_all(p, grown);
      for (const VertexSet& candidate : found) {
        if (is_max(p, InducedSubgraph(g, candidate), prefix_graph)) {
          pool.insert(candidate);
        }
      }
      st.max_candidate_pool = std::max(st.max_candidate_pool, pool.size());
    }
  }

  SolutionSet result = pool.to_solutions();
  st.emissions += result.size();
  st.elapsed += std::chrono::steady_clock::now() - start;
  return result;
}

void require_hereditary(const Property& p) {
  if (p.cls != PropertyClass::kHereditary) {
    throw ContractError("property '" + p.name + "' is " +
                        std::string(to_string(p.cls)) +
                        "; the pool engine needs a hereditary property");
  }
}

std::vector<VertexId> identity_order(std::size_t n) {
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);
  return order;
}

}  // namespace

SolutionSet gen_hered(const Property& p, const Graph& g, EngineStats* stats) {
  return prefix_solutions(p, g, g.size(), stats);
}

SolutionSet prefix_solutions(const Property& p, const Graph& g,
                             std::size_t prefix, EngineStats* stats) {
  require_hereditary(p);
  if (prefix > g.size()) {
    throw ContractError("prefix " + std::to_string(prefix) + " exceeds n = " +
                        std::to_string(g.size()));
  }
  auto order = identity_order(prefix);
  return run_pool(p, g, g.empty_set(), order, std::nullopt, stats);
}

std::vector<VertexId> ordered_vertex_sequence(const Property& p, const Graph& g,
                                              VertexId required) {
  const std::size_t n = g.size();
  std::vector<VertexId> order;
  order.reserve(n);
  VertexSet placed(n);

  if (p.cls == PropertyClass::kConnectedHereditary) {
    std::vector<VertexId> queue{required};
    placed.insert(required);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      order.push_back(u);
      (g.undirected_neighbors(u) - placed).for_each([&](VertexId w) {
        placed.insert(w);
        queue.push_back(w);
      });
    }
  } else {
    // Kahn's algorithm on the root's descendants, smallest ready id first.
    const VertexSet reach = reachable_within(whole(g), required);
    std::vector<std::size_t> indegree(n, 0);
    reach.for_each([&](VertexId v) {
      indegree[v] = (g.in_neighbors(v) & reach).size();
    });
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    reach.for_each([&](VertexId v) {
      if (indegree[v] == 0) ready.push(v);
    });
    while (!ready.empty()) {
      const VertexId u = ready.top();
      ready.pop();
      order.push_back(u);
      placed.insert(u);
      (g.out_neighbors(u) & reach).for_each([&](VertexId w) {
        if (--indegree[w] == 0) ready.push(w);
      });
    }
  }
  // Vertices the traversal never reached can never join a solution that
  // contains `required`; they go last in id order.
  for (VertexId v = 0; v < n; ++v) {
    if (!placed.contains(v)) order.push_back(v);
  }
  return order;
}

namespace {

void check_ordered_preconditions(const Property& p, const Graph& g,
                                 VertexId required) {
  if (required >= g.size()) {
    throw ContractError("vertex " + std::to_string(required) + " out of range");
  }
  switch (p.cls) {
    case PropertyClass::kHereditary:
      throw ContractError("ordered engine needs a connected- or "
                          "rooted-hereditary property");
    case PropertyClass::kConnectedHereditary:
      if (!is_undirected_tree(g)) {
        throw ContractError(
            "ordered engine needs an underlying undirected tree for a "
            "connected-hereditary property");
      }
      break;
    case PropertyClass::kRootedHereditary:
      if (!is_acyclic(g)) {
        throw ContractError(
            "ordered engine needs an acyclic graph for a rooted-hereditary "
            "property");
      }
      if (g.root() != required) {
        throw ContractError(
            "ordered engine needs the required vertex to be the root");
      }
      break;
  }
  if (!sat(p, induced(g, VertexSet(g.size(), {required})))) {
    throw ContractError("the single vertex " + std::to_string(required) +
                        " does not satisfy property '" + p.name + "'");
  }
}

}  // namespace

SolutionSet gen_ordered(const Property& p, const Graph& g, VertexId required,
                        EngineStats* stats) {
  return ordered_prefix_solutions(p, g, required, g.size(), stats);
}

SolutionSet ordered_prefix_solutions(const Property& p, const Graph& g,
                                     VertexId required, std::size_t prefix,
                                     EngineStats* stats) {
  check_ordered_preconditions(p, g, required);
  if (prefix < 1 || prefix > g.size()) {
    throw ContractError("prefix must lie in [1, n]");
  }
  auto order = ordered_vertex_sequence(p, g, required);
  order.resize(prefix);
  // order[0] == required and seeds the pool.
  order.erase(order.begin());
  return run_pool(p, g, VertexSet(g.size(), {required}), order, required,
                  stats);
}

}  // namespace maxsub
