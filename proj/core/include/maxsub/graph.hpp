#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxsub/property_class.hpp"
#include "maxsub/vertex_set.hpp"

namespace maxsub {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple directed graph on vertices [0, n) with an optional root.
///
/// Adjacency is kept three ways (out, in, and the underlying undirected
/// relation u~v iff (u,v) or (v,u) is an edge), each row a VertexSet, so
/// every neighbourhood query used by the engines is a word-parallel
/// intersection.
class Graph {
 public:
  Graph() = default;

  /// Throws ContractError on out-of-range endpoints, self-loops, or an
  /// out-of-range root. Duplicate edges collapse.
  Graph(std::size_t n, const std::vector<Edge>& edges,
        std::optional<VertexId> root = std::nullopt);

  std::size_t size() const { return n_; }
  std::optional<VertexId> root() const { return root_; }

  bool has_edge(VertexId u, VertexId v) const { return out_[u].contains(v); }
  bool adjacent(VertexId u, VertexId v) const { return und_[u].contains(v); }

  const VertexSet& out_neighbors(VertexId v) const { return out_[v]; }
  const VertexSet& in_neighbors(VertexId v) const { return in_[v]; }
  const VertexSet& undirected_neighbors(VertexId v) const { return und_[v]; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Sorted, deduplicated directed edge list.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.root_ == b.root_ && a.out_ == b.out_;
  }

 private:
  std::size_t n_ = 0;
  std::optional<VertexId> root_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<VertexSet> und_;
};

/// Reads the line-oriented graph format:
///   v <n>        first non-comment line, exactly once
///   root <id>    at most once
///   e <u> <v>    directed edge u->v
///   ue <u> <v>   both u->v and v->u
/// `#` starts a comment. Throws ParseError naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// Writes `g` in the format accepted by parse_graph. Symmetric pairs are
/// written as `ue` lines.
std::string format_graph(const Graph& g);

/// A vertex subset of a parent graph, viewed as the graph it induces.
///
/// Holds a non-owning pointer to the parent; the parent must outlive it.
/// The root is the parent's root when that vertex is kept, absent otherwise.
class InducedSubgraph {
 public:
  InducedSubgraph(const Graph& parent, VertexSet vertices);

  const Graph& parent() const { return *parent_; }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(VertexId v) const { return vertices_.contains(v); }

  std::optional<VertexId> root() const;

  /// Undirected neighbours of `v` inside this subgraph.
  VertexSet adjacent_within(VertexId v) const {
    return parent_->undirected_neighbors(v) & vertices_;
  }
  VertexSet out_within(VertexId v) const {
    return parent_->out_neighbors(v) & vertices_;
  }

  InducedSubgraph without(VertexId v) const {
    return InducedSubgraph(*parent_, vertices_.without(v));
  }

 private:
  const Graph* parent_;
  VertexSet vertices_;
};

InducedSubgraph induced(const Graph& g, VertexSet s);
inline InducedSubgraph whole(const Graph& g) {
  return InducedSubgraph(g, g.all_vertices());
}

/// G[V(H) ∪ {v}].
InducedSubgraph extend(const InducedSubgraph& h, VertexId v);
/// G[V(H) ∪ V(H2)]. Both must share a parent.
InducedSubgraph union_sub(const InducedSubgraph& h, const InducedSubgraph& h2);

/// Vertices outside H that can extend it under the given closure law:
/// undirected neighbours for connected-hereditary, out-neighbours for
/// rooted-hereditary, and every non-member for hereditary.
VertexSet neighbors(PropertyClass cls, const InducedSubgraph& h);

bool is_connected(const InducedSubgraph& h);
bool is_rooted(const InducedSubgraph& h);

/// Vertices of H reachable from `from` along directed edges inside H.
VertexSet reachable_within(const InducedSubgraph& h, VertexId from);
/// Connected component of H (underlying undirected graph) containing `v`.
VertexSet component_of(const InducedSubgraph& h, VertexId v);

/// True if the underlying undirected graph is a tree (connected, n-1 edges).
bool is_undirected_tree(const Graph& g);
bool is_acyclic(const Graph& g);

}  // namespace maxsub
