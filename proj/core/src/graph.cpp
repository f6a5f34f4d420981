#include "maxsub/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "maxsub/errors.hpp"

namespace maxsub {

std::string_view to_string(PropertyClass c) {
  switch (c) {
    case PropertyClass::kHereditary:
      return "hereditary";
    case PropertyClass::kConnectedHereditary:
      return "connected-hereditary";
    case PropertyClass::kRootedHereditary:
      return "rooted-hereditary";
  }
  return "unknown";
}

std::optional<PropertyClass> property_class_from_string(std::string_view s) {
  if (s == "hereditary") return PropertyClass::kHereditary;
  if (s == "connected-hereditary") return PropertyClass::kConnectedHereditary;
  if (s == "rooted-hereditary") return PropertyClass::kRootedHereditary;
  return std::nullopt;
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges,
             std::optional<VertexId> root)
    : n_(n),
      root_(root),
      out_(n, VertexSet(n)),
      in_(n, VertexSet(n)),
      und_(n, VertexSet(n)) {
  if (root_ && *root_ >= n_) {
    throw ContractError("root " + std::to_string(*root_) + " out of range");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      throw ContractError("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw ContractError("self-loop on vertex " + std::to_string(u));
    }
    out_[u].insert(v);
    in_[v].insert(u);
    und_[u].insert(v);
    und_[v].insert(u);
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  for (VertexId u = 0; u < n_; ++u) {
    out_[u].for_each([&](VertexId v) { result.emplace_back(u, v); });
  }
  return result;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : out_) total += row.size();
  return total;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" +
                                  std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<VertexId> root;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const std::string_view kind = tokens[0];
    auto vertex = [&](std::string_view token) {
      const auto id = parse_number(token, line_no);
      if (id >= *n) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                      " out of range (n = " +
                                      std::to_string(*n) + ")");
      }
      return static_cast<VertexId>(id);
    };

    if (!n) {
      if (kind != "v" || tokens.size() != 2) {
        throw ParseError(line_no, "first line must be 'v <n>'");
      }
      n = static_cast<std::size_t>(parse_number(tokens[1], line_no));
      continue;
    }

    if (kind == "v") {
      throw ParseError(line_no, "duplicate 'v' line");
    } else if (kind == "root") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'root <id>'");
      if (root) throw ParseError(line_no, "duplicate root line");
      root = vertex(tokens[1]);
    } else if (kind == "e" || kind == "ue") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected '" + std::string(kind) + " <u> <v>'");
      }
      const VertexId u = vertex(tokens[1]);
      const VertexId v = vertex(tokens[2]);
      if (u == v) {
        throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      }
      edges.emplace_back(u, v);
      if (kind == "ue") edges.emplace_back(v, u);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kind) + "'");
    }
  }
  if (!n) throw ParseError(line_no + 1, "missing 'v <n>' line");
  return Graph(*n, edges, root);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "v " << g.size() << '\n';
  if (g.root()) os << "root " << *g.root() << '\n';
  for (const auto& [u, v] : g.edges()) {
    const bool symmetric = g.has_edge(v, u);
    if (symmetric && v < u) continue;
    os << (symmetric ? "ue " : "e ") << u << ' ' << v << '\n';
  }
  return os.str();
}

InducedSubgraph::InducedSubgraph(const Graph& parent, VertexSet vertices)
    : parent_(&parent), vertices_(std::move(vertices)) {
  if (vertices_.universe_size() != parent.size()) {
    throw ContractError("vertex set universe does not match parent graph");
  }
}

std::optional<VertexId> InducedSubgraph::root() const {
  const auto r = parent_->root();
  if (r && vertices_.contains(*r)) return r;
  return std::nullopt;
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
  return InducedSubgraph(g, std::move(s));
}

InducedSubgraph extend(const InducedSubgraph& h, VertexId v) {
  if (v >= h.parent().size()) {
    throw ContractError("vertex " + std::to_string(v) + " out of range");
  }
  return InducedSubgraph(h.parent(), h.vertices().with(v));
}

InducedSubgraph union_sub(const InducedSubgraph& h, const InducedSubgraph& h2) {
  if (&h.parent() != &h2.parent()) {
    throw ContractError("union of subgraphs of different parent graphs");
  }
  return InducedSubgraph(h.parent(), h.vertices() | h2.vertices());
}

VertexSet neighbors(PropertyClass cls, const InducedSubgraph& h) {
  const Graph& g = h.parent();
  VertexSet result(g.size());
  switch (cls) {
    case PropertyClass::kHereditary:
      return g.all_vertices() - h.vertices();
    case PropertyClass::kConnectedHereditary:
      h.vertices().for_each(
          [&](VertexId v) { result |= g.undirected_neighbors(v); });
      break;
    case PropertyClass::kRootedHereditary:
      h.vertices().for_each([&](VertexId v) { result |= g.out_neighbors(v); });
      break;
  }
  return result -= h.vertices();
}

namespace {

// Closure of `seed` under `step`, restricted to `within`.
template <class Step>
VertexSet closure(const VertexSet& within, VertexId seed, Step step) {
  VertexSet seen(within.universe_size());
  seen.insert(seed);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(within.universe_size());
    frontier.for_each([&](VertexId v) { next |= step(v); });
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

VertexSet reachable_within(const InducedSubgraph& h, VertexId from) {
  const Graph& g = h.parent();
  return closure(h.vertices(), from,
                 [&](VertexId v) -> const VertexSet& { return g.out_neighbors(v); });
}

VertexSet component_of(const InducedSubgraph& h, VertexId v) {
  const Graph& g = h.parent();
  return closure(h.vertices(), v, [&](VertexId u) -> const VertexSet& {
    return g.undirected_neighbors(u);
  });
}

bool is_connected(const InducedSubgraph& h) {
  const auto start = h.vertices().first();
  if (!start) return true;
  return component_of(h, *start) == h.vertices();
}

bool is_rooted(const InducedSubgraph& h) {
  const auto r = h.root();
  if (!r) return false;
  return reachable_within(h, *r) == h.vertices();
}

bool is_undirected_tree(const Graph& g) {
  if (g.size() == 0) return false;
  std::size_t undirected_edges = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    undirected_edges += g.undirected_neighbors(v).size();
  }
  undirected_edges /= 2;
  return undirected_edges + 1 == g.size() && is_connected(whole(g));
}

bool is_acyclic(const Graph& g) {
  std::vector<std::size_t> indegree(g.size());
  for (VertexId v = 0; v < g.size(); ++v) indegree[v] = g.in_neighbors(v).size();
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    g.out_neighbors(v).for_each([&](VertexId w) {
      if (--indegree[w] == 0) ready.push_back(w);
    });
  }
  return removed == g.size();
}

}  // namespace maxsub
