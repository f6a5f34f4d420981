#include "maxsub/families.hpp"

#include <random>
#include <vector>

namespace maxsub {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Bit-exact across standard libraries, unlike the std distributions.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::pair<VertexId, VertexId>> unordered_pairs(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace

Graph disjoint_triangles(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const auto base = static_cast<VertexId>(3 * i);
    for (VertexId a = 0; a < 3; ++a) {
      for (VertexId b = 0; b < 3; ++b) {
        if (a != b) edges.emplace_back(base + a, base + b);
      }
    }
  }
  return Graph(3 * k, edges);
}

Graph random_digraph(std::size_t n, double density, std::uint64_t seed,
                     bool with_root) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.chance(density)) edges.emplace_back(u, v);
    }
  }
  std::optional<VertexId> root;
  if (with_root && n > 0) root = static_cast<VertexId>(rng.below(n));
  return Graph(n, edges, root);
}

Graph random_undirected(std::size_t n, double density, std::uint64_t seed,
                        std::optional<VertexId> root) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (auto [a, b] : unordered_pairs(n)) {
    if (rng.chance(density)) {
      edges.emplace_back(a, b);
      edges.emplace_back(b, a);
    }
  }
  return Graph(n, edges, root);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(rng.below(v));
    edges.emplace_back(parent, v);
    edges.emplace_back(v, parent);
  }
  return Graph(n, edges);
}

Graph random_rooted_dag(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(rng.below(v));
    edges.emplace_back(parent, v);
    for (VertexId u = 0; u < v; ++u) {
      if (u != parent && rng.chance(density)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, n > 0 ? std::optional<VertexId>(0) : std::nullopt);
}

void for_each_undirected_graph(std::size_t n, std::optional<VertexId> root,
                               const std::function<void(const Graph&)>& fn) {
  const auto pairs = unordered_pairs(n);
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        edges.emplace_back(pairs[i].first, pairs[i].second);
        edges.emplace_back(pairs[i].second, pairs[i].first);
      }
    }
    fn(Graph(n, edges, root));
  }
}

void for_each_digraph(std::size_t n, std::optional<VertexId> root,
                      const std::function<void(const Graph&)>& fn) {
  const auto pairs = unordered_pairs(n);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) count *= 4;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Edge> edges;
    std::uint64_t rest = code;
    for (const auto& [a, b] : pairs) {
      const auto digit = rest % 4;
      rest /= 4;
      if (digit & 1U) edges.emplace_back(a, b);
      if (digit & 2U) edges.emplace_back(b, a);
    }
    fn(Graph(n, edges, root));
  }
}

}  // namespace maxsub
