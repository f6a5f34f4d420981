#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "maxsub/engine_stats.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/property.hpp"

namespace maxsub {

/// A candidate on one of the two stacks: a P-subgraph containing the
/// required vertex, and the neighbours already known not to extend it.
struct StackEntry {
  VertexSet vertices;
  VertexSet barred;
};

/// Receives solutions as they are completed. Deduplicates across every run
/// that shares it, and reports when an optional emission limit is reached.
class SolutionSink {
 public:
  using Callback = std::function<void(const VertexSet&)>;

  SolutionSink() = default;
  explicit SolutionSink(Callback on_solution,
                        std::optional<std::size_t> limit = std::nullopt)
      : on_solution_(std::move(on_solution)), limit_(limit) {}

  /// Delivers `s` unless it was seen before or the limit is reached.
  /// Returns true if it was delivered.
  bool offer(const VertexSet& s);

  bool exhausted() const { return limit_ && delivered_ >= *limit_; }
  std::size_t delivered() const { return delivered_; }
  std::optional<std::size_t> limit() const { return limit_; }

  /// Main-loop iterations run so far by every engine sharing this sink.
  std::size_t ticks() const { return ticks_; }
  void tick() { ++ticks_; }
  /// Ticks between the last two deliveries (or session start and the first).
  std::size_t last_gap() const { return last_gap_; }

 private:
  Callback on_solution_;
  std::optional<std::size_t> limit_;
  std::unordered_set<VertexSet, VertexSetHash> seen_;
  std::size_t delivered_ = 0;
  std::size_t ticks_ = 0;
  std::size_t last_delivery_tick_ = 0;
  std::size_t last_gap_ = 0;
};

/// The two stacks of one run. Stack 1 holds unfinished candidates (some
/// neighbour not yet tried) and supports removal by marking entries dead.
/// Stack 2 holds finished ones.
struct VcsStacks {
  std::vector<StackEntry> pending;
  std::vector<bool> alive;
  std::vector<VertexSet> finished;

  std::size_t pending_count() const;
};

/// Places `entry` on the pending stack if it has an unbarred neighbour and
/// on the finished stack otherwise. A finished entry is offered to `sink`
/// before this returns. Returns true if the entry went to the finished
/// stack.
bool push_appropriate(const Property& p, StackEntry entry, const Graph& g,
                      VcsStacks& stacks, SolutionSink* sink = nullptr);

/// Maximal P-subgraphs of G containing `required`, for a connected- or
/// rooted-hereditary P, by the two-stack extension search.
///
/// Every loop iteration pops a pending candidate H and tries its smallest
/// unbarred neighbour v. If G[H ∪ {v}] satisfies P it replaces H. Otherwise
/// v is barred for H, and each maximal P-subgraph G' of G[H ∪ {v}] through
/// `required` (other than H) is merged into compatible pending candidates,
/// dropped if a finished candidate contains it, or pushed; then H returns.
///
/// Finished candidates go to `sink` as they appear. The run stops early
/// once the sink's limit is reached. Requires G[{required}] to satisfy P.
///
/// `observer`, when set, sees the stacks at every loop head.
using VcsObserver = std::function<void(const VcsStacks&)>;
SolutionSet gen_with_vertex(const Property& p, const Graph& g,
                            VertexId required, SolutionSink& sink,
                            EngineStats* stats = nullptr,
                            const VcsObserver& observer = {});
SolutionSet gen_with_vertex(const Property& p, const Graph& g,
                            VertexId required, EngineStats* stats = nullptr);

/// All maximal P-subgraphs for connected-hereditary P: one run per vertex
/// v with G[{v}] in P, ascending, sharing the sink's duplicate filter.
SolutionSet gen_all_connected(const Property& p, const Graph& g,
                              SolutionSink& sink, EngineStats* stats = nullptr);

/// All maximal P-subgraphs for rooted-hereditary P: a single run from the
/// root. Empty when G has no root or the root alone fails P.
SolutionSet gen_all_rooted(const Property& p, const Graph& g,
                           SolutionSink& sink, EngineStats* stats = nullptr);

/// Streams MaxSol_P(G) through `sink`, stopping once the sink's limit is
/// reached. Works for all three classes; hereditary properties run the
/// stack search from every vertex with all non-members treated as
/// neighbours.
SolutionSet enumerate_incremental(const Property& p, const Graph& g,
                                  SolutionSink& sink,
                                  EngineStats* stats = nullptr);

}  // namespace maxsub
