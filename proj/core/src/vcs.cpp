#include "maxsub/vcs.hpp"

#include <algorithm>
#include <chrono>

#include "maxsub/errors.hpp"

namespace maxsub {

bool SolutionSink::offer(const VertexSet& s) {
  if (exhausted() || seen_.count(s) != 0) return false;
  seen_.insert(s);
  ++delivered_;
  last_gap_ = ticks_ - last_delivery_tick_;
  last_delivery_tick_ = ticks_;
  if (on_solution_) on_solution_(s);
  return true;
}

std::size_t VcsStacks::pending_count() const {
  return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

bool push_appropriate(const Property& p, StackEntry entry, const Graph& g,
                      VcsStacks& stacks, SolutionSink* sink) {
  const InducedSubgraph h(g, entry.vertices);
  if (!(neighbors(p.cls, h) - entry.barred).empty()) {
    stacks.pending.push_back(std::move(entry));
    stacks.alive.push_back(true);
    return false;
  }
  stacks.finished.push_back(entry.vertices);
  if (sink) sink->offer(entry.vertices);
  return true;
}

namespace {

class VcsRun {
 public:
  VcsRun(const Property& p, const Graph& g, VertexId required,
         SolutionSink& sink, EngineStats& stats, const VcsObserver& observer)
      : p_(p), g_(g), required_(required), sink_(sink), stats_(stats),
        observer_(observer) {}

  SolutionSet run() {
    push(StackEntry{VertexSet(g_.size(), {required_}), g_.empty_set()});
    while (!stop_ && pop_pending()) {
      if (observer_) observer_(stacks_);
      ++stats_.outer_iterations;
      ++iterations_;
      sink_.tick();
      step();
    }
    SolutionSet result;
    for (const auto& s : stacks_.finished) result.insert(s);
    return result;
  }

 private:
  // Pops the top live pending entry into current_. False if none is left.
  bool pop_pending() {
    while (!stacks_.pending.empty()) {
      const bool live = stacks_.alive.back();
      StackEntry top = std::move(stacks_.pending.back());
      stacks_.pending.pop_back();
      stacks_.alive.pop_back();
      if (live) {
        current_ = std::move(top);
        return true;
      }
    }
    return false;
  }

  void push(StackEntry entry) {
    if (stop_) return;
    const std::size_t delivered_before = sink_.delivered();
    if (push_appropriate(p_, std::move(entry), g_, stacks_, &sink_)) {
      stats_.completion_gaps.push_back(iterations_ - last_completion_);
      last_completion_ = iterations_;
      if (sink_.delivered() != delivered_before) {
        stats_.emission_gaps.push_back(sink_.last_gap());
      }
      if (sink_.exhausted()) stop_ = true;
    }
    stats_.max_candidate_pool =
        std::max(stats_.max_candidate_pool,
                 stacks_.pending_count() + stacks_.finished.size());
  }

  void step() {
    StackEntry h = std::move(current_);
    const InducedSubgraph hg(g_, h.vertices);
    const VertexId v = *(neighbors(p_.cls, hg) - h.barred).first();
    const VertexSet grown = h.vertices.with(v);

    if (sat(p_, InducedSubgraph(g_, grown))) {
      push(StackEntry{grown, g_.empty_set()});
      return;
    }

    h.barred.insert(v);
    ++stats_.restricted_calls;
    const SolutionSet found =
        restricted_with_vertex(p_, InducedSubgraph(g_, grown), required_);
    for (const VertexSet& part : found) {
      if (stop_) return;
      if (part == h.vertices) continue;
      bool inserted = false;
      // Merge into live pending entries present before this part; entries
      // pushed by the merges themselves are not revisited.
      const std::size_t snapshot = stacks_.pending.size();
      for (std::size_t i = 0; i < snapshot && !stop_; ++i) {
        if (!stacks_.alive[i]) continue;
        VertexSet merged = part | stacks_.pending[i].vertices;
        if (!sat(p_, InducedSubgraph(g_, merged))) continue;
        stacks_.alive[i] = false;
        push(StackEntry{std::move(merged), g_.empty_set()});
        inserted = true;
      }
      if (!inserted) {
        inserted = std::any_of(
            stacks_.finished.begin(), stacks_.finished.end(),
            [&](const VertexSet& done) { return part.is_subset_of(done); });
      }
      if (!inserted) push(StackEntry{part, g_.empty_set()});
    }
    push(std::move(h));
  }

  const Property& p_;
  const Graph& g_;
  VertexId required_;
  SolutionSink& sink_;
  EngineStats& stats_;
  const VcsObserver& observer_;

  VcsStacks stacks_;
  StackEntry current_;
  std::size_t iterations_ = 0;
  std::size_t last_completion_ = 0;
  bool stop_ = false;
};

SolutionSet run_stack_search(const Property& p, const Graph& g,
                             VertexId required, SolutionSink& sink,
                             EngineStats& stats, const VcsObserver& observer) {
  if (required >= g.size()) {
    throw ContractError("vertex " + std::to_string(required) + " out of range");
  }
  if (!sat(p, induced(g, VertexSet(g.size(), {required})))) {
    throw ContractError("the single vertex " + std::to_string(required) +
                        " does not satisfy property '" + p.name + "'");
  }
  return VcsRun(p, g, required, sink, stats, observer).run();
}

void require_non_hereditary(const Property& p) {
  if (p.cls == PropertyClass::kHereditary) {
    throw ContractError("property '" + p.name +
                        "' is hereditary; the stack engine needs a connected- "
                        "or rooted-hereditary property");
  }
}

struct Timed {
  EngineStats& stats;
  std::size_t delivered_before;
  const SolutionSink& sink;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timed() {
    stats.elapsed += std::chrono::steady_clock::now() - start;
    stats.emissions += sink.delivered() - delivered_before;
  }
};

// Runs the search from every vertex whose singleton satisfies P.
SolutionSet run_every_vertex(const Property& p, const Graph& g,
                             SolutionSink& sink, EngineStats& stats) {
  SolutionSet all;
  for (VertexId v = 0; v < g.size() && !sink.exhausted(); ++v) {
    if (!sat(p, induced(g, VertexSet(g.size(), {v})))) continue;
    for (const auto& s : run_stack_search(p, g, v, sink, stats, {})) {
      all.insert(s);
    }
  }
  return all;
}

}  // namespace

SolutionSet gen_with_vertex(const Property& p, const Graph& g,
                            VertexId required, SolutionSink& sink,
                            EngineStats* stats, const VcsObserver& observer) {
  require_non_hereditary(p);
  EngineStats local;
  EngineStats& st = stats ? *stats : local;
  Timed timer{st, sink.delivered(), sink};
  return run_stack_search(p, g, required, sink, st, observer);
}

SolutionSet gen_with_vertex(const Property& p, const Graph& g,
                            VertexId required, EngineStats* stats) {
  SolutionSink sink;
  return gen_with_vertex(p, g, required, sink, stats);
}

SolutionSet gen_all_connected(const Property& p, const Graph& g,
                              SolutionSink& sink, EngineStats* stats) {
  if (p.cls != PropertyClass::kConnectedHereditary) {
    throw ContractError("property '" + p.name +
                        "' is not connected-hereditary");
  }
  EngineStats local;
  EngineStats& st = stats ? *stats : local;
  Timed timer{st, sink.delivered(), sink};
  return run_every_vertex(p, g, sink, st);
}

SolutionSet gen_all_rooted(const Property& p, const Graph& g,
                           SolutionSink& sink, EngineStats* stats) {
  if (p.cls != PropertyClass::kRootedHereditary) {
    throw ContractError("property '" + p.name + "' is not rooted-hereditary");
  }
  EngineStats local;
  EngineStats& st = stats ? *stats : local;
  Timed timer{st, sink.delivered(), sink};
  const auto root = g.root();
  if (!root || !sat(p, induced(g, VertexSet(g.size(), {*root})))) return {};
  return run_stack_search(p, g, *root, sink, st, {});
}

SolutionSet enumerate_incremental(const Property& p, const Graph& g,
                                  SolutionSink& sink, EngineStats* stats) {
  switch (p.cls) {
    case PropertyClass::kConnectedHereditary:
      return gen_all_connected(p, g, sink, stats);
    case PropertyClass::kRootedHereditary:
      return gen_all_rooted(p, g, sink, stats);
    case PropertyClass::kHereditary:
      break;
  }
  EngineStats local;
  EngineStats& st = stats ? *stats : local;
  Timed timer{st, sink.delivered(), sink};
  SolutionSet all = run_every_vertex(p, g, sink, st);
  // No vertex satisfies P on its own: the empty graph is the only solution.
  if (all.empty() && !sink.exhausted() && sat(p, induced(g, g.empty_set()))) {
    sink.offer(g.empty_set());
    all.insert(g.empty_set());
  }
  return all;
}

}  // namespace maxsub
