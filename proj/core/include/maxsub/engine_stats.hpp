#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

namespace maxsub {

/// Counters collected by the enumeration engines.
///
/// `outer_iterations` counts the vertex loop of the pool engines and the
/// main stack loop of the stack engine. `restricted_calls` counts calls to
/// the restricted solver and `max_candidate_pool` the largest candidate
/// collection held at once (pool, or both stacks together).
struct EngineStats {
  std::size_t outer_iterations = 0;
  std::size_t restricted_calls = 0;
  std::size_t max_candidate_pool = 0;
  std::size_t emissions = 0;
  std::chrono::nanoseconds elapsed{0};

  /// Stack engine only. For every graph reaching the finished stack, the
  /// number of main-loop iterations since the previous arrival in the same
  /// per-vertex run (or since that run started).
  std::vector<std::size_t> completion_gaps;
  /// Stack engine only. For every solution handed to the consumer, the
  /// number of main-loop iterations since the previous one across the
  /// whole session (or since the session started).
  std::vector<std::size_t> emission_gaps;

  std::size_t max_completion_gap() const;
  std::size_t max_emission_gap() const;
};

}  // namespace maxsub
