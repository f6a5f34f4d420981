#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace maxsub {

using VertexId = std::uint32_t;

/// Ordered set of vertex ids over a fixed universe [0, universe_size).
///
/// Stored as a bit vector, so union, intersection, difference and subset
/// tests cost one operation per 64-bit word. Iteration is always in
/// ascending id order, which is the canonical order used for output and
/// tie-breaking throughout the library.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size);
  VertexSet(std::size_t universe_size, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe_size);
  static VertexSet from_members(std::size_t universe_size,
                                const std::vector<VertexId>& members);

  std::size_t universe_size() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  /// Smallest member, if any.
  std::optional<VertexId> first() const;
  /// Smallest member strictly greater than `v`, if any.
  std::optional<VertexId> next_after(VertexId v) const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(VertexId v) const;
  VertexSet without(VertexId v) const;

  std::vector<VertexId> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  /// Space-separated ascending ids, e.g. "0 2 5".
  std::string to_string() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic order of the ascending member sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

 private:
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace maxsub
