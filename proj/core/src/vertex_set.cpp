#include "maxsub/vertex_set.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe_size)
    : universe_(universe_size), words_(word_count(universe_size), 0) {}

VertexSet::VertexSet(std::size_t universe_size,
                     std::initializer_list<VertexId> members)
    : VertexSet(universe_size) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe_size) {
  VertexSet s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe_size % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe_size,
                                  const std::vector<VertexId>& members) {
  VertexSet s(universe_size);
  for (VertexId v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) {
    throw ContractError("vertex " + std::to_string(v) +
                        " outside universe of size " +
                        std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::optional<VertexId> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<VertexId>(w * 64 + static_cast<std::size_t>(
                                                std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::optional<VertexId> VertexSet::next_after(VertexId v) const {
  std::size_t start = static_cast<std::size_t>(v) + 1;
  if (start >= universe_) return std::nullopt;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) {
      return static_cast<VertexId>(w * 64 +
                                   static_cast<std::size_t>(std::countr_zero(bits)));
    }
    if (++w >= words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw ContractError("vertex sets over different universes (" +
                        std::to_string(universe_) + " vs " +
                        std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::with(VertexId v) const {
  VertexSet s = *this;
  s.insert(v);
  return s;
}

VertexSet VertexSet::without(VertexId v) const {
  VertexSet s = *this;
  s.erase(v);
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  bool first_member = true;
  for_each([&](VertexId v) {
    if (!first_member) os << ' ';
    os << v;
    first_member = false;
  });
  return os.str();
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  auto x = a.first();
  auto y = b.first();
  while (x && y) {
    if (*x != *y) return *x <=> *y;
    x = a.next_after(*x);
    y = b.next_after(*y);
  }
  if (x) return std::strong_ordering::greater;
  if (y) return std::strong_ordering::less;
  return a.universe_size() <=> b.universe_size();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << '{' << s.to_string() << '}';
}

}  // namespace maxsub
