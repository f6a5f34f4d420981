#include <set>

#include "doctest.h"
#include "maxsub/errors.hpp"
#include "maxsub/vertex_set.hpp"

using maxsub::VertexSet;

TEST_SUITE("vertex_set") {

TEST_CASE("members are ascending") {
  VertexSet s(70, {65, 3, 0, 64, 3});
  CHECK(s.size() == 4);
  CHECK(s.members() == std::vector<maxsub::VertexId>{0, 3, 64, 65});
  CHECK(s.to_string() == "0 3 64 65");
  CHECK(*s.first() == 0);
  CHECK(*s.next_after(3) == 64);
  CHECK_FALSE(s.next_after(65).has_value());
}

TEST_CASE("set algebra") {
  VertexSet a(8, {0, 1, 2});
  VertexSet b(8, {2, 3});
  CHECK((a | b) == VertexSet(8, {0, 1, 2, 3}));
  CHECK((a & b) == VertexSet(8, {2}));
  CHECK((a - b) == VertexSet(8, {0, 1}));
  CHECK(VertexSet(8, {1}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.with(5).contains(5));
  CHECK_FALSE(a.without(0).contains(0));
  CHECK(VertexSet(8).empty());
  CHECK(VertexSet::full(8).size() == 8);
}

TEST_CASE("out of range insert is rejected") {
  VertexSet s(4);
  CHECK_THROWS_AS(s.insert(4), maxsub::ContractError);
}

TEST_CASE("ordering is lexicographic on member sequences") {
  CHECK(VertexSet(5, {0, 1}) < VertexSet(5, {0, 2}));
  CHECK(VertexSet(5, {0, 1}) < VertexSet(5, {0, 1, 2}));
  CHECK(VertexSet(5, {0, 4}) < VertexSet(5, {1}));
  CHECK(VertexSet(5) < VertexSet(5, {0}));
}

TEST_CASE("hash separates all subsets of a small universe") {
  std::set<std::size_t> hashes;
  for (unsigned mask = 0; mask < 256; ++mask) {
    VertexSet s(8);
    for (unsigned v = 0; v < 8; ++v) if ((mask >> v) & 1U) s.insert(v);
    hashes.insert(s.hash());
  }
  CHECK(hashes.size() == 256);
}

}
