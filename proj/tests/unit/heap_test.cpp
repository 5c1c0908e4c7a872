#include <doctest.h>

#include "lfht/heap.hpp"

using namespace lfht;

TEST_CASE("identifiers start at one and are never reused") {
  HeapModel heap;
  TableId a = heap.allocate(16, 4, 2);
  TableId b = heap.allocate(16, 4, 2);
  CHECK(a == 1);
  CHECK(b == 2);
  heap.deallocate(a);
  TableId c = heap.allocate(16, 4, 2);
  CHECK(c == 3);
  CHECK_FALSE(heap.contains(a));
  CHECK(heap.contains(b));
  CHECK(heap.live_count() == 2);
  CHECK(heap.next_id() == 4);
}

TEST_CASE("fresh tables are blank with the requested shape") {
  HeapModel heap;
  TableId a = heap.allocate(8, 3, 2);
  const Hashtable& t = heap.at(a);
  CHECK(t.size == 8);
  CHECK(t.bound == 3);
  CHECK(t.occ == 0);
  CHECK(t.dels == 0);
  REQUIRE(t.table.size() == 8);
  for (EValue e : t.table) CHECK(e == kENull);
}

TEST_CASE("shape constraints are enforced at allocation") {
  HeapModel heap;
  CHECK_THROWS_AS(heap.allocate(8, 4, 2), std::invalid_argument);  // 4 + 4 == 8
  CHECK_THROWS_AS(heap.allocate(2, 0, 4), std::invalid_argument);  // size < P
  CHECK_NOTHROW(heap.allocate(9, 4, 2));
}

TEST_CASE("stale identifiers are detected, not recycled") {
  HeapModel heap;
  TableId a = heap.allocate(16, 4, 2);
  heap.deallocate(a);
  CHECK_THROWS_AS(heap.deallocate(a), ProtocolViolation);
  CHECK_THROWS_AS(heap.at(a), ProtocolViolation);
}
