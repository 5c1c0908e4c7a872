#include <doctest.h>

#include <random>

#include "lfht/spec_oracle.hpp"

using namespace lfht;

TEST_CASE("empty map answers null everywhere") {
  AbstractMap x;
  CHECK(is_null(spec_find(x, 1)));
  CHECK(is_null(spec_find(x, 0xffffffffu)));
  CHECK(x.size() == 0);
}

TEST_CASE("insert succeeds on absent and fails on present") {
  AbstractMap x;
  Value v = make_value(3, 7);
  CHECK(spec_insert(x, v));
  CHECK(spec_find(x, 3) == v);
  CHECK_FALSE(spec_insert(x, make_value(3, 9)));
  CHECK(spec_find(x, 3) == v);
}

TEST_CASE("delete reports whether something was there") {
  AbstractMap x;
  CHECK_FALSE(spec_delete(x, 4));
  spec_insert(x, make_value(4, 1));
  CHECK(spec_delete(x, 4));
  CHECK(is_null(spec_find(x, 4)));
  CHECK_FALSE(spec_delete(x, 4));
}

TEST_CASE("assign overwrites unconditionally") {
  AbstractMap x;
  spec_assign(x, make_value(5, 1));
  spec_assign(x, make_value(5, 2));
  CHECK(spec_find(x, 5) == make_value(5, 2));
  CHECK(x.size() == 1);
}

TEST_CASE("reference map replays the same outcomes as the raw actions") {
  std::mt19937_64 rng(20260815);
  std::uniform_int_distribution<Address> addr(1, 32);
  std::uniform_int_distribution<Payload> pay(1, 9);
  std::uniform_int_distribution<int> op(0, 3);

  AbstractMap x;
  ReferenceMap m;
  for (int i = 0; i < 20000; ++i) {
    Address a = addr(rng);
    switch (op(rng)) {
      case 0: CHECK(m.find(a) == spec_find(x, a)); break;
      case 1: CHECK(m.erase(a) == spec_delete(x, a)); break;
      case 2: {
        Value v = make_value(a, pay(rng));
        CHECK(m.insert(v) == spec_insert(x, v));
        break;
      }
      default: {
        Value v = make_value(a, pay(rng));
        m.assign(v);
        spec_assign(x, v);
        break;
      }
    }
  }
  CHECK(m.state() == x);
}
