#include <doctest.h>

#include <vector>

#include "lfht/model/state.hpp"

using namespace lfht;

namespace {

ModelConfig small_config(std::uint32_t P, const std::vector<std::string>& scripts,
                         Mixer mixer = identity_mix) {
  ModelConfig cfg;
  cfg.P = P;
  cfg.initial_size = 8;
  cfg.initial_bound = 3;
  cfg.mixer = mixer;
  for (const auto& text : scripts) cfg.scripts.push_back(parse_script(text));
  return cfg;
}

void expect_labels(ModelState& s, std::uint32_t p, const std::vector<int>& labels) {
  for (int l : labels) {
    REQUIRE(enabled(s, p));
    CHECK(step(s, p) == l);
  }
}

void run_to_done(ModelState& s, std::uint32_t p, std::uint64_t max_steps = 100000) {
  while (!script_done(s, p)) {
    REQUIRE(max_steps-- > 0);
    step(s, p);
  }
}

void run_until_pc(ModelState& s, std::uint32_t p, int pc, std::uint64_t max_steps = 100000) {
  while (s.at(p).pc != pc) {
    REQUIRE(max_steps-- > 0);
    step(s, p);
  }
}

} // namespace

TEST_CASE("fresh model: one table, registry slot 1 holds the baseline units") {
  ModelState s = model_init(small_config(2, {}));
  CHECK(s.curr_ind == 1);
  CHECK(s.slots() == 4);
  CHECK(s.H[1] == 1);
  CHECK(s.H[2] == 0);
  CHECK(s.H[3] == 0);
  CHECK(s.H[4] == 0);
  CHECK(s.busy[1] == 1);
  CHECK(s.prot[1] == 1);
  for (std::uint32_t i = 2; i <= 4; ++i) {
    CHECK(s.busy[i] == 0);
    CHECK(s.prot[i] == 0);
    CHECK(s.next[i] == 0);
  }
  CHECK(s.heap.live_count() == 1);
  CHECK(s.heap.next_id() == 2);
  const Hashtable& t = s.heap.at(1);
  CHECK(t.size == 8);
  CHECK(t.bound == 3);
  CHECK(t.occ == 0);
  CHECK(s.Y.size() == 8);
  CHECK(s.X.size() == 0);
  for (std::uint32_t p = 1; p <= 2; ++p) {
    CHECK(s.at(p).pc == 0);
    CHECK(script_done(s, p));
    CHECK(enabled(s, p));
  }
}

TEST_CASE("single insert executes the expected statement sequence") {
  ModelState s = model_init(small_config(1, {"i:5"}));
  expect_labels(s, 1, {0, 59, 60, 61, 62, 63, 1, 27, 28, 31, 32, 33, 35, 41, 42,
                       1, 67, 68, 69, 72});
  CHECK(s.at(1).pc == 0);
  CHECK(script_done(s, 1));

  Value v = make_value(5, 5);
  CHECK(s.X.get(5) == v);
  CHECK(s.heap.at(1).table[5] == to_evalue(v));
  CHECK(s.Y[5] == to_evalue(v));
  CHECK(s.heap.at(1).occ == 1);
  CHECK(s.busy[1] == 1);
  CHECK(s.prot[1] == 1);
  REQUIRE(s.completed.size() == 1);
  CHECK(s.completed[0].process == 1);
  CHECK(s.completed[0].item.kind == OpKind::Insert);
  CHECK(s.completed[0].suc);
  CHECK(s.at(1).stats.ops_done == 1);
  CHECK(s.at(1).cnt_ins == 1);
}

TEST_CASE("insert on an occupied address fails at the matching read") {
  ModelState s = model_init(small_config(1, {"i:7:1 i:7:2"}));
  run_to_done(s, 1);
  REQUIRE(s.completed.size() == 2);
  CHECK(s.completed[0].suc);
  CHECK_FALSE(s.completed[1].suc);
  CHECK(s.X.get(7) == make_value(7, 1));
  CHECK(s.heap.at(1).occ == 1);
}

TEST_CASE("assign overwrites and claims occupancy only once") {
  ModelState s = model_init(small_config(1, {"a:6:1 a:6:2 d:6 f:6"}));
  run_to_done(s, 1);
  REQUIRE(s.completed.size() == 4);
  CHECK(s.X.get(6) == kNull);
  CHECK(s.heap.at(1).occ == 1);
  CHECK(s.heap.at(1).dels == 1);
  CHECK(s.completed[2].suc);
  CHECK(is_null(s.completed[3].found));
}

TEST_CASE("probes walk past del markers and foreign addresses") {
  ModelState s = model_init(small_config(1, {"i:5:9 i:13:7 d:5 f:13 f:5"}));
  run_to_done(s, 1);
  REQUIRE(s.completed.size() == 5);
  // address 13 collided with 5's home slot and settled one step later
  CHECK(s.heap.at(1).table[5] == kDel);
  CHECK(s.heap.at(1).table[6] == to_evalue(make_value(13, 7)));
  CHECK(s.completed[3].found == make_value(13, 7));
  CHECK(is_null(s.completed[4].found));
  CHECK(s.X.get(5) == kNull);
  CHECK(s.X.get(13) == make_value(13, 7));
}

TEST_CASE("overflowing the bound replaces the table and drains it") {
  ModelState s = model_init(small_config(1, {"i:1 i:2 i:3 i:4 i:5 f:1 f:2 f:3 f:4 f:5"},
                                         mix64));
  run_to_done(s, 1);

  CHECK(s.curr_ind == 2);
  CHECK(s.H[1] == 0);
  CHECK(s.busy[1] == 0);
  CHECK(s.prot[1] == 0);
  CHECK(s.next[1] == 2);
  CHECK(s.busy[2] == 1);
  CHECK(s.prot[2] == 1);
  CHECK(s.next[2] == 0);
  CHECK(s.heap.live_count() == 1);
  CHECK(s.heap.next_id() == 3);

  const Hashtable& t = s.heap.at(s.H[2]);
  CHECK(t.size == 16);
  CHECK(t.bound == 7);
  CHECK(t.occ == 5);
  CHECK(t.dels == 0);
  REQUIRE(s.Y.size() == 16);
  for (std::size_t k = 0; k < 16; ++k) CHECK(s.Y[k] == t.table[k]);

  const ProcStats& st = s.at(1).stats;
  CHECK(st.ops_done == 10);
  CHECK(st.tas78_wins == 1);
  CHECK(st.cas84_wins == 1);
  CHECK(st.cas103_wins == 1);
  CHECK(st.cas70_wins == 1);
  CHECK(st.deallocs == 1);
  CHECK(st.move_calls == 4);
  CHECK(st.cas123_wins == 4);
  CHECK(st.tag114_value == 4);
  CHECK(st.removals112 == 0);

  REQUIRE(s.completed.size() == 10);
  for (int i = 0; i < 5; ++i) CHECK(s.completed[i].suc);
  for (int i = 5; i < 10; ++i)
    CHECK(s.completed[i].found == make_value(static_cast<Address>(i - 4),
                                             static_cast<Payload>(i - 4)));
  for (Address a = 1; a <= 5; ++a) CHECK(s.X.get(a) == make_value(a, a));
}

TEST_CASE("del markers are dropped by migration, values survive") {
  ModelState s = model_init(small_config(1, {"i:1 i:2 d:1 i:3 i:4 i:5 i:6"}));
  run_to_done(s, 1);

  CHECK(s.curr_ind == 2);
  const Hashtable& t = s.heap.at(s.H[2]);
  CHECK(t.size == 8);
  CHECK(t.bound == 5);
  CHECK(t.occ == 5);
  CHECK(t.dels == 0);

  const ProcStats& st = s.at(1).stats;
  CHECK(st.move_calls == 3);
  CHECK(st.cas123_wins == 3);
  CHECK(st.tag114_value == 3);

  CHECK(s.X.get(1) == kNull);
  for (Address a = 2; a <= 6; ++a) CHECK(s.X.get(a) == make_value(a, a));
  for (EValue e : t.table) CHECK_FALSE(e == kDel);
}

TEST_CASE("the last process out of a retired slot frees its table") {
  ModelState s = model_init(small_config(2, {"i:1 i:2 i:3 i:4 i:5", "f:1"}));
  // second process takes a claim on the first table and parks
  expect_labels(s, 2, {0, 59, 60, 61, 62, 63});
  CHECK(s.at(2).pc == 1);
  CHECK(s.busy[1] == 2);

  // first process runs its whole script, migrating along the way; the first
  // table survives because the parked process still holds it
  run_to_done(s, 1);
  CHECK(s.curr_ind == 2);
  CHECK(s.heap.live_count() == 2);
  CHECK(s.H[1] == 1);
  CHECK(s.at(1).stats.deallocs == 0);
  CHECK(s.busy[1] == 1);

  // the parked process reads through the retired table, then frees it
  run_to_done(s, 2);
  REQUIRE(s.completed.size() == 6);
  CHECK(s.completed[5].process == 2);
  CHECK(s.completed[5].found == make_value(1, 1));
  CHECK(s.at(2).stats.cas70_wins == 1);
  CHECK(s.at(2).stats.deallocs == 1);
  CHECK(s.heap.live_count() == 1);
  CHECK(s.H[1] == 0);
  CHECK(s.busy[1] == 0);
  CHECK(s.prot[1] == 0);
}

TEST_CASE("a stale current-table read backs off and retries") {
  ModelState s = model_init(small_config(2, {"i:1 i:2 i:3 i:4 i:5", "f:1"}));
  expect_labels(s, 2, {0, 59});
  CHECK(s.at(2).index == 1);

  run_to_done(s, 1);
  CHECK(s.curr_ind == 2);
  CHECK(s.H[1] == 0);

  expect_labels(s, 2, {60, 61, 65, 59, 60, 61, 62, 63});
  CHECK(s.at(2).pc == 1);
  CHECK(s.at(2).index == 2);
  CHECK(s.prot[1] == 0);
}

TEST_CASE("claiming a protected slot fails and the scan moves on") {
  ModelState s = model_init(small_config(2, {"i:1 i:2 i:3 i:4 i:5"}));
  s.forced_slots[0].push_back(1); // slot 1 is the current slot, still protected
  run_until_pc(s, 1, 78);
  expect_labels(s, 1, {78, 77, 78});
  CHECK(s.at(1).scan_offset == 1);
  CHECK(s.at(1).i_nT == 3);
  CHECK(s.at(1).stats.tas78_wins == 1);
  CHECK(s.prot[3] == 1);
  run_to_done(s, 1);
  CHECK(s.curr_ind == 3);
}

TEST_CASE("corrupted states disable statements instead of crashing") {
  ModelState s = model_init(small_config(1, {"f:1"}));
  std::string why;

  ModelState bad = s;
  bad.at(1).pc = 68;
  bad.at(1).i_rA = 2;
  CHECK_FALSE(enabled(bad, 1, &why));
  CHECK(why == "busy underflow");
  CHECK_THROWS_AS(step(bad, 1), ProtocolViolation);

  bad = s;
  bad.at(1).pc = 6;
  bad.at(1).h_fi = 77;
  CHECK_FALSE(enabled(bad, 1, &why));
  CHECK(why == "find table gone");

  bad = s;
  bad.at(1).pc = 7;
  bad.at(1).h_fi = 1;
  bad.at(1).l_fi = 4; // stale probe length
  CHECK_FALSE(enabled(bad, 1, &why));

  bad = s;
  bad.at(1).pc = 3; // not a statement label
  CHECK_FALSE(enabled(bad, 1, &why));
  CHECK_THROWS_AS(step(bad, 1), ProtocolViolation);
}

TEST_CASE("state serialization tracks behaviour, not history") {
  ModelState a = model_init(small_config(2, {"i:1", "f:1"}));
  ModelState b = model_init(small_config(2, {"i:1", "f:1"}));
  CHECK(serialize(a) == serialize(b));
  CHECK(state_hash(a) == state_hash(b));

  step(a, 1);
  CHECK(serialize(a) != serialize(b));
  step(b, 1);
  CHECK(serialize(a) == serialize(b));

  run_to_done(a, 1);
  run_to_done(a, 2);
  run_to_done(b, 1);
  run_to_done(b, 2);
  CHECK(serialize(a) == serialize(b));

  // completed-op history is observational, not part of the state image
  ModelState c = a;
  c.completed.clear();
  CHECK(serialize(c) == serialize(a));

  // script position is part of it
  ModelState d = a;
  d.at(1).script_pos = 0;
  CHECK(serialize(d) != serialize(a));
}

TEST_CASE("sequential run agrees with the plain map on every outcome") {
  ModelConfig cfg;
  cfg.P = 1;
  cfg.initial_size = 8;
  cfg.scripts.push_back(random_script(99, 2000, MixWeights{}, 1, 48));
  ModelState s = model_init(cfg);
  run_to_done(s, 1, 2000000);

  ReferenceMap m;
  for (const CompletedOp& op : s.completed) {
    switch (op.item.kind) {
      case OpKind::Find: CHECK(op.found == m.find(op.item.addr)); break;
      case OpKind::Erase: CHECK(op.suc == m.erase(op.item.addr)); break;
      case OpKind::Insert: CHECK(op.suc == m.insert(op.item.value)); break;
      case OpKind::Assign: m.assign(op.item.value); break;
      case OpKind::Release: break;
    }
  }
  CHECK(m.state() == s.X);
}

TEST_CASE("round-robin interleaving stays enabled and completes") {
  ModelConfig cfg;
  cfg.P = 4;
  cfg.initial_size = 16;
  for (std::uint32_t p = 1; p <= 4; ++p)
    cfg.scripts.push_back(random_script(1000 + p, 300, MixWeights{}, 1, 16));
  ModelState s = model_init(cfg);

  std::uint64_t guard = 4000000;
  bool all_done = false;
  while (!all_done) {
    REQUIRE(guard-- > 0);
    all_done = true;
    for (std::uint32_t p = 1; p <= 4; ++p) {
      if (script_done(s, p)) continue;
      all_done = false;
      std::string why;
      REQUIRE_MESSAGE(enabled(s, p, &why), why);
      step(s, p);
    }
  }
  std::size_t recording = 0; // release items run but record nothing
  for (const Script& sc : s.scripts)
    for (const WorkItem& w : sc)
      if (w.kind != OpKind::Release) recording++;
  CHECK(s.completed.size() == recording);
  CHECK(s.heap.live_count() >= 1);
  CHECK(s.heap.live_count() <= 8);
}
