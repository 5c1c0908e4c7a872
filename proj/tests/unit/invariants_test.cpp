#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lfht/invariants.hpp"
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

bool has(const std::vector<Violation>& v, const std::string& id) {
  for (const Violation& x : v)
    if (x.id == id) return true;
  return false;
}

std::string brief(const std::vector<Violation>& v) {
  std::string out;
  for (const Violation& x : v) out += x.id + ": " + x.detail + "; ";
  return out;
}

void check_clean(const ModelState& s, const char* where) {
  auto v = check_invariants(s);
  CHECK_MESSAGE(v.empty(), where, " -> ", brief(v));
}

// Step p until its pc hits the target label, checking the catalogue after
// every statement.
void run_checked_until_pc(ModelState& s, std::uint32_t p, int pc,
                          std::uint64_t max_steps = 100000) {
  while (s.at(p).pc != pc) {
    REQUIRE(max_steps-- > 0);
    step(s, p);
    auto v = check_invariants(s);
    REQUIRE_MESSAGE(v.empty(), "after pc=", s.at(p).pc, " -> ", brief(v));
  }
}

void run_checked_to_done(ModelState& s, std::uint32_t p,
                         std::uint64_t max_steps = 100000) {
  while (!script_done(s, p)) {
    REQUIRE(max_steps-- > 0);
    step(s, p);
    auto v = check_invariants(s);
    REQUIRE_MESSAGE(v.empty(), "after pc=", s.at(p).pc, " -> ", brief(v));
  }
}

} // namespace

TEST_CASE("the catalogue registers every id exactly once") {
  const auto& ids = invariant_ids();
  CHECK(ids.size() == 221);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      REQUIRE(ids[i] != ids[j]);
  // retired ids stay registered and always pass
  ModelState s = model_init(small_config(2, {}));
  CHECK(check_invariants(s, {"Cu5", "Ne21"}).empty());
}

TEST_CASE("a fresh model satisfies the whole catalogue") {
  check_clean(model_init(small_config(2, {})), "init P=2");
  check_clean(model_init(small_config(1, {})), "init P=1");
  ModelConfig big;
  big.P = 4;
  big.initial_size = 16;
  check_clean(model_init(big), "init P=4");
}

TEST_CASE("helper set counts mirror the state") {
  ModelState s = model_init(small_config(2, {"i:5 d:5", ""}));
  SetCounts n = count_sets(s);
  CHECK(n.nb_set1 == s.heap.live_count());
  CHECK(n.nb_set2 == 1);
  CHECK(n.de_set1 == 0);
  CHECK(n.oc_set1 == 0);
  CHECK(n.oc_set4 == 0);
  REQUIRE(n.pr_set1.size() == 5);
  for (std::uint32_t i = 1; i <= 4; ++i) {
    CHECK(n.pr_set1[i] == 0);
    CHECK(n.pr_set2[i] == 0);
    // the counter identity: only the current slot holds baseline units
    CHECK(s.prot[i] == n.pr_set1[i] + n.pr_set2[i] + (s.curr_ind == i ? 1 : 0));
    CHECK(s.busy[i] == n.bu_set1[i] + n.bu_set2[i] + (s.curr_ind == i ? 1 : 0));
  }

  // park the insert just before it bumps occ: the claim is in ocSet3
  run_checked_until_pc(s, 1, 41);
  n = count_sets(s);
  CHECK(s.at(1).suc_ins);
  CHECK(n.oc_set3 == 1);
  CHECK(n.oc_set4 == 1);
  CHECK(n.oc_set1 == 1); // pc=41 lies in the insert window
  CHECK(n.bu_set1[1] == 1);

  // after the full script the marker sits in Y and occupancy is released
  run_checked_to_done(s, 1);
  n = count_sets(s);
  CHECK(n.de_set1 == 1);
  CHECK(n.oc_set3 == 0);
  CHECK(n.oc_set4 == 0);
}

TEST_CASE("every state of a migrating run satisfies the catalogue") {
  ModelState s = model_init(small_config(1, {"i:1 i:2 d:1 i:3 i:4 i:5 f:2 d:9"}));
  check_clean(s, "start");
  run_checked_to_done(s, 1);
  CHECK(s.curr_ind == 2);
  CHECK(s.at(1).stats.cas103_wins == 1);
}

TEST_CASE("every state of a growing run satisfies the catalogue") {
  ModelState s = model_init(
      small_config(1, {"i:1 i:2 i:3 i:4 i:5 i:6 i:7 i:8 i:9 i:10 f:7"}, mix64));
  run_checked_to_done(s, 1);
  CHECK(s.heap.at(s.H[s.curr_ind]).size == 16);
}

TEST_CASE("every state of a parked-reader migration satisfies the catalogue") {
  ModelState s = model_init(small_config(2, {"i:1 i:2 i:3 i:4 i:5", "f:1"}));
  // the reader grabs a claim on the first table and parks at the main loop
  run_checked_until_pc(s, 2, 1);
  // the writer migrates underneath it
  run_checked_to_done(s, 1);
  CHECK(s.curr_ind == 2);
  CHECK(s.heap.live_count() == 2);
  // the reader drains the retired slot and frees the old table
  run_checked_to_done(s, 2);
  CHECK(s.heap.live_count() == 1);
}

TEST_CASE("every state under a contended slot scan satisfies the catalogue") {
  ModelState s = model_init(small_config(2, {"i:1 i:2 i:3 i:4 i:5", "i:6 i:7"}));
  s.forced_slots[0] = {2, 3, 4};
  s.forced_slots[1] = {2, 3, 4};
  std::mt19937_64 rng(7);
  std::uint64_t guard = 1000000;
  while (!(script_done(s, 1) && script_done(s, 2))) {
    REQUIRE(guard-- > 0);
    std::uint32_t p = 1 + static_cast<std::uint32_t>(rng() % 2);
    if (script_done(s, p)) p = 3 - p;
    step(s, p);
    auto v = check_invariants(s);
    REQUIRE_MESSAGE(v.empty(), "after p=", p, " pc=", s.at(p).pc, " -> ", brief(v));
  }
}

TEST_CASE("every state across seeded random interleavings satisfies the catalogue") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    ModelConfig cfg;
    cfg.P = 2;
    cfg.initial_size = 8;
    cfg.initial_bound = 3;
    cfg.scripts.push_back(random_script(seed, 60, MixWeights{}, 1, 12));
    cfg.scripts.push_back(random_script(seed + 100, 60, MixWeights{}, 1, 12));
    ModelState s = model_init(cfg);
    std::mt19937_64 rng(seed);
    std::uint64_t guard = 1000000;
    while (!(script_done(s, 1) && script_done(s, 2))) {
      REQUIRE(guard-- > 0);
      std::uint32_t p = 1 + static_cast<std::uint32_t>(rng() % 2);
      if (script_done(s, p)) p = 3 - p;
      step(s, p);
      auto v = check_invariants(s);
      REQUIRE_MESSAGE(v.empty(), "seed=", seed, " after p=", p,
                      " pc=", s.at(p).pc, " -> ", brief(v));
    }
  }
}

TEST_CASE("subset evaluation filters and validates ids") {
  ModelState s = model_init(small_config(2, {}));
  CHECK(check_invariants(s, {"pr1", "bu1", "Cu7"}).empty());
  CHECK(check_invariants(s, {}).empty());
  CHECK_THROWS_AS(check_invariants(s, {"pr1", "zz9"}), std::invalid_argument);

  s.prot[2] += 1;
  auto v = check_invariants(s, {"pr1"});
  REQUIRE(v.size() == 1);
  CHECK(v[0].id == "pr1");
  CHECK(v[0].detail.find("prot[2]") != std::string::npos);
}

TEST_CASE("corrupted states are pinned to their ids") {
  const ModelState base = model_init(small_config(2, {}));

  SUBCASE("a table under identifier 0") {
    ModelState s = base;
    s.heap.inject(0, s.heap.at(1));
    CHECK(has(check_invariants(s), "He1"));
  }
  SUBCASE("registry slot pointing at a dead identifier") {
    ModelState s = base;
    s.H[2] = 77;
    auto v = check_invariants(s);
    CHECK(has(v, "He2"));
    CHECK(has(v, "Ha2")); // 77 was never handed out either
  }
  SUBCASE("current slot emptied while the table lives on") {
    ModelState s = base;
    s.H[2] = s.H[1];
    s.H[1] = 0;
    auto v = check_invariants(s);
    CHECK(has(v, "He3"));
    CHECK(has(v, "pr5")); // slot 2 holds a live table without protection
  }
  SUBCASE("undersized table") {
    ModelState s = base;
    Hashtable t;
    t.size = 1;
    t.bound = 0;
    t.table.assign(1, kENull);
    s.heap.inject(s.heap.next_id(), t);
    CHECK(has(check_invariants(s), "He5"));
  }
  SUBCASE("two registry slots sharing one table") {
    ModelState s = base;
    s.H[3] = s.H[1];
    CHECK(has(check_invariants(s), "Ha3"));
  }
  SUBCASE("losing the only table") {
    ModelState s = base;
    s.heap.deallocate(1);
    auto v = check_invariants(s);
    CHECK(has(v, "No2"));
    CHECK(has(v, "He3"));
  }
  SUBCASE("shadow edited without the table") {
    ModelState s = base;
    s.Y[5] = to_evalue(make_value(5, 1));
    auto v = check_invariants(s);
    CHECK(has(v, "Cu9"));
    CHECK(has(v, "Cu7"));
  }
  SUBCASE("table edited without the shadow") {
    ModelState s = base;
    s.heap.at(1).table[5] = to_evalue(make_value(5, 1));
    CHECK(has(check_invariants(s), "Cu9"));
  }
  SUBCASE("abstract map entry with no backing slot") {
    ModelState s = base;
    s.X.set(9, make_value(9, 1));
    auto v = check_invariants(s);
    CHECK(has(v, "Cu11"));
    CHECK(has(v, "Cu15"));
  }
  SUBCASE("one value stored in two slots") {
    ModelState s = base;
    Value v = make_value(5, 1);
    s.X.set(5, v);
    s.heap.at(1).table[5] = to_evalue(v);
    s.heap.at(1).table[6] = to_evalue(v);
    s.heap.at(1).occ = 2;
    s.Y[5] = to_evalue(v);
    s.Y[6] = to_evalue(v);
    CHECK(has(check_invariants(s), "Cu16"));
  }
  SUBCASE("abstract map entry under the wrong address") {
    ModelState s = base;
    s.X.set(4, make_value(5, 1));
    CHECK(has(check_invariants(s), "Ot2"));
  }
  SUBCASE("phantom prot unit") {
    ModelState s = base;
    s.prot[2] += 1;
    CHECK(has(check_invariants(s), "pr1"));
  }
  SUBCASE("phantom busy unit") {
    ModelState s = base;
    s.busy[2] += 1;
    CHECK(has(check_invariants(s), "bu1"));
  }
  SUBCASE("live table in an unprotected slot") {
    ModelState s = base;
    s.H[2] = s.heap.allocate(8, 3, 2);
    auto v = check_invariants(s);
    CHECK(has(v, "pr5"));
    CHECK(has(v, "pr6"));
  }
  SUBCASE("pc outside the label set") {
    ModelState s = base;
    s.at(1).pc = 3;
    CHECK(has(check_invariants(s), "Ot4"));
  }
  SUBCASE("return slot outside its code set") {
    ModelState s = base;
    s.at(1).ret_gA = 5;
    CHECK(has(check_invariants(s), "Ot3"));
  }
  SUBCASE("completed find without a matching action") {
    ModelState s = base;
    s.at(1).pc = 14;
    s.at(1).cnt_fi = 0;
    CHECK(has(check_invariants(s), "Cn1"));
  }
  SUBCASE("early delete success flag") {
    ModelState s = base;
    s.at(1).pc = 16;
    s.at(1).suc_del = true;
    CHECK(has(check_invariants(s), "de5"));
  }
  SUBCASE("find argument address 0") {
    ModelState s = base;
    s.at(1).a_fi = 0;
    CHECK(has(check_invariants(s), "fi1"));
  }
  SUBCASE("insert argument does not match its value") {
    ModelState s = base;
    s.at(1).v_ins = kNull;
    CHECK(has(check_invariants(s), "in1"));
  }
  SUBCASE("free of a table id still in the registry") {
    ModelState s = base;
    s.at(1).pc = 71;
    s.at(1).h_rA = 0;
    CHECK(has(check_invariants(s), "rA2"));
  }
  SUBCASE("fresh-table claim on the current slot") {
    ModelState s = base;
    s.at(1).pc = 81;
    s.at(1).i_nT = 1;
    auto v = check_invariants(s);
    CHECK(has(v, "nT1"));
    CHECK(has(v, "nT9"));
  }
  SUBCASE("drain marker missing at the erase step") {
    ModelState s = base;
    s.at(1).pc = 118;
    CHECK(has(check_invariants(s), "mC7"));
  }
  SUBCASE("stale captured word in moveElement") {
    ModelState s = base;
    s.at(1).pc = 120;
    CHECK(has(check_invariants(s), "mE1"));
  }
}

TEST_CASE("corruptions mid-migration are pinned to their ids") {
  ModelState s = model_init(small_config(1, {"i:1 i:2 i:3 i:4 i:5"}));
  run_checked_until_pc(s, 1, 110); // replacement published, drain about to start
  REQUIRE(s.next[1] == 2);
  const ModelState paused = s;

  SUBCASE("replacement table with a deletion count") {
    ModelState t = paused;
    t.heap.at(t.H[2]).dels = 1;
    auto v = check_invariants(t);
    CHECK(has(v, "Ne9"));
    CHECK(has(v, "Ne9a"));
  }
  SUBCASE("migration target decoupled from the successor pointer") {
    ModelState t = paused;
    t.at(1).i_mig = 3;
    CHECK(has(check_invariants(t), "mi5"));
  }

  // drain a little so the replacement holds values, then corrupt one
  run_checked_until_pc(s, 1, 103);
  SUBCASE("replacement value diverging from the abstract map") {
    ModelState t = s;
    Hashtable& h = t.heap.at(t.H[2]);
    for (std::uint64_t k = 0; k < h.size; ++k) {
      if (is_null(val(h.table[k]))) continue;
      h.table[k] = to_evalue(make_value(adr(h.table[k]), 77));
      break;
    }
    auto v = check_invariants(t);
    CHECK(has(v, "Ne17"));
  }
}
