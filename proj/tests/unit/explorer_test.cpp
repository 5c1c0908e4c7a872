#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "lfht/explorer.hpp"
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

std::string brief(const WalkReport& r) {
  std::string out;
  for (const auto& ce : r.violations)
    for (const auto& v : ce.violations) out += v.id + ": " + v.detail + "; ";
  for (const auto& f : r.progress_failures) out += f + "; ";
  return out;
}

std::string brief(const ExhaustiveReport& r) {
  std::string out;
  for (const auto& ce : r.violations)
    for (const auto& v : ce.violations) out += v.id + ": " + v.detail + "; ";
  for (const auto& f : r.progress_failures) out += f + "; ";
  for (const auto& f : r.postcondition_failures) out += f + "; ";
  for (const auto& f : r.restore_failures) out += f + "; ";
  return out;
}

// Step p until the state satisfies the predicate; the other processes stay
// parked. Used to pose two processes at a contended statement.
void drive_until(ModelState& s, std::uint32_t p,
                 const std::function<bool(const ModelState&)>& pred,
                 std::uint64_t cap = 100000) {
  while (!pred(s)) {
    REQUIRE(cap-- > 0);
    step(s, p);
  }
}

bool some_state(const std::vector<ModelState>& pool,
                const std::function<bool(const ModelState&)>& pred) {
  for (const ModelState& t : pool)
    if (pred(t)) return true;
  return false;
}

bool some_terminal(const ExhaustiveReport& r,
                   const std::function<bool(const ModelState&)>& pred) {
  return some_state(r.terminals, pred);
}

} // namespace

TEST_CASE("ghost labels cover exactly the abstract-update hosts") {
  int hits = 0;
  for (int l : kLabels)
    if (is_ghost_label(l)) hits++;
  CHECK(hits == 6);
  CHECK(is_ghost_label(18));
  CHECK(is_ghost_label(50));
  CHECK_FALSE(is_ghost_label(103));
}

TEST_CASE("a random walk over the stock configuration stays clean") {
  ModelConfig cfg = tiny_table_config();
  cfg.scripts = {random_script(11, 40, {}, 1, 12), random_script(12, 40, {}, 1, 12)};
  WalkOptions opt;
  opt.seed = 1;
  opt.max_steps = 2000;
  WalkReport r = run_random(cfg, opt);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  CHECK(check_lock_freedom(r));
  CHECK(r.steps_taken > 0);
  CHECK(r.states_visited == r.steps_taken + 1);
  CHECK(r.states_checked == r.steps_taken + 1);
  CHECK(r.ops_completed == r.completed.size());
}

TEST_CASE("a single process agrees with the sequential map") {
  ModelConfig cfg = small_config(1, {"i:7:1 f:7 d:7 f:7"});
  WalkReport r = run_random(cfg, {});
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.finished_scripts);
  REQUIRE(r.ops_completed == 4);
  CHECK(replay_sequential(r.completed) == "");
  CHECK(r.completed[1].found == make_value(7, 1));
  CHECK(r.completed[2].suc);
  CHECK(is_null(r.completed[3].found));
}

TEST_CASE("a zero-step walk reports on the initial state only") {
  WalkOptions opt;
  opt.max_steps = 0;
  WalkReport r = run_random(small_config(2, {"i:1", "i:2"}), opt);
  CHECK(r.ok());
  CHECK(r.steps_taken == 0);
  CHECK(r.states_visited == 1);
  CHECK(r.states_checked == 1);
  CHECK_FALSE(r.finished_scripts);
}

TEST_CASE("walks are reproducible per seed") {
  ModelConfig cfg = tiny_table_config();
  cfg.scripts = {random_script(3, 30, {}, 1, 9), random_script(4, 30, {}, 1, 9)};
  WalkOptions opt;
  opt.seed = 42;
  opt.max_steps = 800;
  WalkReport a = run_random(cfg, opt);
  WalkReport b = run_random(cfg, opt);
  CHECK(a.steps_taken == b.steps_taken);
  CHECK(a.ops_completed == b.ops_completed);
  CHECK(serialize(a.final_state) == serialize(b.final_state));
}

TEST_CASE("the adversarial mode runs the starved process last") {
  ModelConfig cfg = small_config(2, {"i:1 f:1 d:1", "i:2 f:2 i:3"});
  WalkOptions opt;
  opt.adversarial = true;
  opt.starved = 1;
  opt.max_steps = 5000;
  WalkReport r = run_random(cfg, opt);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.finished_scripts);
  std::size_t first_p1 = r.completed.size(), last_p2 = 0;
  for (std::size_t i = 0; i < r.completed.size(); ++i) {
    if (r.completed[i].process == 1) first_p1 = std::min(first_p1, i);
    if (r.completed[i].process == 2) last_p2 = std::max(last_p2, i);
  }
  CHECK(last_p2 < first_p1);
}

TEST_CASE("the check cadence can thin out to ghost steps and endpoints") {
  ModelConfig cfg = small_config(2, {"i:1 i:2 f:1", "d:1 i:3"});
  WalkOptions opt;
  opt.check_every = 0;
  opt.max_steps = 4000;
  WalkReport r = run_random(cfg, opt);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  CHECK(r.states_checked > 1);
  CHECK(r.states_checked < r.states_visited);
}

TEST_CASE("a corrupted start is reported with a state dump") {
  ModelState s = model_init(small_config(2, {"i:1", "i:2"}));
  s.prot[2] += 1;
  WalkReport r = run_random(s, {});
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].step_no == 0);
  CHECK(!r.violations[0].state_json.empty());
  CHECK(r.steps_taken == 0);
  CHECK_FALSE(r.ok());

  WalkOptions scoped;
  scoped.subset = {"pr1"};
  ModelState again = model_init(small_config(2, {"i:1", "i:2"}));
  again.prot[2] += 1;
  WalkReport r2 = run_random(again, scoped);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].violations[0].id == "pr1");
}

TEST_CASE("a stuck process stops the walk as a progress failure") {
  ModelState s = model_init(small_config(1, {"f:1"}));
  REQUIRE(drive_to(s, 1, 7));
  s.heap.deallocate(s.at(1).h_fi);
  REQUIRE(every_process_enabled(s) == false);

  WalkReport r = run_random(s, {});
  CHECK_FALSE(check_lock_freedom(r));
  CHECK(r.steps_taken == 0);
  REQUIRE(!r.progress_failures.empty());
  CHECK(r.progress_failures[0].find("p1 stuck at pc 7") != std::string::npos);
}

TEST_CASE("every_process_enabled explains who is stuck") {
  ModelState s = model_init(small_config(2, {}));
  std::vector<std::string> why;
  CHECK(every_process_enabled(s, &why));
  CHECK(why.empty());
}

TEST_CASE("the scan headroom check flags an overloaded registry") {
  CHECK(scan_headroom_check(model_init(small_config(2, {}))) == "");

  // Fabricated: two processes parked right after winning the pointer flip
  // hold three protection units each, and a third scans for a free slot.
  ModelConfig cfg;
  cfg.P = 3;
  cfg.initial_size = 16;
  cfg.initial_bound = 3;
  ModelState s = model_init(cfg);
  s.at(1).pc = 104;
  s.at(1).index = 1;
  s.at(1).i_mig = 2;
  s.at(2).pc = 104;
  s.at(2).index = 3;
  s.at(2).i_mig = 4;
  s.at(3).pc = 78;
  std::string msg = scan_headroom_check(s);
  REQUIRE(!msg.empty());
  CHECK(msg.find("above the bound") != std::string::npos);
}

TEST_CASE("drive_to parks a process at a label") {
  ModelState s = model_init(small_config(1, {"f:1"}));
  REQUIRE(drive_to(s, 1, 7));
  CHECK(s.at(1).pc == 7);
  CHECK_FALSE(drive_to(s, 1, 103, 50));
}

TEST_CASE("sequential replay flags diverging results") {
  std::vector<CompletedOp> ops;
  ops.push_back({1, {OpKind::Insert, 7, make_value(7, 1)}, {}, true});
  ops.push_back({1, {OpKind::Find, 7, {}}, make_value(7, 1), false});
  CHECK(replay_sequential(ops) == "");

  ops[1].found = kNull;
  std::string msg = replay_sequential(ops);
  REQUIRE(!msg.empty());
  CHECK(msg.find("find(7)") != std::string::npos);
}

TEST_CASE("exhaustive enumeration of one script is a straight line") {
  ExhaustiveReport r = run_exhaustive(small_config(1, {"i:5:1"}));
  REQUIRE_MESSAGE(r.ok(), brief(r));
  CHECK(r.terminal_count == 1);
  CHECK(r.merges == 0);
  CHECK(r.steps_executed == r.states_explored - 1);
  REQUIRE(r.terminals.size() == 1);
  CHECK(r.terminals[0].X.get(5) == make_value(5, 1));
}

TEST_CASE("exhaustive: two inserts to distinct addresses both land") {
  ExhaustiveReport r = run_exhaustive(small_config(2, {"i:6:1", "i:7:2"}));
  REQUIRE_MESSAGE(r.ok(), brief(r));
  CHECK(r.merges > 0);
  REQUIRE(r.terminal_count > 0);
  REQUIRE_FALSE(r.terminals_capped);
  for (const ModelState& t : r.terminals) {
    CHECK(t.at(1).suc_ins);
    CHECK(t.at(2).suc_ins);
    CHECK(t.X.get(6) == make_value(6, 1));
    CHECK(t.X.get(7) == make_value(7, 2));
  }
}

TEST_CASE("exhaustive: two inserts to one address admit exactly one winner") {
  ExhaustiveReport r = run_exhaustive(small_config(2, {"i:7:1", "i:7:2"}));
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    REQUIRE(t.at(1).suc_ins != t.at(2).suc_ins);
    Value won = t.at(1).suc_ins ? make_value(7, 1) : make_value(7, 2);
    CHECK(t.X.get(7) == won);
  }
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(1).suc_ins; }));
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(2).suc_ins; }));
}

TEST_CASE("exhaustive: two deletes of one key admit exactly one winner") {
  ModelState s = model_init(small_config(2, {"i:7:1 d:7", "d:7"}));
  drive_until(s, 1, [](const ModelState& m) { return m.completed.size() == 1; });
  ExhaustiveReport r = run_exhaustive(s);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    REQUIRE(t.at(1).suc_del != t.at(2).suc_del);
    CHECK(is_null(t.X.get(7)));
  }
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(1).suc_del; }));
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(2).suc_del; }));
}

TEST_CASE("exhaustive: two assigns to one address leave the last writer") {
  ExhaustiveReport r = run_exhaustive(small_config(2, {"a:7:1", "a:7:2"}));
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    CHECK(t.at(1).suc_ass);
    CHECK(t.at(2).suc_ass);
    Value got = t.X.get(7);
    CHECK((got == make_value(7, 1) || got == make_value(7, 2)));
  }
  CHECK(some_terminal(r, [](const ModelState& t) { return t.X.get(7) == make_value(7, 1); }));
  CHECK(some_terminal(r, [](const ModelState& t) { return t.X.get(7) == make_value(7, 2); }));
}

TEST_CASE("exhaustive: racing releases clear the retired slot once") {
  ModelState s = model_init(small_config(2, {"i:1:1 i:2:1 i:3:1 i:4:1 i:5:1", "f:1"}));
  REQUIRE(drive_to(s, 2, 5));
  drive_until(s, 1, [](const ModelState& m) {
    return m.at(1).pc == 68 && m.at(1).i_rA == 1;
  });
  drive_until(s, 2, [](const ModelState& m) {
    return m.at(2).pc == 68 && m.at(2).i_rA == 1;
  });
  TableId old_id = s.at(1).h_rA;
  REQUIRE(old_id != 0);
  REQUIRE(s.busy[1] == 2);

  ExhaustiveReport r = run_exhaustive(s);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    RaceWins w = race_wins(t);
    CHECK(w.cas70 == 1);
    CHECK(w.deallocs == 1);
    CHECK(t.H[1] == 0);
    CHECK_FALSE(t.heap.contains(old_id));
    CHECK(t.heap.live_count() == 1);
    CHECK(t.X.get(1) == make_value(1, 1));
  }
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(1).stats.cas70_wins == 1; }));
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(2).stats.cas70_wins == 1; }));
}

// The claim and publish races sit before the table drain, and carrying both
// scripts through the migration multiplies the space past a million states.
// These runs cut the search once the race has settled: a replacement is
// published on the old slot, every losing table is reclaimed, and nobody is
// still inside the claim window.
ModelConfig drained_migration_config(const char* trigger_script) {
  ModelConfig cfg;
  cfg.P = 2;
  cfg.initial_size = 6;
  cfg.initial_bound = 1;
  cfg.mixer = identity_mix;
  cfg.scripts = {parse_script(std::string("i:1:1 i:2:1 d:1 d:2 ") + trigger_script),
                 parse_script("i:9:2")};
  return cfg;
}

bool claim_window_empty(const ModelState& m) {
  for (std::uint32_t p = 1; p <= m.P; ++p) {
    int pc = m.at(p).pc;
    if (pc >= 78 && pc <= 84) return false;
  }
  return true;
}

TEST_CASE("exhaustive: racing claims take the forced slot once") {
  ModelState s = model_init(drained_migration_config("i:3:1"));
  REQUIRE(drive_to(s, 1, 78));
  REQUIRE(drive_to(s, 2, 78));
  s.forced_slots[0] = {3};
  s.forced_slots[1] = {3};

  ExhaustiveOptions opt;
  opt.prune = [](const ModelState& m) {
    return m.next[1] != 0 && m.heap.live_count() == 2 && claim_window_empty(m);
  };
  ExhaustiveReport r = run_exhaustive(s, opt);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.cut_count > 0);
  CHECK(r.terminal_count == 0);
  for (const ModelState& t : r.cuts) {
    int claimed_3 = (t.at(1).i_nT == 3 ? 1 : 0) + (t.at(2).i_nT == 3 ? 1 : 0);
    CHECK(claimed_3 == 1);
    CHECK(race_wins(t).cas84 == 1);
    CHECK(t.next[1] != 0);
    CHECK(t.H[t.next[1]] != 0);
  }
  CHECK(some_state(r.cuts, [](const ModelState& t) { return t.at(1).i_nT == 3; }));
  CHECK(some_state(r.cuts, [](const ModelState& t) { return t.at(2).i_nT == 3; }));
}

TEST_CASE("exhaustive: racing publishers install one replacement") {
  ModelState s = model_init(drained_migration_config("i:3:1"));
  REQUIRE(drive_to(s, 1, 84));
  REQUIRE(drive_to(s, 2, 84));
  REQUIRE(s.at(1).i_nT != s.at(2).i_nT);
  TableId fresh1 = s.H[s.at(1).i_nT];
  TableId fresh2 = s.H[s.at(2).i_nT];
  TableId old_id = s.H[1];

  ExhaustiveOptions opt;
  opt.prune = [](const ModelState& m) {
    return m.next[1] != 0 && m.heap.live_count() == 2 && claim_window_empty(m);
  };
  ExhaustiveReport r = run_exhaustive(s, opt);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.cut_count > 0);
  CHECK(r.terminal_count == 0);
  for (const ModelState& t : r.cuts) {
    RaceWins w = race_wins(t);
    CHECK(w.cas84 == 1);
    CHECK(w.deallocs == 1);
    CHECK(t.heap.contains(old_id));
    CHECK(t.heap.contains(fresh1) != t.heap.contains(fresh2));
    CHECK(t.H[t.next[1]] == (t.heap.contains(fresh1) ? fresh1 : fresh2));
  }
  CHECK(some_state(r.cuts, [](const ModelState& t) { return t.at(1).stats.cas84_wins == 1; }));
  CHECK(some_state(r.cuts, [](const ModelState& t) { return t.at(2).stats.cas84_wins == 1; }));
}

TEST_CASE("exhaustive: racing movers tag a value slot once") {
  ModelState s = model_init(
      small_config(2, {"i:1:1 i:2:1 i:3:1 i:4:1 d:1 d:3 i:5:1", "i:9:2"}));
  drive_until(s, 1, [](const ModelState& m) {
    return m.at(1).pc == 114 && m.at(1).i_mC == 2;
  });
  drive_until(s, 2, [](const ModelState& m) {
    return m.at(2).pc == 114 && m.at(2).i_mC == 2;
  });
  REQUIRE(s.at(1).v_mC == s.at(2).v_mC);

  ExhaustiveReport r = run_exhaustive(s);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    RaceWins w = race_wins(t);
    CHECK(w.tag114 == 2);
    CHECK(w.cas123 == 2);
    CHECK(w.cas103 == 1);
    CHECK(t.heap.live_count() == 1);
    std::vector<Address> xs = t.X.support();
    std::sort(xs.begin(), xs.end());
    CHECK(xs == std::vector<Address>{2, 4, 5, 9});
  }
}

TEST_CASE("exhaustive: racing movers land a value once") {
  ModelState s = model_init(
      small_config(2, {"i:2:1 i:5:1 i:6:1 i:7:1 i:3:1", "i:9:2"}));
  drive_until(s, 1, [](const ModelState& m) {
    return m.at(1).pc == 123 && adr(m.at(1).v_mE) == 2;
  });
  drive_until(s, 2, [](const ModelState& m) {
    return m.at(2).pc == 123 && adr(m.at(2).v_mE) == 2;
  });
  REQUIRE(s.at(1).k_mE == s.at(2).k_mE);

  ExhaustiveReport r = run_exhaustive(s);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    RaceWins w = race_wins(t);
    CHECK(w.cas123 == 4);
    CHECK(w.tag114 == 4);
    CHECK(t.heap.live_count() == 1);
    std::vector<Address> xs = t.X.support();
    std::sort(xs.begin(), xs.end());
    CHECK(xs == std::vector<Address>{2, 3, 5, 6, 7, 9});
  }
}

TEST_CASE("exhaustive: racing flips advance the pointer once") {
  ModelState s = model_init(small_config(2, {"i:1:1 i:2:1 i:3:1 i:4:1 i:5:1", "i:9:2"}));
  REQUIRE(drive_to(s, 1, 103));
  REQUIRE(drive_to(s, 2, 103));
  REQUIRE(s.at(1).i_mig == s.at(2).i_mig);

  ExhaustiveReport r = run_exhaustive(s);
  REQUIRE_MESSAGE(r.ok(), brief(r));
  REQUIRE(r.terminal_count > 0);
  for (const ModelState& t : r.terminals) {
    RaceWins w = race_wins(t);
    CHECK(w.cas103 == 1);
    CHECK(t.curr_ind == 2);
    CHECK(t.heap.live_count() == 1);
    std::vector<Address> xs = t.X.support();
    std::sort(xs.begin(), xs.end());
    CHECK(xs == std::vector<Address>{1, 2, 3, 4, 5, 9});
  }
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(1).stats.cas103_wins == 1; }));
  CHECK(some_terminal(r, [](const ModelState& t) { return t.at(2).stats.cas103_wins == 1; }));
}

TEST_CASE("terminal hooks record failures verbatim") {
  ExhaustiveOptions opt;
  opt.terminal_check = [](const ModelState&) { return std::string("boom"); };
  ExhaustiveReport r = run_exhaustive(small_config(1, {"i:5:1"}), opt);
  CHECK_FALSE(r.ok());
  REQUIRE(r.postcondition_failures.size() == 1);
  CHECK(r.postcondition_failures[0].find("boom") != std::string::npos);
}

TEST_CASE("exhaustive enumeration refuses to blow its budget") {
  ExhaustiveOptions opt;
  opt.budget = 20;
  CHECK_THROWS_AS(run_exhaustive(small_config(2, {"i:7:1", "i:7:2"}), opt),
                  BudgetExceeded);
}
