// Schedule exploration over the interleaving model: seeded random walks,
// exhaustive enumeration of short workloads, per-state invariant checking,
// progress checking, and counterexample traces suitable for replay.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfht/invariants.hpp"
#include "lfht/model/state.hpp"

namespace lfht {

// Statements that fold an abstract-map update into the host statement. Runs
// check invariants right after every one of these in addition to the regular
// cadence, so no update lands unaudited.
inline constexpr int kGhostLabels[] = {7, 17, 18, 33, 35, 50};

bool is_ghost_label(int label);

// Stock configuration for contention-heavy runs: a small table with a tight
// bound makes migrations and replacement-slot scans happen constantly.
ModelConfig tiny_table_config(std::uint32_t P = 2);

// An invariant failure frozen with enough context to diagnose offline: how
// far the run had come, the recent schedule, and the full state image.
struct Counterexample {
  std::uint64_t step_no = 0;
  std::vector<Violation> violations;
  std::vector<std::string> trace; // oldest first
  std::string state_json;
};

struct WalkOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 2000;
  // Invariant cadence in steps; 0 checks only ghost steps and endpoints.
  std::uint64_t check_every = 1;
  // Starve one process: it runs only when nobody else can. Probes schedules
  // where the unlucky process loops behind the others' migrations.
  bool adversarial = false;
  std::uint32_t starved = 1;
  std::size_t trace_keep = 200;
  std::vector<std::string> subset; // invariant ids; empty = full catalogue
};

struct WalkReport {
  std::uint64_t steps_taken = 0;
  std::uint64_t states_visited = 0; // includes the initial state
  std::uint64_t states_checked = 0;
  std::uint64_t ops_completed = 0;
  bool finished_scripts = false;
  // One line per stuck process or exceeded protection-unit bound.
  std::vector<std::string> progress_failures;
  std::vector<Counterexample> violations;
  std::vector<CompletedOp> completed;
  ModelState final_state;

  bool lock_freedom_held() const { return progress_failures.empty(); }
  bool ok() const { return violations.empty() && progress_failures.empty(); }
};

// Runs max_steps uniformly random choices among the enabled processes that
// still have script work, resolving nothing else randomly: the model itself
// is deterministic. Stops early when every script has drained, when an
// invariant breaks, or when a process gets stuck.
WalkReport run_random(const ModelConfig& cfg, const WalkOptions& opt = {});
WalkReport run_random(ModelState start, const WalkOptions& opt = {});

// Enumeration refuses to truncate silently: blowing the state or depth
// budget raises instead of returning a partial report.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ExhaustiveOptions {
  std::uint64_t budget = 200000; // distinct states
  std::uint64_t max_depth = 100000;
  std::vector<std::string> subset; // invariant ids; empty = full catalogue
  // Evaluated at every terminal state; a non-empty result is recorded as a
  // postcondition failure verbatim.
  std::function<std::string(const ModelState&)> terminal_check;
  // Cut the search at states satisfying this predicate: the state is kept as
  // a frontier leaf and its children are not expanded. A staged-race run can
  // stop once the race has resolved instead of carrying both scripts to
  // completion. Cut leaves are reported apart from terminals.
  std::function<bool(const ModelState&)> prune;
  std::size_t terminals_kept = 4096;
};

struct ExhaustiveReport {
  std::uint64_t states_explored = 0; // distinct states expanded
  std::uint64_t steps_executed = 0;
  std::uint64_t merges = 0; // steps that landed on an already-visited state
  std::uint64_t terminal_count = 0;
  std::vector<ModelState> terminals; // capped at terminals_kept
  bool terminals_capped = false;
  std::uint64_t cut_count = 0; // leaves stopped by the prune predicate
  std::vector<ModelState> cuts; // capped at terminals_kept
  bool cuts_capped = false;
  std::vector<Counterexample> violations;
  std::vector<std::string> progress_failures;
  std::vector<std::string> postcondition_failures;
  // Undo soundness: a parent state whose hash changed under its children.
  std::vector<std::string> restore_failures;

  bool lock_freedom_held() const { return progress_failures.empty(); }
  bool ok() const {
    return violations.empty() && progress_failures.empty() &&
           postcondition_failures.empty() && restore_failures.empty();
  }
};

// Depth-first enumeration of every schedule of the configured scripts,
// deduplicating on the serialized state image. Checks invariants and
// progress at every distinct state and collects every distinct end state.
ExhaustiveReport run_exhaustive(const ModelConfig& cfg, const ExhaustiveOptions& opt = {});
ExhaustiveReport run_exhaustive(const ModelState& start, const ExhaustiveOptions& opt = {});

// Per-state progress primitive: every process, finished or not, can take its
// next statement. A failure here is a soundness break in the run, not a
// property of the algorithm; `why` gets one line per stuck process.
bool every_process_enabled(const ModelState& s, std::vector<std::string>* why = nullptr);

// Whole-run views of the same property.
bool check_lock_freedom(const WalkReport& r);
bool check_lock_freedom(const ExhaustiveReport& r);

// Protection-unit headroom behind the replacement-slot scan: with one
// scanning process set aside, the others hold at most 2P-1 units across the
// 2P registry slots, so some slot stays claimable. Checked in every state
// that has a process at the claim statement; returns "" when it holds.
std::string scan_headroom_check(const ModelState& s);

// Win totals for the contended statements, summed over processes. Terminal
// states of staged races are judged against these.
struct RaceWins {
  std::uint64_t cas70 = 0;  // retired registry slot cleared
  std::uint64_t tas78 = 0;  // replacement slot claimed
  std::uint64_t cas84 = 0;  // replacement table published
  std::uint64_t cas103 = 0; // current-table pointer advanced
  std::uint64_t tag114 = 0; // source slot tagged while holding a value
  std::uint64_t cas123 = 0; // value landed in the target table
  std::uint64_t deallocs = 0;
};

RaceWins race_wins(const ModelState& s);

// Drives one process, alone, until it parks at the target statement. False
// when the step cap runs out first; the state is left wherever it got to.
bool drive_to(ModelState& s, std::uint32_t p, int pc, std::uint64_t cap = 100000);

// Replays a completion history against a fresh sequential map and returns ""
// when every result matches, else a description of the first divergence.
// Meaningful for single-process histories, where completion order is the
// execution order; concurrent histories need the linearizability checker.
std::string replay_sequential(const std::vector<CompletedOp>& ops);

} // namespace lfht
