#include "lfht/explorer.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "lfht/spec_oracle.hpp"

namespace lfht {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

std::string num(u64 v) { return std::to_string(v); }

// One trace line per executed statement: step tag, process, the label it
// ran, where it landed, and the shared cell it touched when that matters.
std::string step_line(u64 tag, u32 p, int label, const ModelState& s) {
  const ProcState& pr = s.at(p);
  std::string line =
      "#" + num(tag) + " p" + num(p) + " " + std::to_string(label) + "->" +
      std::to_string(pr.pc);
  auto cell = [&](const char* name, u32 i, u64 v) {
    line += std::string(" ") + name + "[" + num(i) + "]=" + num(v);
  };
  switch (label) {
    case 18: if (pr.suc_del) line += " removed"; break;
    case 35: if (pr.suc_ins) line += " inserted"; break;
    case 50: if (pr.suc_ass) line += " stored"; break;
    case 60: case 65: cell("prot", pr.index, s.prot[pr.index]); break;
    case 62: cell("busy", pr.index, s.busy[pr.index]); break;
    case 68: cell("busy", pr.i_rA, s.busy[pr.i_rA]); break;
    case 70: line += pr.pc == 71 ? " cleared H[" + num(pr.i_rA) + "]" : " lost"; break;
    case 71: line += " freed table " + num(pr.h_rA); break;
    case 72: cell("prot", pr.i_rA, s.prot[pr.i_rA]); break;
    case 78: line += pr.pc == 81 ? " claimed slot " + num(pr.i_nT) : " rescan"; break;
    case 81: cell("busy", pr.i_nT, s.busy[pr.i_nT]); break;
    case 82: cell("H", pr.i_nT, s.H[pr.i_nT]); break;
    case 84: line += pr.pc == 77 ? " next[" + num(pr.index) + "]=" + num(pr.i_nT) : " lost"; break;
    case 95: case 98: cell("prot", pr.i_mig, s.prot[pr.i_mig]); break;
    case 99: cell("busy", pr.i_mig, s.busy[pr.i_mig]); break;
    case 103: line += pr.pc == 104 ? " curr=" + num(s.curr_ind) : " lost"; break;
    case 104: cell("busy", pr.index, s.busy[pr.index]); break;
    case 105: cell("prot", pr.index, s.prot[pr.index]); break;
    case 114: line += pr.pc == 116 ? " tagged " + num(pr.i_mC) : " retry"; break;
    case 117: line += " drained " + num(pr.i_mC); break;
    case 123: line += pr.b_mE ? " moved in" : " occupied"; break;
    default: break;
  }
  return line;
}

std::vector<Violation> run_checks(const ModelState& s, const std::vector<std::string>& subset) {
  return subset.empty() ? check_invariants(s) : check_invariants(s, subset);
}

// Progress sample for one state: stuck processes plus the scan headroom
// bound, each line prefixed with where the run was.
void sample_progress(const ModelState& s, const std::string& where,
                     std::vector<std::string>& out) {
  std::vector<std::string> why;
  if (!every_process_enabled(s, &why))
    for (const std::string& w : why) out.push_back(where + ": " + w);
  std::string head = scan_headroom_check(s);
  if (!head.empty()) out.push_back(where + ": " + head);
}

bool all_scripts_done(const ModelState& s) {
  for (u32 p = 1; p <= s.P; ++p)
    if (!script_done(s, p)) return false;
  return true;
}

std::vector<u32> ready_processes(const ModelState& s) {
  std::vector<u32> out;
  for (u32 p = 1; p <= s.P; ++p)
    if (!script_done(s, p) && enabled(s, p)) out.push_back(p);
  return out;
}

} // namespace

bool is_ghost_label(int label) {
  for (int g : kGhostLabels)
    if (g == label) return true;
  return false;
}

ModelConfig tiny_table_config(u32 P) {
  ModelConfig cfg;
  cfg.P = P;
  cfg.initial_size = 8;
  cfg.initial_bound = 3;
  return cfg;
}

bool every_process_enabled(const ModelState& s, std::vector<std::string>* why) {
  bool ok = true;
  for (u32 p = 1; p <= s.P; ++p) {
    std::string reason;
    if (!enabled(s, p, &reason)) {
      ok = false;
      if (why)
        why->push_back("p" + num(p) + " stuck at pc " +
                       std::to_string(s.at(p).pc) + ": " + reason);
    }
  }
  return ok;
}

bool check_lock_freedom(const WalkReport& r) { return r.lock_freedom_held(); }
bool check_lock_freedom(const ExhaustiveReport& r) { return r.lock_freedom_held(); }

std::string scan_headroom_check(const ModelState& s) {
  const u32 twoP = s.slots();
  SetCounts n;
  bool counted = false;
  for (u32 p = 1; p <= s.P; ++p) {
    const ProcState& scanner = s.at(p);
    if (scanner.pc != 78) continue;
    if (!counted) {
      n = count_sets(s);
      counted = true;
    }
    u64 total = 0;
    for (u32 i = 1; i <= twoP; ++i) total += n.pr_set1[i] + n.pr_set2[i];
    // The scanner itself holds exactly one unit, on its operating slot.
    u64 own = 1 <= scanner.index && scanner.index <= twoP ? 1 : 0;
    if (total - own > 2 * u64{s.P} - 1)
      return "p" + num(p) + " scanning at 78 but the others hold " +
             num(total - own) + " protection units, above the bound " +
             num(2 * u64{s.P} - 1);
  }
  return "";
}

RaceWins race_wins(const ModelState& s) {
  RaceWins w;
  for (const ProcState& pr : s.proc) {
    w.cas70 += pr.stats.cas70_wins;
    w.tas78 += pr.stats.tas78_wins;
    w.cas84 += pr.stats.cas84_wins;
    w.cas103 += pr.stats.cas103_wins;
    w.tag114 += pr.stats.tag114_value;
    w.cas123 += pr.stats.cas123_wins;
    w.deallocs += pr.stats.deallocs;
  }
  return w;
}

bool drive_to(ModelState& s, u32 p, int pc, u64 cap) {
  while (s.at(p).pc != pc) {
    if (cap-- == 0 || !enabled(s, p)) return false;
    step(s, p);
  }
  return true;
}

std::string replay_sequential(const std::vector<CompletedOp>& ops) {
  AbstractMap m;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const CompletedOp& op = ops[i];
    std::string at = "op " + num(i) + " (p" + num(op.process) + ")";
    switch (op.item.kind) {
      case OpKind::Find: {
        Value want = spec_find(m, op.item.addr);
        if (!(op.found == want))
          return at + ": find(" + num(op.item.addr) + ") returned " +
                 num(op.found.bits) + ", the sequential map holds " + num(want.bits);
        break;
      }
      case OpKind::Erase: {
        bool want = spec_delete(m, op.item.addr);
        if (op.suc != want)
          return at + ": delete(" + num(op.item.addr) + ") returned " +
                 (op.suc ? "true" : "false") + ", expected " + (want ? "true" : "false");
        break;
      }
      case OpKind::Insert: {
        bool want = spec_insert(m, op.item.value);
        if (op.suc != want)
          return at + ": insert(" + num(op.item.value.bits) + ") returned " +
                 (op.suc ? "true" : "false") + ", expected " + (want ? "true" : "false");
        break;
      }
      case OpKind::Assign:
        spec_assign(m, op.item.value);
        if (!op.suc) return at + ": assign reported failure";
        break;
      case OpKind::Release:
        return at + ": release ops do not produce results";
    }
  }
  return "";
}

WalkReport run_random(const ModelConfig& cfg, const WalkOptions& opt) {
  return run_random(model_init(cfg), opt);
}

WalkReport run_random(ModelState start, const WalkOptions& opt) {
  WalkReport r;
  ModelState& s = start;
  std::mt19937_64 rng(opt.seed);
  std::deque<std::string> ring;

  auto ring_vec = [&] { return std::vector<std::string>(ring.begin(), ring.end()); };
  auto check_now = [&](u64 step_no) {
    r.states_checked++;
    std::vector<Violation> v = run_checks(s, opt.subset);
    if (v.empty()) return true;
    Counterexample ce;
    ce.step_no = step_no;
    ce.violations = std::move(v);
    ce.trace = ring_vec();
    ce.state_json = dump_json(s);
    r.violations.push_back(std::move(ce));
    return false;
  };

  r.states_visited = 1;
  sample_progress(s, "step 0", r.progress_failures);
  bool healthy = check_now(0);
  u64 last_checked = 0;

  u64 i = 0;
  while (healthy && r.progress_failures.empty() && i < opt.max_steps) {
    std::vector<u32> ready = ready_processes(s);
    if (ready.empty()) break;

    std::vector<u32> pool;
    if (opt.adversarial) {
      for (u32 p : ready)
        if (p != opt.starved) pool.push_back(p);
    }
    if (pool.empty()) pool = ready;
    u32 p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];

    int label = step(s, p);
    ++i;
    r.steps_taken++;
    r.states_visited++;

    ring.push_back(step_line(i, p, label, s));
    if (ring.size() > opt.trace_keep) ring.pop_front();

    sample_progress(s, "step " + num(i), r.progress_failures);
    if ((opt.check_every != 0 && i % opt.check_every == 0) || is_ghost_label(label)) {
      healthy = check_now(i);
      last_checked = i;
    }
  }

  if (healthy && last_checked != i) check_now(i);
  r.finished_scripts = all_scripts_done(s);
  r.ops_completed = s.completed.size();
  r.completed = s.completed;
  r.final_state = std::move(s);
  return r;
}

namespace {

// Visited states are remembered as a 128-bit digest of the serialized image,
// not the image itself. A digest collision could prune a reachable state; it
// cannot fabricate a violation or a terminal.
struct Digest {
  u64 a = 0, b = 0;
  friend bool operator==(const Digest&, const Digest&) = default;
};

struct DigestHash {
  std::size_t operator()(const Digest& d) const {
    return d.a ^ (d.b * 0x9e3779b97f4a7c15ULL);
  }
};

u64 fnv1a(const std::string& bytes, u64 h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Which process happened upon an already-drained slot, and how many ops each
// has retired, are path bookkeeping with no behavioural echo; keying on them
// would square the drain interleavings. Every counter the race
// postconditions read stays in the key.
Digest digest_of(const ModelState& s) {
  ModelState keyed = s;
  for (ProcState& pr : keyed.proc) {
    pr.stats.removals112 = 0;
    pr.stats.ops_done = 0;
  }
  std::string img = serialize(keyed);
  return {fnv1a(img, 14695981039346656037ULL), fnv1a(img, 0x9e3779b97f4a7c15ULL)};
}

struct Frame {
  ModelState state;
  u64 hash0 = 0; // state_hash at entry, re-checked before every expansion
  std::string via;
  std::vector<u32> todo;
  std::size_t next = 0;
};

} // namespace

ExhaustiveReport run_exhaustive(const ModelConfig& cfg, const ExhaustiveOptions& opt) {
  return run_exhaustive(model_init(cfg), opt);
}

ExhaustiveReport run_exhaustive(const ModelState& start, const ExhaustiveOptions& opt) {
  ExhaustiveReport r;
  std::unordered_set<Digest, DigestHash> seen;
  std::vector<Frame> stack;

  auto path_of = [&] {
    std::vector<std::string> t;
    for (const Frame& f : stack)
      if (!f.via.empty()) t.push_back(f.via);
    return t;
  };

  // Push a frame for the state unless it was seen before. All per-state work
  // happens here: invariants, progress, terminal classification.
  auto enter = [&](ModelState&& st, std::string&& via) {
    if (!seen.insert(digest_of(st)).second) {
      r.merges++;
      return;
    }
    if (++r.states_explored > opt.budget)
      throw BudgetExceeded("state budget " + num(opt.budget) +
                           " exceeded; enumeration refuses to truncate");
    if (stack.size() >= opt.max_depth)
      throw BudgetExceeded("schedule depth " + num(opt.max_depth) + " exceeded");

    Frame f;
    f.state = std::move(st);
    f.via = std::move(via);
    f.hash0 = state_hash(f.state);
    stack.push_back(std::move(f));
    Frame& g = stack.back();

    std::vector<Violation> v = run_checks(g.state, opt.subset);
    if (!v.empty()) {
      Counterexample ce;
      ce.step_no = stack.size() - 1;
      ce.violations = std::move(v);
      ce.trace = path_of();
      ce.state_json = dump_json(g.state);
      r.violations.push_back(std::move(ce));
      return;
    }

    std::string where = "depth " + num(stack.size() - 1);
    sample_progress(g.state, where, r.progress_failures);

    if (opt.prune && opt.prune(g.state)) {
      r.cut_count++;
      if (r.cuts.size() < opt.terminals_kept) {
        r.cuts.push_back(g.state);
      } else {
        r.cuts_capped = true;
      }
      return;
    }

    for (u32 p = 1; p <= g.state.P; ++p)
      if (!script_done(g.state, p) && enabled(g.state, p)) g.todo.push_back(p);

    if (!g.todo.empty()) return;
    if (!all_scripts_done(g.state)) {
      r.progress_failures.push_back(where + ": dead end, scripts unfinished");
      return;
    }
    r.terminal_count++;
    if (opt.terminal_check) {
      std::string msg = opt.terminal_check(g.state);
      if (!msg.empty())
        r.postcondition_failures.push_back("terminal at " + where + ": " + msg);
    }
    if (r.terminals.size() < opt.terminals_kept) {
      r.terminals.push_back(g.state);
    } else {
      r.terminals_capped = true;
    }
  };

  enter(ModelState(start), "");
  while (!stack.empty() && r.violations.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.todo.size()) {
      stack.pop_back();
      continue;
    }
    if (state_hash(f.state) != f.hash0) {
      r.restore_failures.push_back("state at depth " + num(stack.size() - 1) +
                                   " changed under its children");
      stack.pop_back();
      continue;
    }
    u32 p = f.todo[f.next++];
    ModelState child = f.state;
    int label = step(child, p);
    r.steps_executed++;
    std::string via = step_line(stack.size(), p, label, child);
    enter(std::move(child), std::move(via));
  }
  return r;
}

} // namespace lfht
