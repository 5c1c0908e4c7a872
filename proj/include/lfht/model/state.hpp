// Full state of the interleaving model: shared memory (registry, heap,
// current-table pointer), every process's control location and locals, and
// the abstract-map ghosts (X, Y, per-operation action counters). One process
// step is one atomic statement; the pc values are the statement labels the
// invariant catalogue is written against.
#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "lfht/encoding.hpp"
#include "lfht/heap.hpp"
#include "lfht/model/policy.hpp"
#include "lfht/model/workload.hpp"
#include "lfht/spec_oracle.hpp"

namespace lfht {

// The 81 statement labels.
inline constexpr int kLabels[] = {
    0,  1,                                               // main loop
    5,  6,  7,  8,  10, 11, 13, 14,                      // find
    15, 16, 17, 18, 20, 21, 25, 26,                      // delete
    27, 28, 30, 31, 32, 33, 35, 36, 37, 41, 42,          // insert
    43, 44, 46, 47, 48, 49, 50, 51, 52, 57,              // assign
    59, 60, 61, 62, 63, 65,                              // getAccess
    67, 68, 69, 70, 71, 72,                              // releaseAccess
    77, 78, 81, 82, 83, 84,                              // newTable
    90,                                                  // refresh
    94, 95, 97, 98, 99, 100, 101, 102, 103, 104, 105,    // migrate
    110, 111, 112, 114, 116, 117, 118,                   // moveContents
    120, 121, 123, 125, 126,                             // moveElement
};

// Counters a run accumulates per process; diagnostic only, not consulted by
// the transition relation.
struct ProcStats {
  std::uint32_t ops_done = 0;
  std::uint32_t tas78_wins = 0;    // replacement slot claimed
  std::uint32_t cas84_wins = 0;    // replacement table published
  std::uint32_t cas103_wins = 0;   // current-table pointer advanced
  std::uint32_t cas70_wins = 0;    // retired registry slot cleared
  std::uint32_t deallocs = 0;
  std::uint32_t tag114_value = 0;  // source slot tagged while holding a value
  std::uint32_t removals112 = 0;   // source slot found already drained
  std::uint32_t move_calls = 0;    // moveElement entries
  std::uint32_t cas123_wins = 0;   // value landed in the target table

  friend bool operator==(const ProcStats&, const ProcStats&) = default;
};

struct ProcState {
  int pc = 0;
  std::uint32_t index = 1;

  // find
  Address a_fi = 1;
  EValue r_fi = {};
  std::uint64_t n_fi = 0, l_fi = 0;
  TableId h_fi = 0;
  std::uint64_t cnt_fi = 0;
  Value rS_fi = {};

  // delete
  Address a_del = 1;
  EValue r_del = {};
  std::uint64_t k_del = 0, l_del = 0, n_del = 0;
  TableId h_del = 0;
  bool suc_del = false, sucS_del = false;
  std::uint64_t cnt_del = 0;

  // insert
  Value v_ins = {1};
  Address a_ins = 1;
  EValue r_ins = {};
  std::uint64_t k_ins = 0, l_ins = 0, n_ins = 0;
  TableId h_ins = 0;
  bool suc_ins = false, sucS_ins = false;
  std::uint64_t cnt_ins = 0;

  // assign
  Value v_ass = {1};
  Address a_ass = 1;
  EValue r_ass = {};
  std::uint64_t k_ass = 0, l_ass = 0, n_ass = 0;
  TableId h_ass = 0;
  bool suc_ass = false;
  std::uint64_t cnt_ass = 0;

  // releaseAccess
  std::uint32_t i_rA = 1;
  TableId h_rA = 0;

  // newTable
  std::uint32_t i_nT = 1;
  std::uint32_t scan_offset = 0;

  // migrate
  std::uint32_t i_mig = 1;
  TableId h_mig = 0;

  // moveContents
  TableId from_mC = 0, to_mC = 0;
  std::set<std::uint32_t> to_be_moved;
  std::uint32_t i_mC = 0;
  EValue v_mC = {};
  std::uint64_t move_cursor = 0;

  // moveElement
  Value v_mE = {1};
  Address a_mE = 1;
  std::uint64_t k_mE = 0, m_mE = 0, n_mE = 0;
  EValue w_mE = {};
  bool b_mE = false;

  // return slots
  std::uint32_t ret_gA = 1;   // in {1,10,20,30,36,46,51}
  std::uint32_t ret_rA = 0;   // in {0,59,77,90}
  std::uint32_t ret_ref = 10; // in {10,20,30,36,46,51}
  std::uint32_t ret_nT = 30;  // in {30,46}

  std::uint32_t script_pos = 0;
  ProcStats stats;

  friend bool operator==(const ProcState&, const ProcState&) = default;
};

// An operation that ran to completion, with the value/flag it returned.
// Excluded from state serialization: it records history, not behaviour.
struct CompletedOp {
  std::uint32_t process = 0;
  WorkItem item;
  Value found = {};  // Find
  bool suc = false;  // Erase/Insert
};

struct ModelConfig {
  std::uint32_t P = 2;
  std::uint64_t initial_size = 32;
  std::uint64_t initial_bound = 0; // 0 = derive from size
  std::vector<Script> scripts;     // padded/truncated to P entries
  Mixer mixer = mix64;
};

struct ModelState {
  std::uint32_t P = 0;
  Mixer mixer = mix64;

  // shared: registry of 2P slots, 1-based (element 0 unused)
  std::uint32_t curr_ind = 1;
  std::vector<TableId> H;
  std::vector<std::uint64_t> busy;
  std::vector<std::uint64_t> prot;
  std::vector<std::uint32_t> next;
  HeapModel heap;

  // ghosts
  AbstractMap X;
  std::vector<EValue> Y;

  std::vector<ProcState> proc;    // process p lives at proc[p-1]
  std::vector<Script> scripts;    // immutable after init
  std::vector<std::deque<std::uint32_t>> forced_slots; // test hook for the slot scan

  std::vector<CompletedOp> completed;

  ProcState& at(std::uint32_t p) { return proc[p - 1]; }
  const ProcState& at(std::uint32_t p) const { return proc[p - 1]; }
  std::uint32_t slots() const { return 2 * P; }
};

ModelState model_init(const ModelConfig& cfg);

// Exact byte image of everything the transition relation can observe
// (completed-op history excluded). Equal strings == equal behaviours.
std::string serialize(const ModelState& s);
std::uint64_t state_hash(const ModelState& s);

// Human-readable dump (JSON) for traces and violation reports.
std::string dump_json(const ModelState& s);

// True when p sits at the main loop with nothing left to run.
bool script_done(const ModelState& s, std::uint32_t p);

// A process is enabled when the statement at its pc is well defined in s
// (tables it dereferences exist, counters it decrements are positive, probe
// lengths match). Unreachable states can disable a process; that is a
// soundness failure the explorer reports, not a disproof.
bool enabled(const ModelState& s, std::uint32_t p, std::string* why = nullptr);

// Execute one atomic statement of process p. Returns the label executed.
int step(ModelState& s, std::uint32_t p);

} // namespace lfht
