// A hash map shared by up to P registered processes, open-addressed over a
// heap of fixed-size tables. When a table fills past its bound, some process
// claims a registry slot, publishes a larger replacement, and everyone helps
// migrate; old tables are reclaimed through the busy/protection counters.
// No operation takes a lock, and every shared access is one sequentially
// consistent atomic step, mirroring the interpreted model's transitions.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "lfht/encoding.hpp"
#include "lfht/linearizability.hpp"
#include "lfht/live/control.hpp"
#include "lfht/live/heap.hpp"
#include "lfht/model/policy.hpp"

namespace lfht {

struct MapConfig {
  std::uint32_t P = 2;               // maximum registered processes
  std::uint64_t initial_size = 32;   // slots in the first table
  std::uint64_t initial_bound = 0;   // 0 derives size - 2P - 1
  Mixer mixer = mix64;
  // Instrumented maps check counter underflow and registry indexes, and
  // deliver invocation/response events to per-handle recorders.
  bool instrumented = false;
};

class ConcurrentMap;

// A registered process's face of the map. One thread at a time per handle;
// distinct handles may run concurrently.
class ProcessHandle {
public:
  Value find(Address a);
  bool erase(Address a);
  bool insert(Value v);
  void assign(Value v);

  // Lets go of the registry slot between operations, so a parked handle
  // stops delaying table reclamation. The next operation re-acquires.
  void release();

  std::uint32_t id() const { return p_; }

  // Sink for this handle's invocation/response events; only instrumented
  // maps record. The sink runs on the handle's own thread.
  void set_recorder(std::function<void(const HistoryEvent&)> recorder) {
    recorder_ = std::move(recorder);
  }

  ProcessHandle(const ProcessHandle&) = delete;
  ProcessHandle& operator=(const ProcessHandle&) = delete;

private:
  friend class ConcurrentMap;
  ProcessHandle(ConcurrentMap& map, std::uint32_t p) : map_(&map), p_(p) {}

  void record_invoke(const WorkItem& item);
  void record_respond(const WorkItem& item, Value found, bool suc);

  ConcurrentMap* map_;
  std::uint32_t p_;
  std::uint32_t index_ = 0;        // registry slot currently accessed
  std::uint32_t scan_offset_ = 0;  // claim scan position, survives retries
  bool held_ = false;
  std::function<void(const HistoryEvent&)> recorder_;
};

class ConcurrentMap {
public:
  explicit ConcurrentMap(const MapConfig& cfg = {});

  ConcurrentMap(const ConcurrentMap&) = delete;
  ConcurrentMap& operator=(const ConcurrentMap&) = delete;

  // Hands out the next process identity, at most P of them. References stay
  // valid for the map's lifetime.
  ProcessHandle& register_process();

  std::uint32_t participants() const;
  const MapConfig& config() const { return cfg_; }

  std::uint64_t live_tables() const { return heap_.live_count(); }
  std::uint64_t peak_live_tables() const { return heap_.peak_live(); }
  // Completed current-table switches.
  std::uint64_t migrations() const { return migrations_.load(); }

  // Snapshot of the current table's contents. Call only while no operation
  // is in flight; concurrent mutation makes the walk meaningless.
  std::vector<std::pair<Address, Value>> entries() const;

  // Raw slot words of the current table under the same quiescence caveat,
  // for probe-layout inspection in tests.
  std::vector<EValue> snapshot_slots() const;

private:
  friend class ProcessHandle;

  Value do_find(ProcessHandle& hd, Address a);
  bool do_erase(ProcessHandle& hd, Address a);
  bool do_insert(ProcessHandle& hd, Value v);
  void do_assign(ProcessHandle& hd, Value v);

  void ensure_access(ProcessHandle& hd);
  void acquire(ProcessHandle& hd);
  void release_access(std::uint32_t i);
  void new_table(ProcessHandle& hd);
  void refresh_access(ProcessHandle& hd);
  void move_contents(ProcessHandle& hd, std::uint32_t i_mig, TableId h_mig);
  void move_element(ProcessHandle& hd, LiveTable& to, Value v);

  std::uint64_t tick() { return tick_.fetch_add(1) + 1; }

  MapConfig cfg_;
  LiveHeap heap_;
  SharedControl ctl_;
  std::atomic<std::uint64_t> tick_{0};
  std::atomic<std::uint64_t> migrations_{0};
  mutable std::mutex reg_mu_; // guards registration only
  std::vector<std::unique_ptr<ProcessHandle>> handles_;
};

} // namespace lfht
