// Concurrently usable heap of hash tables. Identifiers come from an atomic
// counter and are never reused; slot words support atomic load and
// single-word compare-and-swap; live/peak gauges keep the allocation bound
// checkable in stress runs. The access protocol guarantees nobody touches a
// table after its last releaser frees it, which is what licenses immediate
// physical deletion here.
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lfht/encoding.hpp"
#include "lfht/errors.hpp"
#include "lfht/heap.hpp"

namespace lfht {

class LiveTable {
public:
  LiveTable(std::uint64_t size_, std::uint64_t bound_)
      : size(size_), bound(bound_), slots_(size_) {}

  const std::uint64_t size;  // slot count, fixed at allocation
  const std::uint64_t bound; // occupancy threshold triggering replacement
  std::atomic<std::uint64_t> occ{0};  // slots ever claimed (includes del markers)
  std::atomic<std::uint64_t> dels{0}; // deletions recorded against this table

  EValue read(std::size_t k) const { return EValue{slots_[k].load()}; }
  void write(std::size_t k, EValue v) { slots_[k].store(v.bits); }
  bool cas(std::size_t k, EValue expect, EValue desired) {
    std::uint64_t e = expect.bits;
    return slots_[k].compare_exchange_strong(e, desired.bits);
  }

private:
  std::vector<std::atomic<std::uint64_t>> slots_;
};

class LiveHeap {
public:
  explicit LiveHeap(std::uint32_t P) : P_(P), segs_(new SegmentDir()) {}

  LiveHeap(const LiveHeap&) = delete;
  LiveHeap& operator=(const LiveHeap&) = delete;

  ~LiveHeap() {
    for (std::size_t s = 0; s < kMaxSegs; ++s) {
      Segment* seg = (*segs_)[s].load();
      if (!seg) continue;
      for (auto& slot : *seg) delete slot.load();
      delete seg;
    }
  }

  // Fresh identifier for a blank table. Requires room for the worst-case
  // occupancy overshoot (bound + 2P < size) and one probe home per process
  // (size >= P).
  TableId allocate(std::uint64_t size, std::uint64_t bound) {
    if (!(bound + 2 * P_ < size))
      throw std::invalid_argument("table bound + 2P must stay below size");
    if (size < P_) throw std::invalid_argument("table size must be at least P");
    TableId id = h_index_.fetch_add(1);
    segment_for(id)[id % kSegSize].store(new LiveTable(size, bound));
    std::uint64_t now = live_.fetch_add(1) + 1;
    std::uint64_t seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
    return id;
  }

  void deallocate(TableId id) {
    LiveTable* t = slot_of(id) ? slot_of(id)->exchange(nullptr) : nullptr;
    if (!t) throw ProtocolViolation("deallocate of absent table id");
    delete t;
    live_.fetch_sub(1);
  }

  LiveTable& at(TableId id) const {
    std::atomic<LiveTable*>* slot = slot_of(id);
    LiveTable* t = slot ? slot->load() : nullptr;
    if (!t) throw ProtocolViolation("access to absent table id");
    return *t;
  }

  bool contains(TableId id) const {
    std::atomic<LiveTable*>* slot = slot_of(id);
    return slot && slot->load() != nullptr;
  }

  std::uint64_t live_count() const { return live_.load(); }
  std::uint64_t peak_live() const { return peak_.load(); }
  TableId next_id() const { return h_index_.load(); }

private:
  static constexpr std::size_t kSegBits = 12;
  static constexpr std::size_t kSegSize = std::size_t{1} << kSegBits;
  static constexpr std::size_t kMaxSegs = std::size_t{1} << 16;
  using Segment = std::array<std::atomic<LiveTable*>, kSegSize>;
  using SegmentDir = std::array<std::atomic<Segment*>, kMaxSegs>;

  // Identifiers are dense, so id -> slot is two indexed loads; segments are
  // installed on demand and only ever appended.
  Segment& segment_for(TableId id) {
    std::size_t s = id >> kSegBits;
    if (s >= kMaxSegs) throw std::length_error("table identifier space exhausted");
    Segment* seg = (*segs_)[s].load();
    if (!seg) {
      auto fresh = std::make_unique<Segment>();
      Segment* expect = nullptr;
      if ((*segs_)[s].compare_exchange_strong(expect, fresh.get())) {
        seg = fresh.release();
      } else {
        seg = expect;
      }
    }
    return *seg;
  }

  std::atomic<LiveTable*>* slot_of(TableId id) const {
    std::size_t s = id >> kSegBits;
    if (id == 0 || s >= kMaxSegs) return nullptr;
    Segment* seg = (*segs_)[s].load();
    return seg ? &(*seg)[id % kSegSize] : nullptr;
  }

  std::uint32_t P_;
  std::atomic<TableId> h_index_{1};
  std::atomic<std::uint64_t> live_{0};
  std::atomic<std::uint64_t> peak_{0};
  std::unique_ptr<SegmentDir> segs_;
};

} // namespace lfht
