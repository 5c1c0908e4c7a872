// Value-semantics heap used by the model interpreter: tables live under
// integer identifiers that are handed out once and never reused, so a stale
// identifier can be told apart from a reallocated one.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lfht/encoding.hpp"
#include "lfht/errors.hpp"

namespace lfht {

using TableId = std::uint64_t; // 0 = none

struct Hashtable {
  std::uint64_t size = 0;  // slot count, fixed at allocation
  std::uint64_t bound = 0; // occupancy threshold triggering replacement
  std::uint64_t occ = 0;   // slots ever claimed (includes del markers)
  std::uint64_t dels = 0;  // deletions recorded against this table
  std::vector<EValue> table;

  friend bool operator==(const Hashtable&, const Hashtable&) = default;
};

class HeapModel {
public:
  // Fresh identifier for a blank table. Requires room for the worst-case
  // occupancy overshoot (bound + 2P < size) and one probe home per process
  // (size >= P).
  TableId allocate(std::uint64_t size, std::uint64_t bound, std::uint64_t P) {
    if (!(bound + 2 * P < size)) throw std::invalid_argument("table bound + 2P must stay below size");
    if (size < P) throw std::invalid_argument("table size must be at least P");
    TableId id = h_index_++;
    Hashtable t;
    t.size = size;
    t.bound = bound;
    t.table.assign(size, kENull);
    heap_.emplace(id, std::move(t));
    return id;
  }

  void deallocate(TableId h) {
    auto it = heap_.find(h);
    if (it == heap_.end()) throw ProtocolViolation("deallocate of absent table id");
    heap_.erase(it);
  }

  bool contains(TableId h) const { return heap_.find(h) != heap_.end(); }

  Hashtable& at(TableId h) {
    auto it = heap_.find(h);
    if (it == heap_.end()) throw ProtocolViolation("access to absent table id");
    return it->second;
  }

  const Hashtable& at(TableId h) const {
    auto it = heap_.find(h);
    if (it == heap_.end()) throw ProtocolViolation("access to absent table id");
    return it->second;
  }

  std::uint64_t live_count() const { return heap_.size(); }
  TableId next_id() const { return h_index_; }

  // Test hook: place a table under an arbitrary identifier, bypassing the
  // allocation rules. Lets corruption tests build states the protocol can
  // never reach.
  void inject(TableId h, Hashtable t) { heap_.insert_or_assign(h, std::move(t)); }

  // Live tables in identifier order; used by invariant checks and dumps.
  const std::map<TableId, Hashtable>& entries() const { return heap_; }

  friend bool operator==(const HeapModel&, const HeapModel&) = default;

private:
  TableId h_index_ = 1;
  std::map<TableId, Hashtable> heap_;
};

} // namespace lfht
