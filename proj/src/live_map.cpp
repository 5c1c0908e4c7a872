// Threaded implementation of the shared map. Each function transcribes the
// interpreted model's transitions one atomic statement at a time: every load,
// store and compare-and-swap here corresponds to one labeled step in
// model_step.cpp, and local variables stand in for the per-process registers.
// Comments flag the few spots whose behavior is easy to get wrong: stale
// reads that keep probe loops going, compare-and-swap failures that retry the
// same slot, and counter moves that decide table reclamation.
#include "lfht/live/map.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfht/model/policy.hpp"

namespace lfht {

ConcurrentMap::ConcurrentMap(const MapConfig& cfg)
    : cfg_(cfg), heap_(cfg.P), ctl_(cfg.P, cfg.instrumented) {
  TableShape shape = initial_shape(cfg_.initial_size, cfg_.initial_bound, cfg_.P);
  ctl_.publish_table(1, heap_.allocate(shape.size, shape.bound));
}

ProcessHandle& ConcurrentMap::register_process() {
  std::lock_guard<std::mutex> g(reg_mu_);
  if (handles_.size() >= cfg_.P)
    throw std::logic_error("all P participants are registered");
  auto p = static_cast<std::uint32_t>(handles_.size() + 1);
  handles_.push_back(std::unique_ptr<ProcessHandle>(new ProcessHandle(*this, p)));
  return *handles_.back();
}

std::uint32_t ConcurrentMap::participants() const {
  std::lock_guard<std::mutex> g(reg_mu_);
  return static_cast<std::uint32_t>(handles_.size());
}

std::vector<std::pair<Address, Value>> ConcurrentMap::entries() const {
  std::vector<std::pair<Address, Value>> out;
  const LiveTable& t = heap_.at(ctl_.table(ctl_.curr()));
  for (std::uint64_t k = 0; k < t.size; ++k) {
    Value v = val(t.read(k));
    if (!is_null(v)) out.emplace_back(adr(v), v);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<EValue> ConcurrentMap::snapshot_slots() const {
  const LiveTable& t = heap_.at(ctl_.table(ctl_.curr()));
  std::vector<EValue> out;
  out.reserve(t.size);
  for (std::uint64_t k = 0; k < t.size; ++k) out.push_back(t.read(k));
  return out;
}

void ConcurrentMap::ensure_access(ProcessHandle& hd) {
  if (hd.held_) return;
  acquire(hd);
  hd.held_ = true;
}

// Announce interest in the current slot with prot, pin its table with busy,
// and double-check currency after each counter move; a stale slot is backed
// out of and the scan restarts.
void ConcurrentMap::acquire(ProcessHandle& hd) {
  for (;;) {
    hd.index_ = ctl_.curr();
    ctl_.prot_inc(hd.index_);
    if (hd.index_ != ctl_.curr()) {
      ctl_.prot_dec(hd.index_);
      continue;
    }
    ctl_.busy_inc(hd.index_);
    if (hd.index_ == ctl_.curr()) return;
    release_access(hd.index_);
  }
}

// Drop one busy unit on slot i; the releaser who sees busy reach zero while
// a table handle is still published races to retire the handle, and the
// winner deallocates. prot drops last so no claimer recycles the slot while
// this is in flight.
void ConcurrentMap::release_access(std::uint32_t i) {
  TableId h = ctl_.table(i);
  ctl_.busy_dec(i);
  if (h != 0 && ctl_.busy(i) == 0) {
    if (ctl_.cas_table_clear(i, h)) heap_.deallocate(h);
  }
  ctl_.prot_dec(i);
}

// Ensure the accessed slot has a replacement linked: claim a free registry
// slot by test-and-set on prot, stock it with a sized-up table, and race to
// link it. The loser unclaims through release_access, which frees its
// freshly stocked table. Ends by helping the migration along.
void ConcurrentMap::new_table(ProcessHandle& hd) {
  while (ctl_.next(hd.index_) == 0) {
    std::uint32_t i = scan_slot(hd.p_, hd.scan_offset_, cfg_.P);
    if (!ctl_.tas_prot(i)) {
      hd.scan_offset_++;
      continue;
    }
    ctl_.claim_busy(i);
    const LiveTable& cur = heap_.at(ctl_.table(hd.index_));
    TableShape shape = next_table_shape(cur.bound, cur.dels.load(), cfg_.P);
    ctl_.publish_table(i, heap_.allocate(shape.size, shape.bound));
    ctl_.reset_next(i);
    if (!ctl_.cas_next(hd.index_, i)) release_access(i);
  }
  refresh_access(hd);
}

// Called when an operation finds its table stale (an old tag, a done mark,
// or a fresh replacement link). Either the current index moved on, in which
// case access migrates to the new slot, or a drain is due and this process
// helps move the contents before retiring the old slot from currency.
void ConcurrentMap::refresh_access(ProcessHandle& hd) {
  for (;;) {
    if (hd.index_ != ctl_.curr()) {
      release_access(hd.index_);
      acquire(hd);
      return;
    }
    std::uint32_t i_mig = ctl_.next(hd.index_);
    ctl_.prot_inc(i_mig);
    if (hd.index_ != ctl_.curr()) {
      // Someone finished the switch between the two reads. The operation
      // resumes on its stale table and will divert again on the next old
      // or done word it meets.
      ctl_.prot_dec(i_mig);
      return;
    }
    ctl_.busy_inc(i_mig);
    TableId h_mig = ctl_.table(i_mig);
    if (hd.index_ == ctl_.curr()) move_contents(hd, i_mig, h_mig);
    release_access(i_mig);
  }
}

// Drain the accessed table into its replacement, then race to switch the
// current index over. Every helper walks all slots, starting at its own
// offset so helpers spread out; a slot is done once it carries the done
// mark. Losing the switch race is fine: the winner already moved currency.
void ConcurrentMap::move_contents(ProcessHandle& hd, std::uint32_t i_mig, TableId h_mig) {
  LiveTable& from = heap_.at(ctl_.table(hd.index_));
  LiveTable& to = heap_.at(h_mig);
  std::vector<std::uint8_t> pending(from.size, 1);
  std::uint64_t remaining = from.size;
  std::uint64_t cursor = move_start(hd.p_, from.size, cfg_.P);

  for (;;) {
    if (ctl_.curr() != hd.index_ || remaining == 0) {
      if (ctl_.cas_curr(hd.index_, i_mig)) {
        migrations_.fetch_add(1);
        ctl_.busy_dec(hd.index_);
        ctl_.prot_dec(hd.index_);
      }
      return;
    }
    std::uint64_t i = cursor;
    while (!pending[i]) i = (i + 1) % from.size;
    cursor = (i + 1) % from.size;
    EValue v = from.read(i);
    if (v == kDone) {
      pending[i] = 0;
      --remaining;
      continue;
    }
    // Freeze the slot under its old tag. A failed swap means someone else
    // got between the read and the tag; rescan the slot later.
    if (!from.cas(i, v, mark_old(v))) continue;
    if (!is_null(val(v))) move_element(hd, to, val(v));
    from.write(i, kDone);
    pending[i] = 0;
    --remaining;
  }
}

// Reinsert one frozen value into the replacement table. The probe stops on
// success, on meeting the same address (someone else already moved it), or
// once the current index moved on (the drain is over, so the value is
// guaranteed placed). A failed swap retries the same slot.
void ConcurrentMap::move_element(ProcessHandle& hd, LiveTable& to, Value v) {
  std::uint64_t n = 0;
  bool b = false;
  Address a = adr(v);
  std::uint64_t m = to.size;
  for (;;) {
    std::uint64_t k = probe_key(a, m, n, cfg_.mixer);
    EValue w = to.read(k);
    if (is_null(w)) {
      if (to.cas(k, kENull, to_evalue(v))) b = true;
    } else {
      ++n;
    }
    if (b || adr(w) == a || ctl_.curr() != hd.index_) break;
  }
  if (b) to.occ.fetch_add(1);
}

Value ConcurrentMap::do_find(ProcessHandle& hd, Address a) {
  TableId h = ctl_.table(hd.index_);
  std::uint64_t n = 0;
  std::uint64_t l = heap_.at(h).size;
  for (;;) {
    std::uint64_t k = probe_key(a, l, n, cfg_.mixer);
    EValue r = heap_.at(h).read(k);
    if (r == kDone) {
      refresh_access(hd);
      h = ctl_.table(hd.index_);
      n = 0;
      l = heap_.at(h).size;
      // The stale done word is neither null nor a match, so the probe
      // restarts on the refreshed table.
      continue;
    }
    ++n;
    if (is_null(r) || adr(r) == a) return val(r);
  }
}

bool ConcurrentMap::do_erase(ProcessHandle& hd, Address a) {
  TableId h = ctl_.table(hd.index_);
  bool suc = false;
  std::uint64_t l = heap_.at(h).size;
  std::uint64_t n = 0;
  for (;;) {
    std::uint64_t k = probe_key(a, l, n, cfg_.mixer);
    EValue r = heap_.at(h).read(k);
    if (oldp(r)) {
      refresh_access(hd);
      h = ctl_.table(hd.index_);
      l = heap_.at(h).size;
      n = 0;
      // The stale old-tagged word fails the exit test; probe anew.
      continue;
    }
    if (adr(r) == a) {
      // A failed swap leaves n alone: the same slot is re-read next turn.
      if (heap_.at(h).cas(k, r, kDel)) suc = true;
    } else {
      ++n;
    }
    if (suc || is_null(r)) break;
  }
  if (suc) heap_.at(h).dels.fetch_add(1);
  return suc;
}

bool ConcurrentMap::do_insert(ProcessHandle& hd, Value v) {
  Address a = adr(v);
  TableId h = ctl_.table(hd.index_);
  {
    const LiveTable& t = heap_.at(h);
    if (t.occ.load() > t.bound) {
      new_table(hd);
      h = ctl_.table(hd.index_);
    }
  }
  std::uint64_t n = 0;
  std::uint64_t l = heap_.at(h).size;
  bool suc = false;
  for (;;) {
    std::uint64_t k = probe_key(a, l, n, cfg_.mixer);
    EValue r = heap_.at(h).read(k);
    if (oldp(r)) {
      refresh_access(hd);
      h = ctl_.table(hd.index_);
      n = 0;
      l = heap_.at(h).size;
      // An old-tagged word carrying this address means the key is present
      // and mid-migration: the insert concludes unsuccessfully.
      if (suc || adr(r) == a) break;
      continue;
    }
    if (is_null(r)) {
      if (heap_.at(h).cas(k, kENull, to_evalue(v))) suc = true;
    } else {
      ++n;
    }
    if (suc || adr(r) == a) break;
  }
  if (suc) heap_.at(h).occ.fetch_add(1);
  return suc;
}

void ConcurrentMap::do_assign(ProcessHandle& hd, Value v) {
  Address a = adr(v);
  TableId h = ctl_.table(hd.index_);
  {
    const LiveTable& t = heap_.at(h);
    if (t.occ.load() > t.bound) {
      new_table(hd);
      h = ctl_.table(hd.index_);
    }
  }
  std::uint64_t n = 0;
  std::uint64_t l = heap_.at(h).size;
  bool suc = false;
  EValue r{};
  for (;;) {
    std::uint64_t k = probe_key(a, l, n, cfg_.mixer);
    r = heap_.at(h).read(k);
    if (oldp(r)) {
      refresh_access(hd);
      h = ctl_.table(hd.index_);
      n = 0;
      l = heap_.at(h).size;
      continue;
    }
    if (is_null(r) || adr(r) == a) {
      if (heap_.at(h).cas(k, r, to_evalue(v))) suc = true;
    } else {
      ++n;
    }
    if (suc) break;
  }
  // r still holds the word the swap displaced; a null one means the slot is
  // newly occupied.
  if (is_null(r)) heap_.at(h).occ.fetch_add(1);
}

namespace {

void check_address(Address a) {
  if (a == 0) throw std::invalid_argument("value address 0 is reserved");
}

void check_value(Value v) {
  if (adr(v) == 0) throw std::invalid_argument("value address 0 is reserved");
  if (v.bits & kOldBit) throw std::invalid_argument("payload exceeds 31 bits");
}

} // namespace

Value ProcessHandle::find(Address a) {
  check_address(a);
  WorkItem w{OpKind::Find, a, {}};
  record_invoke(w);
  map_->ensure_access(*this);
  Value r = map_->do_find(*this, a);
  record_respond(w, r, false);
  return r;
}

bool ProcessHandle::erase(Address a) {
  check_address(a);
  WorkItem w{OpKind::Erase, a, {}};
  record_invoke(w);
  map_->ensure_access(*this);
  bool suc = map_->do_erase(*this, a);
  record_respond(w, {}, suc);
  return suc;
}

bool ProcessHandle::insert(Value v) {
  check_value(v);
  WorkItem w{OpKind::Insert, adr(v), v};
  record_invoke(w);
  map_->ensure_access(*this);
  bool suc = map_->do_insert(*this, v);
  record_respond(w, {}, suc);
  return suc;
}

void ProcessHandle::assign(Value v) {
  check_value(v);
  WorkItem w{OpKind::Assign, adr(v), v};
  record_invoke(w);
  map_->ensure_access(*this);
  map_->do_assign(*this, v);
  record_respond(w, {}, true);
}

void ProcessHandle::release() {
  if (!held_) return;
  map_->release_access(index_);
  held_ = false;
}

void ProcessHandle::record_invoke(const WorkItem& item) {
  if (!recorder_ || !map_->cfg_.instrumented) return;
  HistoryEvent e;
  e.time = map_->tick();
  e.process = p_;
  e.kind = EventKind::Invoke;
  e.item = item;
  recorder_(e);
}

void ProcessHandle::record_respond(const WorkItem& item, Value found, bool suc) {
  if (!recorder_ || !map_->cfg_.instrumented) return;
  HistoryEvent e;
  e.time = map_->tick();
  e.process = p_;
  e.kind = EventKind::Respond;
  e.item = item;
  e.found = found;
  e.suc = suc;
  recorder_(e);
}

} // namespace lfht
