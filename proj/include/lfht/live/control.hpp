// The registry the processes coordinate through: 2P slots of table handles,
// busy and protection counters, replacement links, plus the current-index
// word. Every accessor is a single sequentially consistent atomic operation
// on one machine word, so each maps onto one step of the access protocol.
// Slots are 1-based; index 0 is never used.
#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lfht/errors.hpp"
#include "lfht/heap.hpp"

namespace lfht {

class SharedControl {
public:
  // Starts with slot 1 current, protected, and busy, ready to carry the
  // initial table. When instrumented, counter underflow and out-of-range
  // slot indexes raise ProtocolViolation; otherwise the protocol is trusted.
  SharedControl(std::uint32_t P, bool instrumented)
      : P_(P), instrumented_(instrumented), H_(2 * P + 1), busy_(2 * P + 1),
        prot_(2 * P + 1), next_(2 * P + 1) {
    if (P == 0) throw std::invalid_argument("P must be positive");
    busy_[1].store(1);
    prot_[1].store(1);
  }

  SharedControl(const SharedControl&) = delete;
  SharedControl& operator=(const SharedControl&) = delete;

  std::uint32_t slots() const { return 2 * P_; }

  std::uint32_t curr() const { return curr_.load(); }
  bool cas_curr(std::uint32_t expect, std::uint32_t to) {
    return curr_.compare_exchange_strong(expect, to);
  }

  TableId table(std::uint32_t i) const { return H_[check(i)].load(); }
  void publish_table(std::uint32_t i, TableId id) { H_[check(i)].store(id); }
  // Retires the slot's handle: H[i] drops from the expected handle to 0.
  bool cas_table_clear(std::uint32_t i, TableId expect) {
    return H_[check(i)].compare_exchange_strong(expect, 0);
  }

  std::uint32_t next(std::uint32_t i) const { return next_[check(i)].load(); }
  void reset_next(std::uint32_t i) { next_[check(i)].store(0); }
  // Links a replacement: next[i] moves from 0 to the claimed slot, and only
  // one linker can win.
  bool cas_next(std::uint32_t i, std::uint32_t to) {
    std::uint32_t zero = 0;
    return next_[check(i)].compare_exchange_strong(zero, to);
  }

  std::uint64_t busy(std::uint32_t i) const { return busy_[check(i)].load(); }
  void busy_inc(std::uint32_t i) { busy_[check(i)].fetch_add(1); }
  // Returns the post-decrement value; the releaser seeing 0 is the
  // deallocation candidate.
  std::uint64_t busy_dec(std::uint32_t i) { return dec(busy_[check(i)]); }
  // A freshly claimed slot starts with one busy unit, owned by the claimer.
  void claim_busy(std::uint32_t i) { busy_[check(i)].store(1); }

  std::uint64_t prot(std::uint32_t i) const { return prot_[check(i)].load(); }
  void prot_inc(std::uint32_t i) { prot_[check(i)].fetch_add(1); }
  std::uint64_t prot_dec(std::uint32_t i) { return dec(prot_[check(i)]); }
  // Test-and-set claim of an unprotected slot: prot[i] moves 0 -> 1.
  bool tas_prot(std::uint32_t i) {
    std::uint64_t zero = 0;
    return prot_[check(i)].compare_exchange_strong(zero, 1);
  }

private:
  std::uint64_t dec(std::atomic<std::uint64_t>& c) {
    std::uint64_t prev = c.fetch_sub(1);
    if (instrumented_ && prev == 0)
      throw ProtocolViolation("counter decremented below zero");
    return prev - 1;
  }

  std::uint32_t check(std::uint32_t i) const {
    if (instrumented_ && (i == 0 || i > 2 * P_))
      throw ProtocolViolation("registry index out of range");
    return i;
  }

  std::uint32_t P_;
  bool instrumented_;
  std::atomic<std::uint32_t> curr_{1};
  std::vector<std::atomic<TableId>> H_;
  std::vector<std::atomic<std::uint64_t>> busy_;
  std::vector<std::atomic<std::uint64_t>> prot_;
  std::vector<std::atomic<std::uint32_t>> next_;
};

} // namespace lfht
