// Builders for history events and a seeded generator of small, noisy
// histories. Generated results are drawn at random rather than replayed, so
// a sample mixes linearizable and non-linearizable cases; checkers under
// cross-validation must agree on every one.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lfht/linearizability.hpp"

namespace lfht::testsupport {

inline WorkItem w_find(Address a) {
  WorkItem w;
  w.kind = OpKind::Find;
  w.addr = a;
  return w;
}

inline WorkItem w_erase(Address a) {
  WorkItem w;
  w.kind = OpKind::Erase;
  w.addr = a;
  return w;
}

inline WorkItem w_insert(Value v) {
  WorkItem w;
  w.kind = OpKind::Insert;
  w.value = v;
  w.addr = adr(v);
  return w;
}

inline WorkItem w_assign(Value v) {
  WorkItem w;
  w.kind = OpKind::Assign;
  w.value = v;
  w.addr = adr(v);
  return w;
}

inline HistoryEvent inv(std::uint64_t t, std::uint32_t p, WorkItem w) {
  HistoryEvent e;
  e.time = t;
  e.process = p;
  e.kind = EventKind::Invoke;
  e.item = w;
  return e;
}

inline HistoryEvent resp_found(std::uint64_t t, std::uint32_t p, WorkItem w, Value found) {
  HistoryEvent e;
  e.time = t;
  e.process = p;
  e.kind = EventKind::Respond;
  e.item = w;
  e.found = found;
  return e;
}

inline HistoryEvent resp_suc(std::uint64_t t, std::uint32_t p, WorkItem w, bool suc) {
  HistoryEvent e;
  e.time = t;
  e.process = p;
  e.kind = EventKind::Respond;
  e.item = w;
  e.suc = suc;
  return e;
}

inline HistoryEvent resp(std::uint64_t t, std::uint32_t p, WorkItem w) {
  HistoryEvent e;
  e.time = t;
  e.process = p;
  e.kind = EventKind::Respond;
  e.item = w;
  return e;
}

// Well-formed random history: op_count invocations spread over P processes,
// interleaved at random, some left pending, every result a coin flip over a
// two-address universe.
inline History random_history(std::uint64_t seed, std::uint32_t P, std::size_t op_count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Address> addr(1, 2);
  std::uniform_int_distribution<Payload> pay(1, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  std::bernoulli_distribution coin;

  struct Open {
    bool active = false;
    WorkItem item;
  };
  std::vector<Open> open(P + 1);
  std::size_t invoked = 0;
  std::uint64_t t = 0;
  History h;

  while (true) {
    std::vector<std::pair<bool, std::uint32_t>> moves; // (is_response, process)
    for (std::uint32_t p = 1; p <= P; ++p) {
      if (open[p].active) {
        moves.emplace_back(true, p);
      } else if (invoked < op_count) {
        moves.emplace_back(false, p);
      }
    }
    if (moves.empty()) break;
    if (invoked == op_count && coin(rng)) break; // leave the rest pending
    auto [is_resp, p] = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    if (!is_resp) {
      WorkItem w;
      switch (kind(rng)) {
        case 0: w = w_find(addr(rng)); break;
        case 1: w = w_erase(addr(rng)); break;
        case 2: w = w_insert(make_value(addr(rng), pay(rng))); break;
        default: w = w_assign(make_value(addr(rng), pay(rng))); break;
      }
      h.push_back(inv(++t, p, w));
      open[p] = {true, w};
      invoked++;
      continue;
    }
    const WorkItem& w = open[p].item;
    switch (w.kind) {
      case OpKind::Find: {
        Value found = coin(rng) ? kNull : make_value(w.addr, pay(rng));
        h.push_back(resp_found(++t, p, w, found));
        break;
      }
      case OpKind::Erase:
      case OpKind::Insert:
        h.push_back(resp_suc(++t, p, w, coin(rng)));
        break;
      default:
        h.push_back(resp(++t, p, w));
        break;
    }
    open[p].active = false;
  }
  return h;
}

} // namespace lfht::testsupport
