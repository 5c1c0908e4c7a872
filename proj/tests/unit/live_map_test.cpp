#include <doctest.h>

#include <algorithm>
#include <barrier>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lfht/linearizability.hpp"
#include "lfht/live/map.hpp"
#include "lfht/model/workload.hpp"
#include "lfht/spec_oracle.hpp"

using namespace lfht;

namespace {

std::vector<std::pair<Address, Value>> sorted_state(const AbstractMap& x) {
  std::vector<std::pair<Address, Value>> out;
  for (Address a : x.support()) out.emplace_back(a, x.get(a));
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

} // namespace

TEST_CASE("map construction validates its configuration") {
  MapConfig zero;
  zero.P = 0;
  CHECK_THROWS_AS(ConcurrentMap{zero}, std::invalid_argument);

  MapConfig tiny;
  tiny.P = 2;
  tiny.initial_size = 4; // derived bound 1 leaves no migration slack
  CHECK_THROWS_AS(ConcurrentMap{tiny}, std::invalid_argument);
}

TEST_CASE("registration hands out at most P handles") {
  ConcurrentMap map;
  ProcessHandle& h1 = map.register_process();
  ProcessHandle& h2 = map.register_process();
  CHECK(h1.id() == 1);
  CHECK(h2.id() == 2);
  CHECK(map.participants() == 2);
  CHECK_THROWS_AS(map.register_process(), std::logic_error);
}

TEST_CASE("operation arguments are validated before anything runs") {
  ConcurrentMap map;
  ProcessHandle& hd = map.register_process();
  CHECK_THROWS_AS(hd.find(0), std::invalid_argument);
  CHECK_THROWS_AS(hd.erase(0), std::invalid_argument);
  CHECK_THROWS_AS(hd.insert(Value{}), std::invalid_argument);
  CHECK_THROWS_AS(hd.assign(Value{kOldBit | 5}), std::invalid_argument);
}

TEST_CASE("a lone handle behaves like the oracle map") {
  ConcurrentMap map;
  ProcessHandle& hd = map.register_process();
  Value v = make_value(7, 3);
  CHECK(hd.find(7) == kNull);
  CHECK(hd.insert(v));
  CHECK_FALSE(hd.insert(make_value(7, 9)));
  CHECK(hd.find(7) == v);
  hd.assign(make_value(7, 4));
  CHECK(hd.find(7) == make_value(7, 4));
  CHECK(hd.erase(7));
  CHECK_FALSE(hd.erase(7));
  CHECK(hd.find(7) == kNull);
}

TEST_CASE("a scripted run matches the oracle map and recycles tables") {
  MapConfig cfg;
  cfg.P = 2;
  cfg.initial_size = 8; // derived bound 3 keeps replacement tables coming
  ConcurrentMap map(cfg);
  ProcessHandle& hd = map.register_process();
  ReferenceMap ref;

  Script script = random_script(4242, 3000, {}, 1, 12);
  for (const WorkItem& w : script) {
    switch (w.kind) {
    case OpKind::Find: CHECK(hd.find(w.addr) == ref.find(w.addr)); break;
    case OpKind::Erase: CHECK(hd.erase(w.addr) == ref.erase(w.addr)); break;
    case OpKind::Insert: CHECK(hd.insert(w.value) == ref.insert(w.value)); break;
    case OpKind::Assign:
      hd.assign(w.value);
      ref.assign(w.value);
      break;
    case OpKind::Release: hd.release(); break;
    }
    CHECK(map.live_tables() <= 4);
  }

  CHECK(map.migrations() > 0);
  CHECK(map.entries() == sorted_state(ref.state()));
  hd.release();
  CHECK(map.live_tables() == 1);
  CHECK(map.peak_live_tables() <= 4);
}

TEST_CASE("instrumented maps record a linearizable event stream") {
  MapConfig cfg;
  cfg.P = 2;
  cfg.initial_size = 8;
  cfg.instrumented = true;
  ConcurrentMap map(cfg);
  ProcessHandle& hd = map.register_process();

  History h;
  hd.set_recorder([&h](const HistoryEvent& e) { h.push_back(e); });
  for (const WorkItem& w : random_script(7, 60, {}, 1, 6)) {
    switch (w.kind) {
    case OpKind::Find: hd.find(w.addr); break;
    case OpKind::Erase: hd.erase(w.addr); break;
    case OpKind::Insert: hd.insert(w.value); break;
    case OpKind::Assign: hd.assign(w.value); break;
    case OpKind::Release: hd.release(); break;
    }
  }

  std::vector<HistoryOp> ops;
  REQUIRE(collect_ops(h, &ops) == "");
  CHECK(ops.size() * 2 == h.size());
  ChainReport rep = check_history(h);
  REQUIRE_MESSAGE(rep.checked(), rep.refusal);
  CHECK(rep.linearizable);
}

TEST_CASE("recorders stay silent on uninstrumented maps") {
  ConcurrentMap map;
  ProcessHandle& hd = map.register_process();
  History h;
  hd.set_recorder([&h](const HistoryEvent& e) { h.push_back(e); });
  hd.insert(make_value(1, 1));
  hd.find(1);
  CHECK(h.empty());
}

TEST_CASE("parallel handles produce a linearizable history") {
  MapConfig cfg;
  cfg.P = 3;
  cfg.initial_size = 8; // derived bound 1: nearly every round migrates
  cfg.instrumented = true;
  ConcurrentMap map(cfg);

  const int kThreads = 3;
  const int kRounds = 8;
  const int kOpsPerRound = 4;
  std::vector<ProcessHandle*> handles;
  for (int w = 0; w < kThreads; ++w) handles.push_back(&map.register_process());

  std::vector<History> recorded(kThreads);
  std::vector<std::string> errors(kThreads);
  std::barrier sync(kThreads);
  std::vector<std::thread> workers;
  for (int w = 0; w < kThreads; ++w) {
    workers.emplace_back([&, w] {
      try {
        ProcessHandle& hd = *handles[w];
        hd.set_recorder([&recorded, w](const HistoryEvent& e) { recorded[w].push_back(e); });
        std::mt19937_64 rng(1000 + w);
        std::uniform_int_distribution<Address> addr(1, 4);
        std::uniform_int_distribution<Payload> pay(1, 3);
        std::uniform_int_distribution<int> kind(0, 3);
        for (int round = 0; round < kRounds; ++round) {
          for (int i = 0; i < kOpsPerRound; ++i) {
            switch (kind(rng)) {
            case 0: hd.find(addr(rng)); break;
            case 1: hd.erase(addr(rng)); break;
            case 2: hd.insert(make_value(addr(rng), pay(rng))); break;
            default: hd.assign(make_value(addr(rng), pay(rng))); break;
            }
          }
          hd.release();
          // Every thread is between operations here, so the merged history
          // goes quiescent at each round boundary and stays checkable.
          sync.arrive_and_wait();
        }
      } catch (const std::exception& e) {
        errors[w] = e.what();
        sync.arrive_and_drop();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const std::string& e : errors) CHECK(e == "");

  History merged;
  for (const History& h : recorded) merged.insert(merged.end(), h.begin(), h.end());
  std::sort(merged.begin(), merged.end(),
            [](const HistoryEvent& a, const HistoryEvent& b) { return a.time < b.time; });
  REQUIRE(merged.size() == std::size_t{kThreads} * kRounds * kOpsPerRound * 2);

  ChainReport rep = check_history(merged);
  REQUIRE_MESSAGE(rep.checked(), rep.refusal);
  CHECK(rep.linearizable);
  CHECK(map.peak_live_tables() <= 6);
}

TEST_CASE("contended growth keeps every insert and the table budget") {
  MapConfig cfg;
  cfg.P = 3;
  cfg.initial_size = 8;
  ConcurrentMap map(cfg);

  const int kThreads = 3;
  const int kPerThread = 40;
  std::vector<ProcessHandle*> handles;
  for (int w = 0; w < kThreads; ++w) handles.push_back(&map.register_process());

  std::vector<std::string> errors(kThreads);
  std::vector<int> accepted(kThreads, 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < kThreads; ++w) {
    workers.emplace_back([&, w] {
      try {
        ProcessHandle& hd = *handles[w];
        for (int i = 1; i <= kPerThread; ++i) {
          Address a = static_cast<Address>(100 * w + i);
          if (hd.insert(make_value(a, 1))) accepted[w]++;
        }
        hd.release();
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const std::string& e : errors) CHECK(e == "");
  for (int got : accepted) CHECK(got == kPerThread); // all addresses were distinct

  auto state = map.entries();
  REQUIRE(state.size() == std::size_t{kThreads} * kPerThread);
  for (const auto& [a, v] : state) CHECK(v == make_value(a, 1));
  CHECK(map.migrations() > 0);
  CHECK(map.peak_live_tables() <= 6);
  CHECK(map.live_tables() == 1);
}
