// Command-line driver: schedule exploration over the interpreted model,
// threaded stress runs against the live map with optional history checking,
// and an informational throughput sweep. Reports are JSON with a versioned
// schema, written to stdout and optionally to a file. Exit codes: 0 clean,
// 1 a correctness violation was found, 2 bad usage or configuration.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <barrier>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lfht/explorer.hpp"
#include "lfht/linearizability.hpp"
#include "lfht/live/map.hpp"
#include "lfht/model/workload.hpp"
#include "lfht/spec_oracle.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "lfht-report/1";

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Report paths may come from the environment so CI can redirect them without
// touching the flag set; everything else is flags only.
std::string resolve_report_path(const std::string& path) {
  const char* dir = std::getenv("LFHT_REPORT_DIR");
  if (!dir || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

int emit(const json& report, const std::string& path) {
  std::cout << report.dump(2) << "\n";
  if (!path.empty()) {
    std::string full = resolve_report_path(path);
    std::ofstream out(full);
    if (!out) {
      std::cerr << "cannot write report to " << full << "\n";
      return 2;
    }
    out << report.dump(2) << "\n";
  }
  return 0;
}

json violation_json(const lfht::Counterexample& c) {
  json v;
  v["step"] = c.step_no;
  for (const lfht::Violation& x : c.violations) {
    v["checks"].push_back({{"id", x.id}, {"detail", x.detail}});
  }
  v["trace"] = c.trace;
  return v;
}

// ---- model ----

struct ModelArgs {
  std::uint32_t P = 2;
  std::uint64_t size = 8;
  std::uint64_t bound = 0; // 0 derives size - 2P - 1
  std::uint64_t seed = 1;
  std::uint64_t steps = 2000;
  std::uint64_t schedules = 1;
  std::uint64_t check_every = 1;
  std::uint64_t ops_per_proc = 0; // 0 derives from steps
  lfht::Address addresses = 8;
  bool adversarial = false;
  bool exhaustive = false;
  bool identity_mix = false;
  std::uint64_t budget = 200000;
  std::string script_a, script_b;
  std::vector<std::string> scripts;
  std::vector<std::string> invariants;
  std::string trace_path, report_path;
};

int run_model(const ModelArgs& a) {
  lfht::ModelConfig cfg;
  cfg.P = a.P;
  cfg.initial_size = a.size;
  cfg.initial_bound = a.bound;
  if (a.identity_mix) cfg.mixer = lfht::identity_mix;

  std::vector<std::string> script_text = a.scripts;
  if (script_text.empty()) {
    if (!a.script_a.empty()) script_text.push_back(a.script_a);
    if (!a.script_b.empty()) script_text.push_back(a.script_b);
  }
  if (a.exhaustive && script_text.empty()) {
    std::cerr << "--exhaustive needs explicit scripts; the state space of "
                 "generated workloads is unbounded\n";
    return 2;
  }
  for (const std::string& s : script_text) cfg.scripts.push_back(lfht::parse_script(s));
  if (cfg.scripts.empty()) {
    std::uint64_t len = a.ops_per_proc ? a.ops_per_proc
                                       : std::max<std::uint64_t>(1, a.steps / (10 * a.P));
    for (std::uint32_t p = 1; p <= a.P; ++p) {
      cfg.scripts.push_back(lfht::random_script(a.seed * 1000003 + p, len, {}, 1, a.addresses));
    }
  }

  json report;
  report["schema"] = kSchema;
  report["command"] = "model";
  report["config"] = {{"P", a.P},         {"size", a.size},       {"bound", a.bound},
                      {"seed", a.seed},   {"steps", a.steps},     {"schedules", a.schedules},
                      {"exhaustive", a.exhaustive}, {"scripts", script_text.size()}};
  report["violations"] = json::array();
  Clock::time_point t0 = Clock::now();

  bool bad = false;
  if (a.exhaustive) {
    lfht::ExhaustiveOptions opt;
    opt.budget = a.budget;
    opt.subset = a.invariants;
    lfht::ExhaustiveReport r;
    try {
      r = lfht::run_exhaustive(cfg, opt);
    } catch (const lfht::BudgetExceeded& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    report["states"] = r.states_explored;
    report["steps"] = r.steps_executed;
    report["merges"] = r.merges;
    report["terminals"] = r.terminal_count;
    for (const lfht::Counterexample& c : r.violations)
      report["violations"].push_back(violation_json(c));
    report["progress_failures"] = r.progress_failures;
    report["postcondition_failures"] = r.postcondition_failures;
    report["restore_failures"] = r.restore_failures;
    bad = !r.ok();
  } else {
    std::uint64_t states = 0, steps = 0, ops = 0;
    bool all_finished = true;
    std::vector<lfht::Counterexample> traces;
    json progress = json::array();
    for (std::uint64_t i = 0; i < a.schedules; ++i) {
      lfht::WalkOptions opt;
      opt.seed = a.seed + i;
      opt.max_steps = a.steps;
      opt.check_every = a.check_every;
      opt.adversarial = a.adversarial;
      opt.subset = a.invariants;
      lfht::WalkReport r = lfht::run_random(cfg, opt);
      states += r.states_visited;
      steps += r.steps_taken;
      ops += r.ops_completed;
      all_finished = all_finished && r.finished_scripts;
      for (const lfht::Counterexample& c : r.violations) {
        json v = violation_json(c);
        v["schedule_seed"] = opt.seed;
        report["violations"].push_back(v);
        traces.push_back(c);
      }
      for (const std::string& f : r.progress_failures) progress.push_back(f);
      if (!r.ok()) bad = true;
    }
    report["states"] = states;
    report["steps"] = steps;
    report["ops"] = ops;
    report["all_scripts_finished"] = all_finished;
    report["progress_failures"] = progress;

    if (!a.trace_path.empty() && !traces.empty()) {
      json tj = json::array();
      for (const lfht::Counterexample& c : traces) {
        json v = violation_json(c);
        v["state"] = json::parse(c.state_json);
        tj.push_back(v);
      }
      std::ofstream out(resolve_report_path(a.trace_path));
      out << tj.dump(2) << "\n";
    }
  }

  report["wallclock_ms"] = ms_since(t0);
  int rc = emit(report, a.report_path);
  if (rc != 0) return rc;
  return bad ? 1 : 0;
}

// ---- stress ----

struct StressArgs {
  std::uint32_t threads = 2;
  std::uint32_t P = 0; // 0 means threads
  std::uint64_t ops = 10000;
  std::uint64_t size = 64;
  std::uint64_t bound = 0;
  lfht::Address addresses = 16;
  std::uint64_t seed = 1;
  double w_find = 0.25, w_insert = 0.40, w_erase = 0.20, w_assign = 0.15;
  bool history = false;
  std::uint64_t window = 4; // ops per thread between quiescent points
  std::string history_out, report_path;
};

struct StressWorker {
  lfht::History recorded;
  std::string error;
  std::uint64_t completed = 0;
  std::uint64_t mismatches = 0;
};

int run_stress(const StressArgs& a) {
  std::uint32_t P = a.P ? a.P : a.threads;
  if (a.threads == 0 || a.threads > P) {
    std::cerr << "need 1 <= threads <= P\n";
    return 2;
  }
  if (a.history && (a.threads > 8 || a.threads * a.window > 64)) {
    std::cerr << "history windows must stay within 8 concurrent ops and 64 ops total\n";
    return 2;
  }

  lfht::MapConfig cfg;
  cfg.P = P;
  cfg.initial_size = a.size;
  cfg.initial_bound = a.bound;
  cfg.instrumented = true;
  lfht::ConcurrentMap map(cfg);

  std::vector<lfht::ProcessHandle*> handles;
  for (std::uint32_t t = 0; t < a.threads; ++t) handles.push_back(&map.register_process());

  std::vector<StressWorker> workers(a.threads);
  // The lone-thread run doubles as an oracle check: results must match the
  // reference map op for op.
  lfht::ReferenceMap ref;
  bool compare = a.threads == 1;

  std::uint64_t window = a.history ? a.window : a.ops;
  std::uint64_t rounds = (a.ops + window - 1) / window;
  std::barrier sync(static_cast<std::ptrdiff_t>(a.threads));

  Clock::time_point t0 = Clock::now();
  std::vector<std::thread> pool;
  for (std::uint32_t t = 0; t < a.threads; ++t) {
    pool.emplace_back([&, t] {
      StressWorker& me = workers[t];
      try {
        lfht::ProcessHandle& hd = *handles[t];
        if (a.history) {
          hd.set_recorder([&me](const lfht::HistoryEvent& e) { me.recorded.push_back(e); });
        }
        std::mt19937_64 rng(a.seed * 65599 + t);
        std::discrete_distribution<int> pick({a.w_find, a.w_erase, a.w_insert, a.w_assign});
        std::uniform_int_distribution<lfht::Address> addr(1, a.addresses);
        std::uniform_int_distribution<lfht::Payload> pay(1, 100);
        std::uint64_t done = 0;
        for (std::uint64_t round = 0; round < rounds; ++round) {
          for (std::uint64_t i = 0; i < window && done < a.ops; ++i, ++done) {
            lfht::Address x = addr(rng);
            switch (pick(rng)) {
            case 0: {
              lfht::Value got = hd.find(x);
              if (compare && got != ref.find(x)) me.mismatches++;
              break;
            }
            case 1: {
              bool suc = hd.erase(x);
              if (compare && suc != ref.erase(x)) me.mismatches++;
              break;
            }
            case 2: {
              lfht::Value v = lfht::make_value(x, pay(rng));
              bool suc = hd.insert(v);
              if (compare && suc != ref.insert(v)) me.mismatches++;
              break;
            }
            default: {
              lfht::Value v = lfht::make_value(x, pay(rng));
              hd.assign(v);
              if (compare) ref.assign(v);
              break;
            }
            }
            me.completed++;
          }
          hd.release();
          if (a.history) sync.arrive_and_wait();
        }
      } catch (const std::exception& e) {
        me.error = e.what();
        if (a.history) sync.arrive_and_drop();
      }
    });
  }
  for (auto& t : pool) t.join();
  double wall = ms_since(t0);

  json report;
  report["schema"] = kSchema;
  report["command"] = "stress";
  report["config"] = {{"threads", a.threads}, {"P", P},          {"ops", a.ops},
                      {"size", a.size},       {"bound", a.bound}, {"addresses", a.addresses},
                      {"seed", a.seed},       {"history", a.history}};
  json violations = json::array();

  std::uint64_t total = 0, mismatches = 0;
  for (const StressWorker& w : workers) {
    total += w.completed;
    mismatches += w.mismatches;
    if (!w.error.empty()) violations.push_back({{"kind", "exception"}, {"detail", w.error}});
  }
  if (compare) {
    report["sequential_agreement"] = mismatches == 0;
    if (mismatches > 0) {
      violations.push_back({{"kind", "oracle_divergence"},
                            {"detail", std::to_string(mismatches) +
                                           " results diverged from the reference map"}});
    }
  }
  report["ops"] = total;
  report["wallclock_ms"] = wall;
  report["ops_per_sec"] = wall > 0 ? total / (wall / 1000.0) : 0.0;
  report["migrations"] = map.migrations();
  report["peak_live_tables"] = map.peak_live_tables();
  report["live_tables"] = map.live_tables();
  if (map.peak_live_tables() > 2 * std::uint64_t{P}) {
    violations.push_back({{"kind", "memory_bound"},
                          {"detail", "peak live tables exceeded 2P"}});
  }

  if (a.history) {
    lfht::History merged;
    for (const StressWorker& w : workers)
      merged.insert(merged.end(), w.recorded.begin(), w.recorded.end());
    std::sort(merged.begin(), merged.end(),
              [](const lfht::HistoryEvent& x, const lfht::HistoryEvent& y) {
                return x.time < y.time;
              });
    if (!a.history_out.empty()) {
      std::ofstream out(resolve_report_path(a.history_out));
      lfht::save_history(merged, out);
    }
    lfht::ChainReport chain = lfht::check_history(merged);
    report["history_events"] = merged.size();
    report["windows"] = chain.windows;
    report["linearizable"] = chain.linearizable;
    if (!chain.checked()) {
      std::cerr << "history refused: " << chain.refusal << "\n";
      return 2;
    }
    if (!chain.linearizable) {
      violations.push_back({{"kind", "linearizability"},
                            {"detail", "window " + std::to_string(chain.failed_window) +
                                           " admits no order"}});
    }
  }

  report["violations"] = violations;
  int rc = emit(report, a.report_path);
  if (rc != 0) return rc;
  return violations.empty() ? 0 : 1;
}

// ---- bench ----

struct BenchArgs {
  std::vector<std::uint32_t> threads = {1, 2, 4};
  std::uint64_t duration_ms = 500;
  std::uint64_t size = 1024;
  lfht::Address addresses = 64;
  double w_find = 0.90, w_insert = 0.05, w_erase = 0.025, w_assign = 0.025;
  std::uint64_t seed = 1;
  std::string report_path;
};

int run_bench(const BenchArgs& a) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "bench";
  report["config"] = {{"duration_ms", a.duration_ms},
                      {"size", a.size},
                      {"addresses", a.addresses}};
  report["results"] = json::array();

  double base = 0;
  if (a.duration_ms > 0) {
    for (std::uint32_t t : a.threads) {
      lfht::MapConfig cfg;
      cfg.P = t;
      cfg.initial_size = a.size;
      lfht::ConcurrentMap map(cfg);
      std::vector<lfht::ProcessHandle*> handles;
      for (std::uint32_t w = 0; w < t; ++w) handles.push_back(&map.register_process());

      std::vector<std::uint64_t> counts(t, 0);
      std::vector<std::string> errors(t);
      Clock::time_point t0 = Clock::now();
      Clock::time_point deadline = t0 + std::chrono::milliseconds(a.duration_ms);
      std::vector<std::thread> pool;
      for (std::uint32_t w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
          try {
            lfht::ProcessHandle& hd = *handles[w];
            std::mt19937_64 rng(a.seed * 31 + w);
            std::discrete_distribution<int> pick({a.w_find, a.w_erase, a.w_insert, a.w_assign});
            std::uniform_int_distribution<lfht::Address> addr(1, a.addresses);
            while (Clock::now() < deadline) {
              for (int burst = 0; burst < 64; ++burst) {
                switch (pick(rng)) {
                case 0: hd.find(addr(rng)); break;
                case 1: hd.erase(addr(rng)); break;
                case 2: hd.insert(lfht::make_value(addr(rng), 1)); break;
                default: hd.assign(lfht::make_value(addr(rng), 1)); break;
                }
                counts[w]++;
              }
            }
            hd.release();
          } catch (const std::exception& e) {
            errors[w] = e.what();
          }
        });
      }
      for (auto& th : pool) th.join();
      double wall = ms_since(t0);
      std::uint64_t total = 0;
      for (std::uint64_t c : counts) total += c;
      for (const std::string& e : errors) {
        if (!e.empty()) {
          std::cerr << "bench worker failed: " << e << "\n";
          return 1;
        }
      }
      double rate = wall > 0 ? total / (wall / 1000.0) : 0.0;
      if (base == 0) base = rate;
      report["results"].push_back({{"threads", t},
                                   {"ops", total},
                                   {"wallclock_ms", wall},
                                   {"ops_per_sec", rate},
                                   {"speedup_vs_first", base > 0 ? rate / base : 0.0},
                                   {"migrations", map.migrations()},
                                   {"peak_live_tables", map.peak_live_tables()}});
    }
  }
  return emit(report, a.report_path);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"lock-free hash map: model exploration, stress runs, benchmarks"};
  app.require_subcommand(1);
  app.set_config("--config");

  ModelArgs m;
  CLI::App* model = app.add_subcommand("model", "explore the interleaving model");
  model->add_option("--p", m.P, "processes")->check(CLI::PositiveNumber);
  model->add_option("--size", m.size, "initial table size");
  model->add_option("--bound", m.bound, "initial occupancy bound (0 derives)");
  model->add_option("--seed", m.seed, "base schedule seed");
  model->add_option("--steps", m.steps, "steps per schedule");
  model->add_option("--schedules", m.schedules, "random schedules to run");
  model->add_option("--check-every", m.check_every, "invariant cadence in steps");
  model->add_option("--ops-per-proc", m.ops_per_proc, "generated script length");
  model->add_option("--addresses", m.addresses, "generated address range 1..N");
  model->add_flag("--adversarial", m.adversarial, "starve one process");
  model->add_flag("--exhaustive", m.exhaustive, "enumerate every interleaving");
  model->add_flag("--identity-mix", m.identity_mix, "predictable slot placement");
  model->add_option("--budget", m.budget, "exhaustive state budget");
  model->add_option("--script-a", m.script_a, "script for process 1");
  model->add_option("--script-b", m.script_b, "script for process 2");
  model->add_option("--script", m.scripts, "script per process, repeatable");
  model->add_option("--invariant", m.invariants, "restrict to these invariant ids");
  model->add_option("--trace", m.trace_path, "write violation traces here");
  model->add_option("--report", m.report_path, "write the JSON report here");

  StressArgs s;
  CLI::App* stress = app.add_subcommand("stress", "threaded run against the live map");
  stress->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
  stress->add_option("--p", s.P, "map capacity (default: threads)");
  stress->add_option("--ops", s.ops, "operations per thread");
  stress->add_option("--size", s.size, "initial table size");
  stress->add_option("--bound", s.bound, "initial occupancy bound (0 derives)");
  stress->add_option("--addresses", s.addresses, "address range 1..N");
  stress->add_option("--seed", s.seed, "workload seed");
  stress->add_option("--mix-find", s.w_find, "find weight");
  stress->add_option("--mix-insert", s.w_insert, "insert weight");
  stress->add_option("--mix-erase", s.w_erase, "erase weight");
  stress->add_option("--mix-assign", s.w_assign, "assign weight");
  stress->add_flag("--history", s.history, "record events and check linearizability");
  stress->add_option("--window", s.window, "ops per thread between quiescent points");
  stress->add_option("--history-out", s.history_out, "write the merged history here");
  stress->add_option("--report", s.report_path, "write the JSON report here");

  BenchArgs b;
  CLI::App* bench = app.add_subcommand("bench", "informational throughput sweep");
  bench->add_option("--threads", b.threads, "thread counts to sweep")->delimiter(',');
  bench->add_option("--duration-ms", b.duration_ms, "measurement time per point");
  bench->add_option("--size", b.size, "initial table size");
  bench->add_option("--addresses", b.addresses, "address range 1..N");
  bench->add_option("--mix-find", b.w_find, "find weight");
  bench->add_option("--mix-insert", b.w_insert, "insert weight");
  bench->add_option("--mix-erase", b.w_erase, "erase weight");
  bench->add_option("--mix-assign", b.w_assign, "assign weight");
  bench->add_option("--seed", b.seed, "workload seed");
  bench->add_option("--report", b.report_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (model->parsed()) return run_model(m);
    if (stress->parsed()) return run_stress(s);
    return run_bench(b);
  } catch (const lfht::ProtocolViolation& e) {
    std::cerr << "protocol violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
