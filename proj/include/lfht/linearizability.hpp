// Operation histories and a small-window linearizability checker. A history
// is a time-ordered list of invocation/response events; the checker searches
// for a total order of the operations, consistent with real-time precedence,
// whose sequential replay reproduces every recorded result. Operations left
// pending at the end of a window may be ordered anywhere or dropped. The
// search is the brute force over admissible orders, memoized on the pair
// (set of ordered ops, map content), so its verdict matches the unmemoized
// enumerator by construction.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lfht/model/workload.hpp"
#include "lfht/spec_oracle.hpp"

namespace lfht {

enum class EventKind : std::uint8_t { Invoke, Respond };

// One recorded event. Times are a global tick: strictly increasing across
// the whole history, so precedence between events is never ambiguous.
// Response events repeat the arguments of their invocation; result fields
// are meaningful on responses only (found for finds, suc for the mutators).
struct HistoryEvent {
  std::uint64_t time = 0;
  std::uint32_t process = 0;
  EventKind kind = EventKind::Invoke;
  WorkItem item;
  Value found = {};
  bool suc = false;

  friend bool operator==(const HistoryEvent&, const HistoryEvent&) = default;
};

using History = std::vector<HistoryEvent>;

// An operation assembled from its invocation and, when one was recorded, its
// response. Ops without a response are pending.
struct HistoryOp {
  std::uint32_t process = 0;
  WorkItem item;
  std::uint64_t invoked = 0;
  std::uint64_t responded = 0;
  bool complete = false;
  Value found = {};
  bool suc = false;
};

// Groups a history's events into operations, ordered by invocation time.
// Returns a non-empty description when the history is malformed: times not
// strictly increasing, a second invocation while one is open on the same
// process, a response without (or disagreeing with) an open invocation, or a
// release item, which never appears in operation histories.
std::string collect_ops(const History& h, std::vector<HistoryOp>* out);

struct CheckOptions {
  // Upper bound on simultaneously open operations; wider windows are refused
  // rather than searched.
  std::size_t max_concurrent = 8;
  // Upper bound on operations per window (the searched set is a 64-bit mask).
  std::size_t max_ops = 64;
  // Map content at the start of the window.
  AbstractMap initial;
  // Keep searching past the first admissible order and collect every map the
  // window can leave behind. Needed when windows are chained.
  bool collect_end_maps = false;
};

struct CheckResult {
  bool linearizable = false;
  // Non-empty when the history was refused instead of checked: malformed
  // input or a window beyond the configured limits.
  std::string refusal;
  // On success, indexes into the collect_ops order, in linearization order.
  // Dropped pending ops do not appear.
  std::vector<std::size_t> witness;
  // With collect_end_maps: the distinct maps reachable by admissible orders.
  std::vector<AbstractMap> end_maps;
  std::uint64_t states_searched = 0;

  bool checked() const { return refusal.empty(); }
};

CheckResult check_linearizable(const History& h, const CheckOptions& opt = {});

// Unmemoized reference: enumerates every precedence-consistent permutation of
// every completion of the pending ops. Factorial; refuses more than 8 ops.
CheckResult check_linearizable_brute(const History& h);

// Splits a history at quiescence points (instants with no operation open),
// so each piece can be checked on its own.
std::vector<History> split_at_quiescence(const History& h);

// Splits the history at quiescence points and checks the pieces in sequence.
// Each window must linearize from some map a previous window could have left
// behind, so concurrent last writers stay ambiguous until a later window
// settles them.
struct ChainReport {
  bool linearizable = false;
  std::string refusal;
  std::size_t windows = 0;
  std::size_t failed_window = 0; // set when !linearizable with empty refusal
  std::uint64_t states_searched = 0;

  bool checked() const { return refusal.empty(); }
};

ChainReport check_history(const History& h, const CheckOptions& opt = {});

// One event per line, e.g.
//   {"time":3,"process":1,"kind":"invoke","op":"insert","value":4294967303}
//   {"time":4,"process":1,"kind":"respond","op":"insert","value":4294967303,"suc":true}
// Finds and deletes carry "addr" instead of "value"; find responses carry
// "found" (0 = null). load_history throws std::invalid_argument with the
// offending line number.
std::string to_json_line(const HistoryEvent& e);
HistoryEvent event_from_json_line(const std::string& line);
void save_history(const History& h, std::ostream& out);
History load_history(std::istream& in);

// Readable one-line form of an op, for witness and report output.
std::string describe(const HistoryOp& op);

} // namespace lfht
