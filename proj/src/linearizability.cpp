#include "lfht/linearizability.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace lfht {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::Find: return "find";
    case OpKind::Erase: return "delete";
    case OpKind::Insert: return "insert";
    case OpKind::Assign: return "assign";
    case OpKind::Release: return "release";
  }
  return "?";
}

bool carries_addr(OpKind k) { return k == OpKind::Find || k == OpKind::Erase; }

// Replays one op against the map. A complete op must reproduce its recorded
// result; a pending op takes whatever effect the map dictates.
bool apply_op(AbstractMap& x, const HistoryOp& op) {
  switch (op.item.kind) {
    case OpKind::Find:
      return !op.complete || spec_find(x, op.item.addr) == op.found;
    case OpKind::Erase: {
      bool suc = spec_delete(x, op.item.addr);
      return !op.complete || suc == op.suc;
    }
    case OpKind::Insert: {
      bool suc = spec_insert(x, op.item.value);
      return !op.complete || suc == op.suc;
    }
    case OpKind::Assign:
      spec_assign(x, op.item.value);
      return true;
    case OpKind::Release:
      return false;
  }
  return false;
}

std::string map_image(const AbstractMap& x) {
  std::vector<Address> sup = x.support();
  std::sort(sup.begin(), sup.end());
  std::string out;
  for (Address a : sup) out += num(a) + ":" + num(x.get(a).bits) + ";";
  return out;
}

std::size_t peak_concurrency(const History& h) {
  std::size_t open = 0, peak = 0;
  for (const HistoryEvent& e : h) {
    if (e.kind == EventKind::Invoke) {
      peak = std::max(peak, ++open);
    } else if (open > 0) {
      --open;
    }
  }
  return peak;
}

} // namespace

std::string collect_ops(const History& h, std::vector<HistoryOp>* out) {
  out->clear();
  std::uint64_t last_time = 0;
  bool first = true;
  std::unordered_map<std::uint32_t, std::size_t> open; // process -> op index
  for (std::size_t n = 0; n < h.size(); ++n) {
    const HistoryEvent& e = h[n];
    std::string at = "event " + num(n);
    if (!first && e.time <= last_time)
      return at + ": time " + num(e.time) + " does not increase";
    first = false;
    last_time = e.time;
    if (e.process == 0) return at + ": process 0";
    if (e.item.kind == OpKind::Release) return at + ": release ops carry no events";
    auto it = open.find(e.process);
    if (e.kind == EventKind::Invoke) {
      if (it != open.end())
        return at + ": p" + num(e.process) + " invokes while an op is open";
      HistoryOp op;
      op.process = e.process;
      op.item = e.item;
      op.invoked = e.time;
      open.emplace(e.process, out->size());
      out->push_back(op);
    } else {
      if (it == open.end())
        return at + ": p" + num(e.process) + " responds with no open op";
      HistoryOp& op = (*out)[it->second];
      if (op.item.kind != e.item.kind || op.item.addr != e.item.addr ||
          !(op.item.value == e.item.value))
        return at + ": response does not match the open " + op_name(op.item.kind);
      op.responded = e.time;
      op.complete = true;
      op.found = e.found;
      op.suc = e.suc;
      open.erase(it);
    }
  }
  return "";
}

CheckResult check_linearizable(const History& h, const CheckOptions& opt) {
  CheckResult r;
  std::vector<HistoryOp> ops;
  std::string err = collect_ops(h, &ops);
  if (!err.empty()) {
    r.refusal = "malformed history: " + err;
    return r;
  }
  std::size_t op_cap = std::min<std::size_t>(opt.max_ops, 64);
  if (ops.size() > op_cap) {
    r.refusal = "window holds " + num(ops.size()) + " ops; the limit is " + num(op_cap);
    return r;
  }
  std::size_t peak = peak_concurrency(h);
  if (peak > opt.max_concurrent) {
    r.refusal = "window holds " + num(peak) + " concurrent ops; the limit is " +
                num(opt.max_concurrent);
    return r;
  }

  std::uint64_t all_complete = 0;
  std::vector<std::uint64_t> preds(ops.size(), 0);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].complete) all_complete |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < ops.size(); ++j)
      if (j != i && ops[j].complete && ops[j].responded < ops[i].invoked)
        preds[i] |= std::uint64_t{1} << j;
  }

  // Depth-first over (ordered set, map) pairs. The map and the still-open
  // precedence constraints are all that the remaining search depends on, so
  // a revisited pair needs no second look: in first-hit mode its whole
  // subtree already failed, and in collect mode it was already swept.
  std::unordered_set<std::string> visited;
  std::map<std::string, AbstractMap> ends;
  std::vector<std::size_t> order;
  bool witnessed = false;

  std::function<bool(std::uint64_t, const AbstractMap&)> search =
      [&](std::uint64_t mask, const AbstractMap& x) -> bool {
    r.states_searched++;
    if (!visited.insert(num(mask) + "|" + map_image(x)).second) return false;
    bool done = (mask & all_complete) == all_complete;
    if (done) {
      if (!witnessed) {
        witnessed = true;
        r.witness = order;
      }
      if (!opt.collect_end_maps) return true;
      ends.emplace(map_image(x), x);
    }
    bool hit = done;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((mask & bit) || (preds[i] & ~mask)) continue;
      AbstractMap y = x;
      if (!apply_op(y, ops[i])) continue;
      order.push_back(i);
      bool sub = search(mask | bit, y);
      order.pop_back();
      if (sub) {
        if (!opt.collect_end_maps) return true;
        hit = true;
      }
    }
    return hit;
  };

  r.linearizable = search(0, opt.initial);
  for (auto& [img, m] : ends) r.end_maps.push_back(std::move(m));
  return r;
}

CheckResult check_linearizable_brute(const History& h) {
  CheckResult r;
  std::vector<HistoryOp> ops;
  std::string err = collect_ops(h, &ops);
  if (!err.empty()) {
    r.refusal = "malformed history: " + err;
    return r;
  }
  if (ops.size() > 8) {
    r.refusal = "the enumerator takes at most 8 ops, got " + num(ops.size());
    return r;
  }
  std::vector<std::size_t> complete, pending;
  for (std::size_t i = 0; i < ops.size(); ++i)
    (ops[i].complete ? complete : pending).push_back(i);

  for (std::uint32_t sub = 0; sub < (1u << pending.size()); ++sub) {
    std::vector<std::size_t> chosen = complete;
    for (std::size_t b = 0; b < pending.size(); ++b)
      if (sub & (1u << b)) chosen.push_back(pending[b]);
    std::sort(chosen.begin(), chosen.end());
    do {
      r.states_searched++;
      bool ok = true;
      for (std::size_t x = 0; x < chosen.size() && ok; ++x)
        for (std::size_t y = x + 1; y < chosen.size() && ok; ++y) {
          const HistoryOp& late = ops[chosen[y]];
          if (late.complete && late.responded < ops[chosen[x]].invoked) ok = false;
        }
      if (!ok) continue;
      AbstractMap m;
      for (std::size_t i : chosen)
        if (!apply_op(m, ops[i])) {
          ok = false;
          break;
        }
      if (ok) {
        r.linearizable = true;
        r.witness = chosen;
        return r;
      }
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return r;
}

std::vector<History> split_at_quiescence(const History& h) {
  std::vector<History> out;
  History cur;
  std::size_t open = 0;
  for (const HistoryEvent& e : h) {
    cur.push_back(e);
    if (e.kind == EventKind::Invoke) {
      open++;
    } else if (open > 0 && --open == 0) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

ChainReport check_history(const History& h, const CheckOptions& opt) {
  ChainReport rep;
  std::vector<History> windows = split_at_quiescence(h);
  rep.windows = windows.size();
  std::vector<AbstractMap> starts{opt.initial};
  for (std::size_t w = 0; w < windows.size(); ++w) {
    std::map<std::string, AbstractMap> ends;
    bool any = false;
    for (const AbstractMap& m0 : starts) {
      CheckOptions o = opt;
      o.initial = m0;
      o.collect_end_maps = true;
      CheckResult res = check_linearizable(windows[w], o);
      rep.states_searched += res.states_searched;
      if (!res.checked()) {
        rep.refusal = "window " + num(w) + ": " + res.refusal;
        return rep;
      }
      if (!res.linearizable) continue;
      any = true;
      for (AbstractMap& m : res.end_maps) ends.emplace(map_image(m), std::move(m));
    }
    if (!any) {
      rep.failed_window = w;
      return rep;
    }
    if (ends.size() > 64) {
      rep.refusal = "window " + num(w) + " leaves " + num(ends.size()) +
                    " feasible maps; the chain limit is 64";
      return rep;
    }
    starts.clear();
    for (auto& [img, m] : ends) starts.push_back(std::move(m));
  }
  rep.linearizable = true;
  return rep;
}

std::string to_json_line(const HistoryEvent& e) {
  nlohmann::json j;
  j["time"] = e.time;
  j["process"] = e.process;
  j["kind"] = e.kind == EventKind::Invoke ? "invoke" : "respond";
  j["op"] = op_name(e.item.kind);
  if (carries_addr(e.item.kind)) {
    j["addr"] = e.item.addr;
  } else {
    j["value"] = e.item.value.bits;
  }
  if (e.kind == EventKind::Respond) {
    if (e.item.kind == OpKind::Find) j["found"] = e.found.bits;
    if (e.item.kind == OpKind::Erase || e.item.kind == OpKind::Insert) j["suc"] = e.suc;
  }
  return j.dump();
}

namespace {

// A value word as recorded in a history: plain, never old-tagged, never the
// deletion marker. Null is allowed where stated.
Value value_from_bits(std::uint64_t bits, bool null_ok, const char* field) {
  if (bits == 0) {
    if (!null_ok) throw std::invalid_argument(std::string(field) + " must be a value");
    return kNull;
  }
  Value v{bits};
  if ((bits & kOldBit) != 0 || bits == kDelBody || adr(v) == 0)
    throw std::invalid_argument(std::string(field) + " is not a plain value word");
  return v;
}

} // namespace

HistoryEvent event_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  HistoryEvent e;
  e.time = j.at("time").get<std::uint64_t>();
  e.process = j.at("process").get<std::uint32_t>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "invoke") {
    e.kind = EventKind::Invoke;
  } else if (kind == "respond") {
    e.kind = EventKind::Respond;
  } else {
    throw std::invalid_argument("unknown event kind: " + kind);
  }
  std::string op = j.at("op").get<std::string>();
  if (op == "find") {
    e.item.kind = OpKind::Find;
  } else if (op == "delete") {
    e.item.kind = OpKind::Erase;
  } else if (op == "insert") {
    e.item.kind = OpKind::Insert;
  } else if (op == "assign") {
    e.item.kind = OpKind::Assign;
  } else {
    throw std::invalid_argument("unknown op: " + op);
  }
  if (carries_addr(e.item.kind)) {
    e.item.addr = j.at("addr").get<Address>();
    if (e.item.addr == 0) throw std::invalid_argument("addr 0 is reserved");
  } else {
    e.item.value = value_from_bits(j.at("value").get<std::uint64_t>(), false, "value");
    e.item.addr = adr(e.item.value);
  }
  if (e.kind == EventKind::Respond) {
    if (e.item.kind == OpKind::Find)
      e.found = value_from_bits(j.at("found").get<std::uint64_t>(), true, "found");
    if (e.item.kind == OpKind::Erase || e.item.kind == OpKind::Insert)
      e.suc = j.at("suc").get<bool>();
  }
  return e;
}

void save_history(const History& h, std::ostream& out) {
  for (const HistoryEvent& e : h) out << to_json_line(e) << '\n';
}

History load_history(std::istream& in) {
  History h;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      h.push_back(event_from_json_line(line));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("history line " + num(n) + ": " + ex.what());
    }
  }
  return h;
}

std::string describe(const HistoryOp& op) {
  std::string out = "p" + num(op.process) + " " + op_name(op.item.kind) + "(";
  out += carries_addr(op.item.kind) ? num(op.item.addr) : num(op.item.value.bits);
  out += ")";
  if (!op.complete) return out + " pending";
  switch (op.item.kind) {
    case OpKind::Find:
      return out + " -> " + (is_null(op.found) ? "null" : num(op.found.bits));
    case OpKind::Erase:
    case OpKind::Insert:
      return out + (op.suc ? " -> true" : " -> false");
    default:
      return out;
  }
}

} // namespace lfht
