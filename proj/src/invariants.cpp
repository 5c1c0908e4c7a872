// The safety catalogue. Every check is a total predicate on one ModelState
// snapshot and reports at most one violation (the first witness found).
//
// Checks that must read a table dereference it defensively: when the table
// is absent or an index is out of range, the check that asserts liveness or
// bounds (He2-He6, de13, mC6, mE8, mi12, ...) reports it, and dependent
// checks skip rather than pile on duplicate reports.
//
// Quantified addresses range over the finite set of addresses reachable from
// the state: X's support, Y, every live table slot, the per-process address
// and value registers, and 0. Any other address satisfies every quantified
// check vacuously, since X maps it to null and no slot carries it.
#include "lfht/invariants.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lfht {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool pcin(const ProcState& q, int lo, int hi) { return lo <= q.pc && q.pc <= hi; }

bool find_match(EValue r, Address a) { return is_null(r) || adr(r) == a; }

// Guard shared by He4, Cu1, rA7 and nT13: the process relies on H(index)
// pointing at a live table, except while releasing that same slot.
bool table_guard(const ProcState& q) {
  return pcin(q, 1, 58) || (q.pc > 65 && !(pcin(q, 67, 72) && q.i_rA == q.index));
}

// Guard shared by pr3, Ne4, Ne5, nT10 and mi10: the process holds a claim on
// registry slot index.
bool index_guard(const ProcState& q) {
  return pcin(q, 1, 58) || (q.pc >= 62 && q.pc != 65);
}

// True while the process is parked inside getAccess / releaseAccess /
// refresh (or newTable, when nt is the matching resume label) on behalf of
// an operation that resumes at a label satisfying ret. Used by the counter
// checks and the Deleting / Inserting predicates.
template <class F>
bool ret_closure(const ProcState& q, F ret, u32 nt = 0) {
  if (pcin(q, 59, 65) && ret(q.ret_gA)) return true;
  if (pcin(q, 67, 72)) {
    if (q.ret_rA == 59 && ret(q.ret_gA)) return true;
    if (q.ret_rA == 90 && ret(q.ret_ref)) return true;
    if (nt != 0 && q.ret_rA == 77 && q.ret_nT == nt) return true;
  }
  if (nt != 0 && pcin(q, 77, 84) && q.ret_nT == nt) return true;
  if (q.pc >= 90 && ret(q.ret_ref)) return true;
  return false;
}

bool deleting(const ProcState& q) {
  return pcin(q, 18, 21) || ret_closure(q, [](u32 v) { return v == 20; });
}

bool inserting(const ProcState& q) {
  return pcin(q, 35, 37) || ret_closure(q, [](u32 v) { return v == 36; });
}

std::string num(u64 v) { return std::to_string(v); }

std::string show(Value v) {
  if (is_null(v)) return "null";
  return "a" + num(adr(v)) + "#" + num(payload(v));
}

std::string show(EValue e) {
  if (is_null(e)) return "null";
  if (is_del(e)) return "del";
  if (e == kDone) return "done";
  std::string body = show(val(e));
  return oldp(e) ? "old(" + body + ")" : body;
}

std::string pw(u32 p) { return "p=" + num(p); }

// Everything the checks share for one snapshot: the current and replacement
// tables, the address domain and the helper-set cardinalities.
struct Ctx {
  explicit Ctx(const ModelState& st) : s(st) {}

  const ModelState& s;
  u32 twoP = 0;
  u32 curr = 0;
  bool curr_in_range = false;
  TableId cur_id = 0;
  const Hashtable* cur = nullptr;
  u64 cur_size = 0;
  u32 nxt_slot = 0;
  TableId nxt_id = 0;
  const Hashtable* nxt = nullptr;
  u64 y_nonnull = 0;
  std::vector<Address> addrs;
  SetCounts n;

  bool slot_ok(u64 i) const { return 1 <= i && i <= twoP; }
  const Hashtable* tbl(TableId id) const {
    return s.heap.contains(id) ? &s.heap.at(id) : nullptr;
  }
  EValue y_at(u64 k) const { return k < s.Y.size() ? s.Y[k] : kENull; }
  Value x_of(Address a) const { return s.X.get(a); }
};

struct Rep {
  const char* id;
  std::vector<Violation>* out;
  bool hit = false;
  void fail(std::string detail) {
    if (hit) return;
    hit = true;
    out->push_back({id, std::move(detail)});
  }
};

std::vector<Address> collect_addrs(const ModelState& s) {
  std::vector<Address> v;
  v.push_back(0);
  for (Address a : s.X.support()) v.push_back(a);
  for (EValue e : s.Y)
    if (adr(e) != 0) v.push_back(adr(e));
  for (const auto& [id, t] : s.heap.entries()) {
    (void)id;
    for (EValue e : t.table)
      if (adr(e) != 0) v.push_back(adr(e));
  }
  for (const ProcState& q : s.proc) {
    const Address locals[] = {q.a_fi,        q.a_del,       q.a_ins,
                              q.a_ass,       q.a_mE,        adr(q.r_fi),
                              adr(q.r_del),  adr(q.r_ins),  adr(q.r_ass),
                              adr(q.v_ins),  adr(q.v_ass),  adr(q.rS_fi),
                              adr(q.v_mC),   adr(q.v_mE),   adr(q.w_mE)};
    for (Address a : locals) v.push_back(a);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Bump the counter for every distinct in-range slot in the target list; a
// process can hold units on two slots at once but never two on one slot.
void bump(std::vector<u64>& set, u32 twoP, const u32* targets, int cnt) {
  for (int i = 0; i < cnt; ++i) {
    bool dup = false;
    for (int j = 0; j < i; ++j) dup = dup || targets[j] == targets[i];
    if (!dup && 1 <= targets[i] && targets[i] <= twoP) set[targets[i]]++;
  }
}

SetCounts compute_counts(const Ctx& c) {
  const ModelState& s = c.s;
  SetCounts n;
  n.pr_set1.assign(c.twoP + 1, 0);
  n.pr_set2.assign(c.twoP + 1, 0);
  n.pr_set3.assign(c.twoP + 1, 0);
  n.pr_set4.assign(c.twoP + 1, 0);
  n.bu_set1.assign(c.twoP + 1, 0);
  n.bu_set2.assign(c.twoP + 1, 0);

  for (const auto& [id, t] : s.heap.entries()) {
    (void)t;
    if (id < s.heap.next_id()) n.nb_set1++;
  }
  for (u32 i = 1; i <= c.twoP; ++i) {
    bool member = s.H[i] != 0;
    for (u32 p = 1; !member && p <= s.P; ++p) {
      const ProcState& q = s.at(p);
      member = q.pc == 71 && q.i_rA == i;
    }
    if (member) n.nb_set2++;
  }

  for (u64 k = 0; k < c.cur_size; ++k) {
    EValue e = c.y_at(k);
    if (e == kDel) n.de_set1++;
    if (!is_null(val(e))) n.oc_set4++;
  }
  if (c.nxt != nullptr) {
    for (EValue e : c.nxt->table) {
      if (e == kDel) n.de_set3++;
      if (!is_null(val(e))) n.oc_set5++;
      if (!is_null(e)) n.oc_set6++;
    }
  }

  for (u32 p = 1; p <= s.P; ++p) {
    const ProcState& q = s.at(p);

    if (q.index == c.curr && q.pc == 25 && q.suc_del) n.de_set2++;

    bool oc1 = q.index != c.curr || pcin(q, 30, 41) || pcin(q, 46, 57) ||
               (pcin(q, 59, 65) && q.ret_gA >= 30) ||
               (pcin(q, 67, 72) && ((q.ret_rA == 59 && q.ret_gA >= 30) ||
                                    (q.ret_rA == 90 && q.ret_ref >= 30))) ||
               ((q.pc == 90 || pcin(q, 104, 105)) && q.ret_ref >= 30);
    if (oc1) n.oc_set1++;
    if (q.pc >= 125 && q.b_mE && q.to_mC == c.cur_id) n.oc_set2++;
    if (q.index == c.curr && ((q.pc == 41 && q.suc_ins) ||
                              (q.pc == 57 && is_null(q.r_ass))))
      n.oc_set3++;
    if (q.pc >= 125 && q.b_mE && c.nxt_slot != 0 && q.to_mC == c.nxt_id)
      n.oc_set7++;

    if (q.pc != 0 && q.pc != 59 && q.pc != 60)
      bump(n.pr_set1, c.twoP, &q.index, 1);
    {
      u32 t[4];
      int cnt = 0;
      if (pcin(q, 104, 105)) t[cnt++] = q.index;
      if (pcin(q, 67, 72) && q.i_rA != q.index) t[cnt++] = q.i_rA;
      if (pcin(q, 81, 84)) t[cnt++] = q.i_nT;
      if (q.pc >= 97) t[cnt++] = q.i_mig;
      bump(n.pr_set2, c.twoP, t, cnt);
    }
    {
      u32 t[4];
      int cnt = 0;
      if (pcin(q, 61, 65) || pcin(q, 104, 105)) t[cnt++] = q.index;
      if (q.pc == 72) t[cnt++] = q.i_rA;
      if (pcin(q, 81, 82)) t[cnt++] = q.i_nT;
      if (pcin(q, 97, 98)) t[cnt++] = q.i_mig;
      bump(n.pr_set3, c.twoP, t, cnt);
    }
    {
      u32 t[2];
      int cnt = 0;
      if (pcin(q, 61, 65)) t[cnt++] = q.index;
      if (pcin(q, 97, 98)) t[cnt++] = q.i_mig;
      bump(n.pr_set4, c.twoP, t, cnt);
    }
    bool bu1 = (pcin(q, 1, 58) || (62 < q.pc && q.pc <= 68)) && q.pc != 65;
    bu1 = bu1 || (pcin(q, 69, 72) && q.ret_rA > 59) || q.pc > 72;
    if (bu1) bump(n.bu_set1, c.twoP, &q.index, 1);
    {
      u32 t[4];
      int cnt = 0;
      if (q.pc == 104) t[cnt++] = q.index;
      if (pcin(q, 67, 68) && q.i_rA != q.index) t[cnt++] = q.i_rA;
      if (pcin(q, 82, 84)) t[cnt++] = q.i_nT;
      if (q.pc >= 100) t[cnt++] = q.i_mig;
      bump(n.bu_set2, c.twoP, t, cnt);
    }
  }
  return n;
}

Ctx make_ctx(const ModelState& s) {
  Ctx c(s);
  c.twoP = 2 * s.P;
  c.curr = s.curr_ind;
  c.curr_in_range = c.slot_ok(c.curr);
  if (c.curr_in_range) {
    c.cur_id = s.H[c.curr];
    c.cur = c.tbl(c.cur_id);
    if (c.cur != nullptr) c.cur_size = c.cur->size;
    c.nxt_slot = s.next[c.curr];
    if (c.slot_ok(c.nxt_slot)) {
      c.nxt_id = s.H[c.nxt_slot];
      c.nxt = c.tbl(c.nxt_id);
    }
  }
  for (u64 k = 0; k < c.cur_size; ++k)
    if (!is_null(c.y_at(k))) c.y_nonnull++;
  c.addrs = collect_addrs(s);
  c.n = compute_counts(c);
  return c;
}

// ---- encoding axioms ----

void ck_Ax1(const Ctx& c, Rep& r) {
  auto bad = [](Value v) { return is_null(v) != (adr(v) == 0); };
  for (Address a : c.s.X.support())
    if (bad(c.x_of(a))) return r.fail("X(" + num(a) + ")=" + show(c.x_of(a)));
  for (u64 k = 0; k < c.s.Y.size(); ++k)
    if (bad(val(c.s.Y[k]))) return r.fail("Y[" + num(k) + "]=" + show(c.s.Y[k]));
  for (const auto& [id, t] : c.s.heap.entries())
    for (u64 k = 0; k < t.table.size(); ++k)
      if (bad(val(t.table[k])))
        return r.fail("table " + num(id) + " slot " + num(k) + "=" + show(t.table[k]));
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    const Value locals[] = {q.v_ins, q.v_ass, q.rS_fi, q.v_mE,
                            val(q.r_fi), val(q.r_del), val(q.r_ins),
                            val(q.r_ass), val(q.v_mC), val(q.w_mE)};
    for (Value v : locals)
      if (bad(v)) return r.fail(pw(p) + " register " + show(v));
  }
}

void ck_Ax2(const Ctx& c, Rep& r) {
  for (const auto& [id, t] : c.s.heap.entries()) {
    if (t.size == 0) continue;
    for (Address a : c.addrs)
      for (u64 k = 0; k < t.size; ++k)
        if (probe_key(a, t.size, k, c.s.mixer) >= t.size)
          return r.fail("a=" + num(a) + " l=" + num(t.size) + " k=" + num(k) +
                        " (table " + num(id) + ")");
  }
}

void ck_Ax3(const Ctx& c, Rep& r) {
  std::vector<u64> sizes;
  for (const auto& [id, t] : c.s.heap.entries()) {
    (void)id;
    if (t.size != 0) sizes.push_back(t.size);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<u64> seen;
  u64 stamp = 0;
  for (u64 l : sizes) {
    seen.assign(l, 0);
    for (Address a : c.addrs) {
      ++stamp;
      for (u64 k = 0; k < l; ++k) {
        u64 slot = probe_key(a, l, k, c.s.mixer);
        if (seen[slot] == stamp)
          return r.fail("a=" + num(a) + " l=" + num(l) +
                        " revisits slot " + num(slot) + " at k=" + num(k));
        seen[slot] = stamp;
      }
    }
  }
}

// ---- results agree with the abstract-map actions ----

void ck_Co1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 14 && !(val(q.r_fi) == q.rS_fi))
      return r.fail(pw(p) + " returns " + show(val(q.r_fi)) +
                    ", specified " + show(q.rS_fi));
  }
}

void ck_Co2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 25 || q.pc == 26) && q.suc_del != q.sucS_del)
      return r.fail(pw(p) + " suc=" + num(q.suc_del) + " specified " + num(q.sucS_del));
  }
}

void ck_Co3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 41 || q.pc == 42) && q.suc_ins != q.sucS_ins)
      return r.fail(pw(p) + " suc=" + num(q.suc_ins) + " specified " + num(q.sucS_ins));
  }
}

// ---- exactly one abstract-map action per completed operation ----

void ck_Cn1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).pc == 14 && c.s.at(p).cnt_fi != 1)
      return r.fail(pw(p) + " cnt=" + num(c.s.at(p).cnt_fi));
}

void ck_Cn2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 25 || q.pc == 26) && q.cnt_del != 1)
      return r.fail(pw(p) + " cnt=" + num(q.cnt_del));
  }
}

void ck_Cn3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 41 || q.pc == 42) && q.cnt_ins != 1)
      return r.fail(pw(p) + " cnt=" + num(q.cnt_ins));
  }
}

void ck_Cn4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).pc == 57 && c.s.at(p).cnt_ass != 1)
      return r.fail(pw(p) + " cnt=" + num(c.s.at(p).cnt_ass));
}

void ck_Cn5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 6, 7) && q.cnt_fi != 0)
      return r.fail(pw(p) + " cnt=" + num(q.cnt_fi));
  }
}

void ck_Cn6(const Ctx& c, Rep& r) {
  auto ret10 = [](u32 v) { return v == 10; };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 8, 13) || ret_closure(q, ret10))) continue;
    u64 want = find_match(q.r_fi, q.a_fi) ? 1 : 0;
    if (q.cnt_fi != want)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " cnt=" + num(q.cnt_fi) +
                    " expected " + num(want));
  }
}

void ck_Cn7(const Ctx& c, Rep& r) {
  auto ret20 = [](u32 v) { return v == 20; };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!((pcin(q, 16, 21) && q.pc != 18) || ret_closure(q, ret20))) continue;
    if (q.cnt_del != 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " cnt=" + num(q.cnt_del));
  }
}

void ck_Cn8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 18) continue;
    u64 want = is_null(q.r_del) ? 1 : 0;
    if (q.cnt_del != want)
      return r.fail(pw(p) + " cnt=" + num(q.cnt_del) + " expected " + num(want));
  }
}

void ck_Cn9(const Ctx& c, Rep& r) {
  auto ret30 = [](u32 v) { return v == 30; };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 28, 33) || ret_closure(q, ret30, 30))) continue;
    if (q.cnt_ins != 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " cnt=" + num(q.cnt_ins));
  }
}

void ck_Cn10(const Ctx& c, Rep& r) {
  auto ret36 = [](u32 v) { return v == 36; };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 35, 37) || ret_closure(q, ret36))) continue;
    u64 want = (adr(q.r_ins) == q.a_ins || q.suc_ins) ? 1 : 0;
    if (q.cnt_ins != want)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " cnt=" + num(q.cnt_ins) +
                    " expected " + num(want));
  }
}

void ck_Cn11(const Ctx& c, Rep& r) {
  auto ret_ass = [](u32 v) { return v == 46 || v == 51; };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 44, 52) || ret_closure(q, ret_ass, 46))) continue;
    if (q.cnt_ass != 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " cnt=" + num(q.cnt_ass));
  }
}

// ---- no tables are lost ----

void ck_No1(const Ctx& c, Rep& r) {
  if (c.n.nb_set1 > c.twoP)
    r.fail(num(c.n.nb_set1) + " live tables, limit " + num(c.twoP));
}

void ck_No2(const Ctx& c, Rep& r) {
  if (c.n.nb_set1 != c.n.nb_set2)
    r.fail(num(c.n.nb_set1) + " live tables vs " + num(c.n.nb_set2) +
           " reachable registry slots");
}

// ---- the heap ----

void ck_He1(const Ctx& c, Rep& r) {
  if (c.s.heap.contains(0)) r.fail("table id 0 is allocated");
}

void ck_He2(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i)
    if ((c.s.H[i] != 0) != c.s.heap.contains(c.s.H[i]))
      return r.fail("H[" + num(i) + "]=" + num(c.s.H[i]));
}

void ck_He3(const Ctx& c, Rep& r) {
  if (!c.curr_in_range) return r.fail("currInd=" + num(c.curr) + " out of range");
  if (c.cur == nullptr)
    r.fail("H[currInd]=" + num(c.cur_id) + " is not allocated");
}

void ck_He4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!table_guard(q)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (!c.s.heap.contains(c.s.H[q.index]))
      return r.fail(pw(p) + " pc=" + num(q.pc) + " H[index]=" + num(c.s.H[q.index]) +
                    " is not allocated");
  }
}

void ck_He5(const Ctx& c, Rep& r) {
  for (const auto& [id, t] : c.s.heap.entries())
    if (t.size < c.s.P)
      return r.fail("table " + num(id) + " size " + num(t.size) + " < P");
}

void ck_He6(const Ctx& c, Rep& r) {
  if (!c.curr_in_range || c.nxt_slot == 0) return;
  if (!c.slot_ok(c.nxt_slot))
    return r.fail("next[currInd]=" + num(c.nxt_slot) + " out of range");
  if (c.nxt == nullptr)
    r.fail("H[next[currInd]]=" + num(c.nxt_id) + " is not allocated");
}

// ---- table identifiers ----

void ck_Ha1(const Ctx& c, Rep& r) {
  if (c.s.heap.next_id() == 0) r.fail("identifier counter is 0");
}

void ck_Ha2(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i)
    if (c.s.H[i] >= c.s.heap.next_id())
      return r.fail("H[" + num(i) + "]=" + num(c.s.H[i]) +
                    " >= counter " + num(c.s.heap.next_id()));
}

void ck_Ha3(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i)
    for (u32 j = i + 1; j <= c.twoP; ++j)
      if (c.s.H[i] == c.s.H[j] && c.s.heap.contains(c.s.H[i]))
        return r.fail("slots " + num(i) + " and " + num(j) +
                      " share live table " + num(c.s.H[i]));
}

void ck_Ha4(const Ctx& c, Rep& r) {
  if (!c.curr_in_range) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.index == c.curr) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.H[q.index] == c.cur_id)
      return r.fail(pw(p) + " index=" + num(q.index) + " aliases the current table");
  }
}

// ---- the current table and its shadow Y ----

void ck_Cu1(const Ctx& c, Rep& r) {
  if (!c.curr_in_range) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!table_guard(q) || !c.slot_ok(q.index)) continue;
    if (c.s.H[q.index] == c.cur_id) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t == nullptr) continue;
    for (u64 k = 0; k < t->size; ++k)
      if (!(t->table[k] == kDone))
        return r.fail(pw(p) + " stale table " + num(c.s.H[q.index]) + " slot " +
                      num(k) + "=" + show(t->table[k]));
  }
}

void ck_Cu2(const Ctx& c, Rep& r) {
  if (c.cur != nullptr && c.y_nonnull >= c.cur_size)
    r.fail("Y holds " + num(c.y_nonnull) + " of " + num(c.cur_size) + " slots");
}

void ck_Cu3(const Ctx& c, Rep& r) {
  if (c.cur != nullptr && !(c.cur->bound + c.twoP < c.cur_size))
    r.fail("bound " + num(c.cur->bound) + " + " + num(c.twoP) +
           " !< size " + num(c.cur_size));
}

void ck_Cu4(const Ctx& c, Rep& r) {
  if (c.cur != nullptr && c.cur->dels + c.n.de_set2 != c.n.de_set1)
    r.fail("dels " + num(c.cur->dels) + " + pending " + num(c.n.de_set2) +
           " != " + num(c.n.de_set1) + " markers in Y");
}

void ck_retired(const Ctx&, Rep&) {}

void ck_Cu6(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  if (c.cur->occ + c.n.oc_set1 + c.n.oc_set2 > c.cur->bound + c.twoP)
    r.fail("occ " + num(c.cur->occ) + " + " + num(c.n.oc_set1) + " + " +
           num(c.n.oc_set2) + " > bound " + num(c.cur->bound) + " + " + num(c.twoP));
}

void ck_Cu7(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  if (c.y_nonnull != c.cur->occ + c.n.oc_set2 + c.n.oc_set3)
    r.fail(num(c.y_nonnull) + " non-null Y slots vs occ " + num(c.cur->occ) +
           " + " + num(c.n.oc_set2) + " + " + num(c.n.oc_set3));
}

void ck_Cu8(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.nxt_slot != 0) return;
  for (u64 k = 0; k < c.cur_size; ++k)
    if (oldp(c.cur->table[k]))
      return r.fail("slot " + num(k) + "=" + show(c.cur->table[k]) +
                    " tagged with no replacement pending");
}

void ck_Cu9(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u64 k = 0; k < c.cur_size; ++k)
    if (!oldp(c.cur->table[k]) && !(c.cur->table[k] == c.y_at(k)))
      return r.fail("slot " + num(k) + "=" + show(c.cur->table[k]) +
                    " but Y[" + num(k) + "]=" + show(c.y_at(k)));
}

void ck_Cu10(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u64 k = 0; k < c.cur_size; ++k) {
    EValue e = c.cur->table[k];
    if (oldp(e) && !is_null(val(e)) && !(val(e) == val(c.y_at(k))))
      return r.fail("slot " + num(k) + "=" + show(e) + " but Y[" + num(k) +
                    "]=" + show(c.y_at(k)));
  }
}

void ck_Cu11(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (Address a : c.addrs) {
    for (u64 n = 0; n < c.cur_size; ++n) {
      EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
      if (!find_match(e, a)) continue;
      if (!(c.x_of(a) == val(e)))
        r.fail("a=" + num(a) + " first match at n=" + num(n) + " holds " +
               show(e) + " but X(a)=" + show(c.x_of(a)));
      break;
    }
    if (r.hit) return;
  }
}

void ck_Cu12(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (Address a : c.addrs) {
    Value xa = c.x_of(a);
    if (is_null(xa)) continue;
    bool found_before = false;
    for (u64 n = 0; n < c.cur_size; ++n) {
      EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
      bool f = find_match(e, a);
      if (val(e) == xa && (found_before || !f))
        return r.fail("a=" + num(a) + " X(a) sits at n=" + num(n) +
                      " which is not the first match");
      found_before = found_before || f;
    }
  }
}

void ck_Cu13(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (Address a : c.addrs) {
    Value xa = c.x_of(a);
    if (is_null(xa)) continue;
    std::size_t a1 = kNone, a2 = kNone;
    for (u64 n = 0; n < c.cur_size; ++n) {
      EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
      if (!is_null(val(e)) && adr(e) == a) {
        if (a1 == kNone) a1 = n;
        else if (a2 == kNone) a2 = n;
      }
    }
    for (u64 n = 0; n < c.cur_size; ++n) {
      EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
      if (!(val(e) == xa)) continue;
      std::size_t other = (a1 != kNone && a1 != n) ? a1 : a2;
      if (other != kNone && other != n)
        return r.fail("a=" + num(a) + " X(a) at n=" + num(n) +
                      " but address also stored at n=" + num(other));
    }
  }
}

void ck_Cu14(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (Address a : c.addrs) {
    if (!is_null(c.x_of(a))) continue;
    for (u64 n = 0; n < c.cur_size; ++n) {
      EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
      if (!is_null(val(e)) && adr(e) == a)
        return r.fail("a=" + num(a) + " absent from X but stored at n=" + num(n));
    }
  }
}

void ck_Cu15(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (Address a : c.addrs) {
    Value xa = c.x_of(a);
    if (is_null(xa)) continue;
    bool present = false;
    for (u64 n = 0; n < c.cur_size && !present; ++n)
      present = val(c.y_at(probe_key(a, c.cur_size, n, c.s.mixer))) == xa;
    if (!present)
      return r.fail("a=" + num(a) + " X(a)=" + show(xa) + " not stored in Y");
  }
}

void ck_Cu16(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  std::unordered_set<u64> seen;
  for (u64 k = 0; k < c.cur_size; ++k) {
    Value v = val(c.y_at(k));
    if (is_null(v)) continue;
    if (!seen.insert(v.bits).second)
      return r.fail("value " + show(v) + " stored twice in Y");
  }
}

// ---- the replacement table ----

void ck_Ne1(const Ctx& c, Rep& r) {
  if (c.curr_in_range && c.nxt_slot == c.curr)
    r.fail("currInd and its successor are both " + num(c.curr));
}

void ck_Ne2(const Ctx& c, Rep& r) {
  if (!c.curr_in_range || c.nxt_slot == 0) return;
  if (!c.slot_ok(c.nxt_slot))
    return r.fail("next[currInd]=" + num(c.nxt_slot) + " out of range");
  if (c.s.next[c.nxt_slot] != 0)
    r.fail("next[" + num(c.nxt_slot) + "]=" + num(c.s.next[c.nxt_slot]));
}

void ck_Ne3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 1, 59) || (q.pc >= 62 && q.pc != 65))) continue;
    if (q.index == c.nxt_slot && c.nxt_slot != 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " works on the pending slot " +
                    num(c.nxt_slot));
  }
}

void ck_Ne4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!index_guard(q)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.next[q.index] == q.index)
      return r.fail(pw(p) + " slot " + num(q.index) + " is its own successor");
  }
}

void ck_Ne5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!index_guard(q) || !c.slot_ok(q.index)) continue;
    if (c.s.next[q.index] == 0 && q.index != c.curr)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " index=" + num(q.index) +
                    " has no successor yet is not current");
  }
}

void ck_Ne6(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr || c.cur == nullptr) return;
  i64 budget = static_cast<i64>(c.y_nonnull) - static_cast<i64>(c.cur->dels) -
               static_cast<i64>(c.n.de_set2);
  if (static_cast<i64>(c.n.oc_set6) > budget)
    r.fail(num(c.n.oc_set6) + " claimed replacement slots > " + num(c.y_nonnull) +
           " - " + num(c.cur->dels) + " - " + num(c.n.de_set2));
}

void ck_Ne7(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr || c.cur == nullptr) return;
  i64 lhs = static_cast<i64>(c.cur->bound) - static_cast<i64>(c.cur->dels) +
            static_cast<i64>(c.twoP);
  if (lhs > static_cast<i64>(c.nxt->bound))
    r.fail("survivor budget " + std::to_string(lhs) + " > replacement bound " +
           num(c.nxt->bound));
}

void ck_Ne8(const Ctx& c, Rep& r) {
  if (c.nxt != nullptr && !(c.nxt->bound + c.twoP < c.nxt->size))
    r.fail("bound " + num(c.nxt->bound) + " + " + num(c.twoP) + " !< size " +
           num(c.nxt->size));
}

void ck_Ne9(const Ctx& c, Rep& r) {
  if (c.nxt != nullptr && c.nxt->dels != c.n.de_set3)
    r.fail("dels " + num(c.nxt->dels) + " vs " + num(c.n.de_set3) + " markers");
}

void ck_Ne9a(const Ctx& c, Rep& r) {
  if (c.nxt != nullptr && c.nxt->dels != 0)
    r.fail("dels " + num(c.nxt->dels));
}

void ck_Ne10(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  for (u64 k = 0; k < c.nxt->size; ++k)
    if (c.nxt->table[k] == kDel || c.nxt->table[k] == kDone)
      return r.fail("slot " + num(k) + "=" + show(c.nxt->table[k]));
}

void ck_Ne11(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  for (u64 k = 0; k < c.nxt->size; ++k)
    if (oldp(c.nxt->table[k]))
      return r.fail("slot " + num(k) + "=" + show(c.nxt->table[k]));
}

// Iterate the addresses behind fully migrated source slots.
template <class F>
void for_each_drained(const Ctx& c, F body) {
  if (c.cur == nullptr) return;
  for (u64 k = 0; k < c.cur_size; ++k)
    if (c.cur->table[k] == kDone) body(k, adr(c.y_at(k)));
}

void ck_Ne12(const Ctx& c, Rep& r) {
  for_each_drained(c, [&](u64 k, Address a) {
    if (r.hit) return;
    if (c.nxt == nullptr)
      return r.fail("slot " + num(k) + " drained but no replacement pending");
    if (c.nxt->size == 0) return;
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      if (!find_match(e, a)) continue;
      if (!(c.x_of(a) == val(e)))
        r.fail("a=" + num(a) + " first match at m=" + num(m) + " holds " +
               show(e) + " but X(a)=" + show(c.x_of(a)));
      return;
    }
  });
}

void ck_Ne13(const Ctx& c, Rep& r) {
  for_each_drained(c, [&](u64 k, Address a) {
    if (r.hit || c.nxt == nullptr || c.nxt->size == 0) return;
    (void)k;
    Value xa = c.x_of(a);
    if (is_null(xa)) return;
    bool found_before = false;
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      bool f = find_match(e, a);
      if (val(e) == xa && (found_before || !f))
        return r.fail("a=" + num(a) + " X(a) sits at m=" + num(m) +
                      " which is not the first match");
      found_before = found_before || f;
    }
  });
}

void ck_Ne14(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr || c.nxt->size == 0) return;
  for (Address a : c.addrs) {
    if (a == 0) continue;
    Value xa = c.x_of(a);
    if (is_null(xa)) continue;
    bool found_before = false;
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      bool f = find_match(e, a);
      if (val(e) == xa && (found_before || !f))
        return r.fail("a=" + num(a) + " X(a) sits at m=" + num(m) +
                      " which is not the first match");
      found_before = found_before || f;
    }
  }
}

void ck_Ne15(const Ctx& c, Rep& r) {
  for_each_drained(c, [&](u64 k, Address a) {
    if (r.hit || c.nxt == nullptr || c.nxt->size == 0) return;
    (void)k;
    Value xa = c.x_of(a);
    if (is_null(xa)) return;
    std::size_t a1 = kNone, a2 = kNone;
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      if (adr(e) == a && !is_null(val(e))) {
        if (a1 == kNone) a1 = m;
        else if (a2 == kNone) a2 = m;
      }
    }
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      if (!(val(e) == xa)) continue;
      std::size_t other = (a1 != kNone && a1 != m) ? a1 : a2;
      if (other != kNone && other != m)
        return r.fail("a=" + num(a) + " X(a) at m=" + num(m) +
                      " but address also stored at m=" + num(other));
    }
  });
}

void ck_Ne16(const Ctx& c, Rep& r) {
  for_each_drained(c, [&](u64 k, Address a) {
    if (r.hit || c.nxt == nullptr || c.nxt->size == 0) return;
    (void)k;
    if (!is_null(c.x_of(a))) return;
    for (u64 m = 0; m < c.nxt->size; ++m) {
      EValue e = c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)];
      if (!is_null(val(e)) && adr(e) == a)
        return r.fail("a=" + num(a) + " absent from X but stored at m=" + num(m));
    }
  });
}

void ck_Ne17(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  for (u64 m = 0; m < c.nxt->size; ++m) {
    EValue e = c.nxt->table[m];
    Address a = adr(e);
    if (a == 0) continue;
    if (is_null(val(e)) || !(c.x_of(a) == val(e)))
      return r.fail("slot " + num(m) + "=" + show(e) + " but X(" + num(a) +
                    ")=" + show(c.x_of(a)));
  }
}

void ck_Ne18(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr || c.cur == nullptr) return;
  for (u64 m = 0; m < c.nxt->size; ++m) {
    EValue e = c.nxt->table[m];
    if (adr(e) == 0) continue;
    bool covered = false;
    for (u64 k = 0; k < c.cur_size && !covered; ++k)
      covered = val(c.y_at(k)) == val(e) && oldp(c.cur->table[k]);
    if (!covered)
      return r.fail("slot " + num(m) + "=" + show(e) +
                    " has no tagged source slot");
  }
}

void ck_Ne19(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  std::unordered_map<Address, u64> first;
  for (u64 m = 0; m < c.nxt->size; ++m) {
    Address a = adr(c.nxt->table[m]);
    if (a == 0) continue;
    auto [it, fresh] = first.emplace(a, m);
    if (!fresh)
      return r.fail("a=" + num(a) + " stored at slots " + num(it->second) +
                    " and " + num(m));
  }
}

void ck_Ne20(const Ctx& c, Rep& r) {
  for_each_drained(c, [&](u64 k, Address a) {
    if (r.hit || c.nxt == nullptr || c.nxt->size == 0) return;
    (void)k;
    Value xa = c.x_of(a);
    if (is_null(xa)) return;
    bool present = false;
    for (u64 m = 0; m < c.nxt->size && !present; ++m)
      present = val(c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)]) == xa;
    if (!present)
      return r.fail("a=" + num(a) + " X(a)=" + show(xa) +
                    " missing from the replacement");
  });
}

void ck_Ne22(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  if (c.n.oc_set6 != c.nxt->occ + c.n.oc_set7)
    r.fail(num(c.n.oc_set6) + " non-null slots vs occ " + num(c.nxt->occ) +
           " + " + num(c.n.oc_set7) + " pending");
}

void ck_Ne23(const Ctx& c, Rep& r) {
  if (c.nxt != nullptr && c.nxt->occ > c.nxt->bound)
    r.fail("occ " + num(c.nxt->occ) + " > bound " + num(c.nxt->bound));
}

void ck_Ne24(const Ctx& c, Rep& r) {
  if (c.nxt != nullptr && c.n.oc_set5 > c.n.oc_set4)
    r.fail(num(c.n.oc_set5) + " replacement values > " + num(c.n.oc_set4) +
           " source values");
}

void ck_Ne25(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  std::unordered_set<u64> seen;
  for (u64 m = 0; m < c.nxt->size; ++m) {
    Value v = val(c.nxt->table[m]);
    if (is_null(v)) continue;
    if (!seen.insert(v.bits).second)
      return r.fail("value " + show(v) + " stored twice");
  }
}

void ck_Ne26(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  std::unordered_set<u64> from, to;
  for (u64 m = 0; m < c.nxt->size; ++m)
    if (!is_null(val(c.nxt->table[m]))) from.insert(val(c.nxt->table[m]).bits);
  for (u64 k = 0; k < c.cur_size; ++k)
    if (!is_null(val(c.y_at(k)))) to.insert(val(c.y_at(k)).bits);
  if (from.size() > to.size())
    r.fail(num(from.size()) + " distinct replacement values vs " +
           num(to.size()) + " in Y");
}

void ck_Ne27(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr || c.n.oc_set5 == 0) return;
  if (c.n.oc_set5 > c.n.oc_set4)
    r.fail(num(c.n.oc_set5) + " occupied replacement slots vs " +
           num(c.n.oc_set4) + " in Y");
}

// ---- find locals ----

void ck_fi1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).a_fi == 0) return r.fail(pw(p));
}

void ck_fi2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 6 || q.pc == 11) && q.n_fi != 0)
      return r.fail(pw(p) + " n=" + num(q.n_fi));
  }
}

void ck_fi3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 7 || q.pc == 8 || q.pc == 13)) continue;
    const Hashtable* t = c.tbl(q.h_fi);
    if (t != nullptr && q.l_fi != t->size)
      return r.fail(pw(p) + " l=" + num(q.l_fi) + " size=" + num(t->size));
  }
}

void ck_fi4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 6, 13) && q.pc != 10)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.h_fi != c.s.H[q.index])
      return r.fail(pw(p) + " h=" + num(q.h_fi) + " H[index]=" + num(c.s.H[q.index]));
  }
}

void ck_fi5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 7 && c.cur != nullptr && q.h_fi == c.cur_id && q.n_fi >= c.cur_size)
      return r.fail(pw(p) + " n=" + num(q.n_fi) + " size=" + num(c.cur_size));
  }
}

void ck_fi6(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 8 || q.h_fi != c.cur_id) continue;
    if (find_match(q.r_fi, q.a_fi) || q.r_fi == kDone) continue;
    EValue e = c.y_at(probe_key(q.a_fi, c.cur_size, q.n_fi, c.s.mixer));
    if (find_match(e, q.a_fi))
      return r.fail(pw(p) + " probe " + num(q.n_fi) + " read " + show(q.r_fi) +
                    " but Y now matches with " + show(e));
  }
}

void ck_fi7(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 13 || q.h_fi != c.cur_id || find_match(q.r_fi, q.a_fi)) continue;
    u64 lim = std::min<u64>(q.n_fi, c.cur_size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = c.y_at(probe_key(q.a_fi, c.cur_size, m, c.s.mixer));
      if (find_match(e, q.a_fi))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

void ck_fi8(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 7 || q.pc == 8) || q.h_fi != c.cur_id) continue;
    u64 lim = std::min<u64>(q.n_fi, c.cur_size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = c.y_at(probe_key(q.a_fi, c.cur_size, m, c.s.mixer));
      if (find_match(e, q.a_fi))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

void ck_fi9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 7) continue;
    const Hashtable* t = c.tbl(q.h_fi);
    if (t == nullptr || q.l_fi == 0) continue;
    u64 k = probe_key(q.a_fi, q.l_fi, q.n_fi, c.s.mixer);
    if (k >= t->table.size()) continue;
    EValue e = t->table[k];
    if (find_match(e, q.a_fi) && !(c.x_of(q.a_fi) == val(e)))
      return r.fail(pw(p) + " about to read " + show(e) + " but X(" +
                    num(q.a_fi) + ")=" + show(c.x_of(q.a_fi)));
  }
}

void ck_fi10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc > 1 && q.pc <= 7) continue;
    if (find_match(q.r_fi, q.a_fi) && !(val(q.r_fi) == q.rS_fi))
      return r.fail(pw(p) + " pc=" + num(q.pc) + " r=" + show(q.r_fi) +
                    " specified " + show(q.rS_fi));
  }
}

void ck_fi11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 8 && oldp(q.r_fi) && q.index == c.curr && c.nxt_slot == 0)
      return r.fail(pw(p) + " read " + show(q.r_fi) + " with no replacement pending");
  }
}

// ---- delete locals ----

void ck_de1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).a_del == 0) return r.fail(pw(p));
}

void ck_de2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 17 || q.pc == 18)) continue;
    const Hashtable* t = c.tbl(q.h_del);
    if (t != nullptr && q.l_del != t->size)
      return r.fail(pw(p) + " l=" + num(q.l_del) + " size=" + num(t->size));
  }
}

void ck_de3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 16, 25) && q.pc != 20)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.h_del != c.s.H[q.index])
      return r.fail(pw(p) + " h=" + num(q.h_del) + " H[index]=" + num(c.s.H[q.index]));
  }
}

void ck_de4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 18 || q.l_del == 0) continue;
    if (q.k_del != probe_key(q.a_del, q.l_del, q.n_del, c.s.mixer))
      return r.fail(pw(p) + " k=" + num(q.k_del) + " expected " +
                    num(probe_key(q.a_del, q.l_del, q.n_del, c.s.mixer)));
  }
}

void ck_de5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 16 || q.pc == 17 || deleting(q)) && q.suc_del)
      return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_de6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (deleting(q) && q.sucS_del && is_null(q.r_del))
      return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_de7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 18) continue;
    const Hashtable* t = c.tbl(q.h_del);
    if (t == nullptr || q.k_del >= t->table.size()) continue;
    if (!oldp(t->table[q.k_del]) && q.h_del != c.cur_id)
      return r.fail(pw(p) + " slot untagged but table " + num(q.h_del) +
                    " is not current");
  }
}

void ck_de8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 17 || q.pc == 18) && c.cur != nullptr && q.h_del == c.cur_id &&
        q.n_del >= c.cur_size)
      return r.fail(pw(p) + " n=" + num(q.n_del) + " size=" + num(c.cur_size));
  }
}

void y_slot_claim(const Ctx& c, Rep& r, u32 p, Address a, u64 n, EValue rv) {
  if (c.cur_size == 0) return;
  EValue e = c.y_at(probe_key(a, c.cur_size, n, c.s.mixer));
  if (is_null(e) || !(e == kDel || adr(e) == adr(rv)))
    r.fail(pw(p) + " read " + show(rv) + " but Y probe " + num(n) + " holds " +
           show(e));
}

void ck_de9(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 18 || q.h_del != c.cur_id) continue;
    if (!is_null(val(q.r_del)) || q.r_del == kDel)
      y_slot_claim(c, r, p, q.a_del, q.n_del, q.r_del);
    if (r.hit) return;
  }
}

void ck_de10(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 17 || q.pc == 18) || q.h_del != c.cur_id) continue;
    u64 lim = std::min<u64>(q.n_del, c.cur_size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = c.y_at(probe_key(q.a_del, c.cur_size, m, c.s.mixer));
      if (find_match(e, q.a_del))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

void ck_de11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 17 || q.pc == 18)) continue;
    const Hashtable* t = c.tbl(q.h_del);
    if (t == nullptr || q.l_del == 0) continue;
    u64 k = probe_key(q.a_del, q.l_del, q.n_del, c.s.mixer);
    if (k >= t->table.size()) continue;
    EValue e = t->table[k];
    if (find_match(e, q.a_del) && !(c.x_of(q.a_del) == val(e)))
      return r.fail(pw(p) + " probe holds " + show(e) + " but X(" +
                    num(q.a_del) + ")=" + show(c.x_of(q.a_del)));
  }
}

void ck_de12(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 18 && oldp(q.r_del) && q.index == c.curr && c.nxt_slot == 0)
      return r.fail(pw(p) + " read " + show(q.r_del) + " with no replacement pending");
  }
}

void ck_de13(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 18 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t != nullptr && q.k_del >= t->size)
      return r.fail(pw(p) + " k=" + num(q.k_del) + " size=" + num(t->size));
  }
}

// ---- insert locals ----

void ck_in1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.a_ins != adr(q.v_ins) || is_null(q.v_ins))
      return r.fail(pw(p) + " a=" + num(q.a_ins) + " v=" + show(q.v_ins));
  }
}

void ck_in2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 32, 35)) continue;
    const Hashtable* t = c.tbl(q.h_ins);
    if (t != nullptr && q.l_ins != t->size)
      return r.fail(pw(p) + " l=" + num(q.l_ins) + " size=" + num(t->size));
  }
}

void ck_in3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 28, 41) && q.pc != 30 && q.pc != 36)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.h_ins != c.s.H[q.index])
      return r.fail(pw(p) + " h=" + num(q.h_ins) + " H[index]=" + num(c.s.H[q.index]));
  }
}

void ck_in4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 33 || q.pc == 35) || q.l_ins == 0) continue;
    if (q.k_ins != probe_key(q.a_ins, q.l_ins, q.n_ins, c.s.mixer))
      return r.fail(pw(p) + " k=" + num(q.k_ins) + " expected " +
                    num(probe_key(q.a_ins, q.l_ins, q.n_ins, c.s.mixer)));
  }
}

void ck_in5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((pcin(q, 32, 33) || inserting(q)) && q.suc_ins)
      return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_in6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (inserting(q) && q.sucS_ins && adr(q.r_ins) == q.a_ins)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " r=" + show(q.r_ins));
  }
}

void ck_in7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 35) continue;
    const Hashtable* t = c.tbl(q.h_ins);
    if (t == nullptr || q.k_ins >= t->table.size()) continue;
    if (!oldp(t->table[q.k_ins]) && q.h_ins != c.cur_id)
      return r.fail(pw(p) + " slot untagged but table " + num(q.h_ins) +
                    " is not current");
  }
}

void ck_in8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 33 || q.pc == 35) && c.cur != nullptr && q.h_ins == c.cur_id &&
        q.n_ins >= c.cur_size)
      return r.fail(pw(p) + " n=" + num(q.n_ins) + " size=" + num(c.cur_size));
  }
}

void ck_in9(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 35 || q.h_ins != c.cur_id) continue;
    if (!is_null(val(q.r_ins)) || q.r_ins == kDel)
      y_slot_claim(c, r, p, q.a_ins, q.n_ins, q.r_ins);
    if (r.hit) return;
  }
}

void ck_in10(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 32 || q.pc == 33 || q.pc == 35) || q.h_ins != c.cur_id) continue;
    u64 lim = std::min<u64>(q.n_ins, c.cur_size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = c.y_at(probe_key(q.a_ins, c.cur_size, m, c.s.mixer));
      if (find_match(e, q.a_ins))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

void ck_in11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 33 || q.pc == 35)) continue;
    const Hashtable* t = c.tbl(q.h_ins);
    if (t == nullptr || q.l_ins == 0) continue;
    u64 k = probe_key(q.a_ins, q.l_ins, q.n_ins, c.s.mixer);
    if (k >= t->table.size()) continue;
    EValue e = t->table[k];
    if (find_match(e, q.a_ins) && !(c.x_of(q.a_ins) == val(e)))
      return r.fail(pw(p) + " probe holds " + show(e) + " but X(" +
                    num(q.a_ins) + ")=" + show(c.x_of(q.a_ins)));
  }
}

void ck_in12(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 35 && oldp(q.r_ins) && q.index == c.curr && c.nxt_slot == 0)
      return r.fail(pw(p) + " read " + show(q.r_ins) + " with no replacement pending");
  }
}

void ck_in13(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 35 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t != nullptr && q.k_ins >= t->size)
      return r.fail(pw(p) + " k=" + num(q.k_ins) + " size=" + num(t->size));
  }
}

// ---- assign locals ----

void ck_as1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.a_ass != adr(q.v_ass) || is_null(q.v_ass))
      return r.fail(pw(p) + " a=" + num(q.a_ass) + " v=" + show(q.v_ass));
  }
}

void ck_as2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 48, 50)) continue;
    const Hashtable* t = c.tbl(q.h_ass);
    if (t != nullptr && q.l_ass != t->size)
      return r.fail(pw(p) + " l=" + num(q.l_ass) + " size=" + num(t->size));
  }
}

void ck_as3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 44, 57) && q.pc != 46 && q.pc != 51)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.h_ass != c.s.H[q.index])
      return r.fail(pw(p) + " h=" + num(q.h_ass) + " H[index]=" + num(c.s.H[q.index]));
  }
}

void ck_as4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 49 || q.pc == 50) || q.l_ass == 0) continue;
    if (q.k_ass != probe_key(q.a_ass, q.l_ass, q.n_ass, c.s.mixer))
      return r.fail(pw(p) + " k=" + num(q.k_ass) + " expected " +
                    num(probe_key(q.a_ass, q.l_ass, q.n_ass, c.s.mixer)));
  }
}

void ck_as5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 50) continue;
    const Hashtable* t = c.tbl(q.h_ass);
    if (t == nullptr || q.k_ass >= t->table.size()) continue;
    if (!oldp(t->table[q.k_ass]) && q.h_ass != c.cur_id)
      return r.fail(pw(p) + " slot untagged but table " + num(q.h_ass) +
                    " is not current");
  }
}

void ck_as6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 50 && c.cur != nullptr && q.h_ass == c.cur_id &&
        q.n_ass >= c.cur_size)
      return r.fail(pw(p) + " n=" + num(q.n_ass) + " size=" + num(c.cur_size));
  }
}

void ck_as7(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 50 || q.h_ass != c.cur_id) continue;
    if (!is_null(val(q.r_ass)) || q.r_ass == kDel)
      y_slot_claim(c, r, p, q.a_ass, q.n_ass, q.r_ass);
    if (r.hit) return;
  }
}

void ck_as8(const Ctx& c, Rep& r) {
  if (c.cur == nullptr || c.cur_size == 0) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 48 || q.pc == 49 || q.pc == 50) || q.h_ass != c.cur_id) continue;
    u64 lim = std::min<u64>(q.n_ass, c.cur_size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = c.y_at(probe_key(q.a_ass, c.cur_size, m, c.s.mixer));
      if (find_match(e, q.a_ass))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

void ck_as9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 50) continue;
    const Hashtable* t = c.tbl(q.h_ass);
    if (t == nullptr || q.l_ass == 0) continue;
    u64 k = probe_key(q.a_ass, q.l_ass, q.n_ass, c.s.mixer);
    if (k >= t->table.size()) continue;
    EValue e = t->table[k];
    if (find_match(e, q.a_ass) && !(c.x_of(q.a_ass) == val(e)))
      return r.fail(pw(p) + " probe holds " + show(e) + " but X(" +
                    num(q.a_ass) + ")=" + show(c.x_of(q.a_ass)));
  }
}

void ck_as10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 50 && oldp(q.r_ass) && q.index == c.curr && c.nxt_slot == 0)
      return r.fail(pw(p) + " read " + show(q.r_ass) + " with no replacement pending");
  }
}

void ck_as11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 50 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t != nullptr && q.k_ass >= t->size)
      return r.fail(pw(p) + " k=" + num(q.k_ass) + " size=" + num(t->size));
  }
}

// ---- releaseAccess locals ----

void ck_rA1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).h_rA >= c.s.heap.next_id())
      return r.fail(pw(p) + " h=" + num(c.s.at(p).h_rA) + " >= counter " +
                    num(c.s.heap.next_id()));
}

void ck_rA2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 70, 71) && q.h_rA == 0) return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_rA3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 71 && !c.s.heap.contains(q.h_rA))
      return r.fail(pw(p) + " h=" + num(q.h_rA) + " is not allocated");
  }
}

void ck_rA4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 71) continue;
    if (!c.slot_ok(q.i_rA))
      return r.fail(pw(p) + " i=" + num(q.i_rA) + " out of range");
    if (c.s.H[q.i_rA] != 0)
      return r.fail(pw(p) + " H[" + num(q.i_rA) + "]=" + num(c.s.H[q.i_rA]));
  }
}

void ck_rA5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 71) continue;
    for (u32 i = 1; i <= c.twoP; ++i)
      if (c.s.H[i] == q.h_rA)
        return r.fail(pw(p) + " h=" + num(q.h_rA) + " still in H[" + num(i) + "]");
  }
}

void ck_rA6(const Ctx& c, Rep& r) {
  if (!c.curr_in_range) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 70) continue;
    if (!c.slot_ok(q.i_rA))
      return r.fail(pw(p) + " i=" + num(q.i_rA) + " out of range");
    if (c.s.H[q.i_rA] == c.cur_id)
      return r.fail(pw(p) + " releasing slot aliases the current table");
  }
}

void ck_rA7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 70 || !c.slot_ok(q.i_rA)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (!table_guard(w) || !c.slot_ok(w.index)) continue;
      if (c.s.H[q.i_rA] == c.s.H[w.index])
        return r.fail(pw(p) + " releasing table " + num(c.s.H[q.i_rA]) +
                      " still used by p=" + num(o));
    }
  }
}

void ck_rA8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc == 70 && c.nxt_slot != 0 && q.i_rA == c.nxt_slot)
      return r.fail(pw(p) + " releasing the pending slot " + num(c.nxt_slot));
  }
}

void ck_rA9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 68, 72) || !c.slot_ok(q.i_rA)) continue;
    if ((q.h_rA == 0 || q.h_rA != c.s.H[q.i_rA]) && c.s.H[q.i_rA] != 0)
      return r.fail(pw(p) + " h=" + num(q.h_rA) + " H[" + num(q.i_rA) + "]=" +
                    num(c.s.H[q.i_rA]));
  }
}

void ck_rA10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 67, 72) && (q.ret_rA == 0 || q.ret_rA == 59) && q.i_rA != q.index)
      return r.fail(pw(p) + " i=" + num(q.i_rA) + " index=" + num(q.index));
  }
}

void ck_rA11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 67, 72) && (q.ret_rA == 77 || q.ret_rA == 90) && q.i_rA == q.index)
      return r.fail(pw(p) + " i=index=" + num(q.i_rA) + " ret=" + num(q.ret_rA));
  }
}

void ck_rA12(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 67, 72) && q.ret_rA == 77)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.next[q.index] == 0)
      return r.fail(pw(p) + " next[index]=0");
  }
}

void ck_rA13(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    for (u32 o = p + 1; o <= c.s.P; ++o)
      if (c.s.at(p).pc == 71 && c.s.at(o).pc == 71 &&
          c.s.at(p).h_rA == c.s.at(o).h_rA)
        return r.fail("p=" + num(p) + " and p=" + num(o) + " both free table " +
                      num(c.s.at(p).h_rA));
}

void ck_rA14(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    for (u32 o = p + 1; o <= c.s.P; ++o)
      if (c.s.at(p).pc == 71 && c.s.at(o).pc == 71 &&
          c.s.at(p).i_rA == c.s.at(o).i_rA)
        return r.fail("p=" + num(p) + " and p=" + num(o) + " both clear slot " +
                      num(c.s.at(p).i_rA));
}

// ---- newTable locals ----

void ck_nT1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 82)) continue;
    if (!c.slot_ok(q.i_nT))
      return r.fail(pw(p) + " i=" + num(q.i_nT) + " out of range");
    if (c.s.heap.contains(c.s.H[q.i_nT]))
      return r.fail(pw(p) + " claimed slot still points at live table " +
                    num(c.s.H[q.i_nT]));
  }
}

void ck_nT2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84)) continue;
    if (!c.slot_ok(q.i_nT))
      return r.fail(pw(p) + " i=" + num(q.i_nT) + " out of range");
    if (!c.s.heap.contains(c.s.H[q.i_nT]))
      return r.fail(pw(p) + " H[" + num(q.i_nT) + "]=" + num(c.s.H[q.i_nT]) +
                    " is not allocated");
  }
}

const Hashtable* nT_table(const Ctx& c, const ProcState& q) {
  if (!c.slot_ok(q.i_nT)) return nullptr;
  return c.tbl(c.s.H[q.i_nT]);
}

void ck_nT3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 84 || !c.slot_ok(q.i_nT)) continue;
    if (c.s.next[q.i_nT] != 0)
      return r.fail(pw(p) + " next[" + num(q.i_nT) + "]=" + num(c.s.next[q.i_nT]));
  }
}

void ck_nT4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84)) continue;
    const Hashtable* t = nT_table(c, q);
    if (t != nullptr && t->dels != 0)
      return r.fail(pw(p) + " dels=" + num(t->dels));
  }
}

void ck_nT5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84)) continue;
    const Hashtable* t = nT_table(c, q);
    if (t != nullptr && t->occ != 0)
      return r.fail(pw(p) + " occ=" + num(t->occ));
  }
}

void ck_nT6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84)) continue;
    const Hashtable* t = nT_table(c, q);
    if (t != nullptr && !(t->bound + c.twoP < t->size))
      return r.fail(pw(p) + " bound " + num(t->bound) + " + " + num(c.twoP) +
                    " !< size " + num(t->size));
  }
}

void ck_nT7(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84) || q.index != c.curr) continue;
    const Hashtable* t = nT_table(c, q);
    if (t == nullptr) continue;
    i64 lhs = static_cast<i64>(c.cur->bound) - static_cast<i64>(c.cur->dels) +
              static_cast<i64>(c.twoP);
    if (!(lhs < static_cast<i64>(t->bound)))
      return r.fail(pw(p) + " survivor budget " + std::to_string(lhs) +
                    " !< new bound " + num(t->bound));
  }
}

void ck_nT8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84)) continue;
    const Hashtable* t = nT_table(c, q);
    if (t == nullptr) continue;
    for (u64 k = 0; k < t->size; ++k)
      if (!is_null(t->table[k]))
        return r.fail(pw(p) + " fresh slot " + num(k) + "=" + show(t->table[k]));
  }
}

void ck_nT9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 81, 84) && q.i_nT == c.curr)
      return r.fail(pw(p) + " claimed the current slot " + num(c.curr));
  }
}

void ck_nT10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (index_guard(w) && q.i_nT == w.index)
        return r.fail(pw(p) + " claimed slot " + num(q.i_nT) +
                      " in use by p=" + num(o));
    }
  }
}

void ck_nT11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (pcin(q, 81, 84) && c.nxt_slot != 0 && q.i_nT == c.nxt_slot)
      return r.fail(pw(p) + " claimed the pending slot " + num(c.nxt_slot));
  }
}

void ck_nT12(const Ctx& c, Rep& r) {
  if (!c.curr_in_range) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84) || !c.slot_ok(q.i_nT)) continue;
    if (c.s.H[q.i_nT] == c.cur_id)
      return r.fail(pw(p) + " claimed slot aliases the current table");
  }
}

void ck_nT13(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84) || !c.slot_ok(q.i_nT)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (!table_guard(w) || !c.slot_ok(w.index)) continue;
      if (c.s.H[q.i_nT] == c.s.H[w.index])
        return r.fail(pw(p) + " claimed slot aliases the table of p=" + num(o));
    }
  }
}

void ck_nT14(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (pcin(w, 67, 72) && q.i_nT == w.i_rA)
        return r.fail(pw(p) + " claimed slot " + num(q.i_nT) +
                      " being released by p=" + num(o));
    }
  }
}

void ck_nT15(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 83, 84) || !c.slot_ok(q.i_nT)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (!pcin(w, 67, 72) || !c.slot_ok(w.i_rA)) continue;
      if (c.s.H[q.i_nT] == c.s.H[w.i_rA])
        return r.fail(pw(p) + " fresh table aliases the slot released by p=" + num(o));
    }
  }
}

void ck_nT16(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    for (u32 o = p + 1; o <= c.s.P; ++o)
      if (pcin(c.s.at(p), 81, 84) && pcin(c.s.at(o), 81, 84) &&
          c.s.at(p).i_nT == c.s.at(o).i_nT)
        return r.fail("p=" + num(p) + " and p=" + num(o) + " both claimed slot " +
                      num(c.s.at(p).i_nT));
}

void ck_nT17(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (pcin(w, 95, 99) && w.index == c.curr && q.i_nT == w.i_mig)
        return r.fail(pw(p) + " claimed slot " + num(q.i_nT) +
                      " is the migration target of p=" + num(o));
    }
  }
}

void ck_nT18(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (w.pc >= 99 && q.i_nT == w.i_mig)
        return r.fail(pw(p) + " claimed slot " + num(q.i_nT) +
                      " is the migration target of p=" + num(o));
    }
  }
}

// ---- migrate locals ----

void ck_mi1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 98 || q.pc == 104 || q.pc == 105) && q.index == c.curr)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " index is still current");
  }
}

void ck_mi2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc >= 95 && q.i_mig == q.index)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " target equals index " + num(q.index));
  }
}

void ck_mi3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 94) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.next[q.index] == 0)
      return r.fail(pw(p) + " next[index]=0");
  }
}

void ck_mi4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).pc >= 95 && c.s.at(p).i_mig == 0)
      return r.fail(pw(p) + " pc=" + num(c.s.at(p).pc));
}

void ck_mi5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 95) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.i_mig != c.s.next[q.index])
      return r.fail(pw(p) + " target " + num(q.i_mig) + " vs next[index]=" +
                    num(c.s.next[q.index]));
  }
}

bool mi6_guard(const ProcState& q, u32 curr) {
  return (pcin(q, 95, 101) && q.index == curr) || pcin(q, 102, 103) || q.pc >= 110;
}

void ck_mi6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!mi6_guard(q, c.curr)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (w.pc == 70 && w.i_rA == q.i_mig)
        return r.fail(pw(o) + " releasing the migration target " + num(q.i_mig) +
                      " of p=" + num(p));
    }
  }
}

void ck_mi7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!((pcin(q, 95, 97) && q.index == c.curr) || q.pc >= 99)) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (c.s.next[q.i_mig] == q.i_mig)
      return r.fail(pw(p) + " target slot " + num(q.i_mig) + " is its own successor");
  }
}

void ck_mi8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 95, 97) || pcin(q, 99, 103) || q.pc >= 110)) continue;
    if (q.index != c.curr || !c.slot_ok(q.i_mig)) continue;
    if (c.s.next[q.i_mig] != 0)
      return r.fail(pw(p) + " next[" + num(q.i_mig) + "]=" + num(c.s.next[q.i_mig]));
  }
}

void ck_mi9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 95, 103) || q.pc >= 110) || q.index != c.curr) continue;
    if (!c.slot_ok(q.i_mig)) continue;
    if (c.s.H[q.i_mig] == c.cur_id)
      return r.fail(pw(p) + " target aliases the current table");
  }
}

void ck_mi10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 95, 103) || q.pc >= 110) || q.index != c.curr) continue;
    if (!c.slot_ok(q.i_mig)) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (!index_guard(w) || !c.slot_ok(w.index)) continue;
      if (c.s.H[q.i_mig] == c.s.H[w.index])
        return r.fail(pw(p) + " target aliases the table of p=" + num(o));
    }
  }
}

void ck_mi11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!((q.pc == 101 && q.index == c.curr) || q.pc == 102)) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (q.h_mig != c.s.H[q.i_mig])
      return r.fail(pw(p) + " h=" + num(q.h_mig) + " H[target]=" + num(c.s.H[q.i_mig]));
  }
}

void ck_mi12(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!((q.pc >= 95 && q.index == c.curr) || q.pc == 102 || q.pc == 103 ||
          q.pc >= 110))
      continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (!c.s.heap.contains(c.s.H[q.i_mig]))
      return r.fail(pw(p) + " H[" + num(q.i_mig) + "]=" + num(c.s.H[q.i_mig]) +
                    " is not allocated");
  }
}

void ck_mi13(const Ctx& c, Rep& r) {
  if (c.cur == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    for (u64 k = 0; k < c.cur_size; ++k)
      if (!(c.cur->table[k] == kDone))
        return r.fail(pw(p) + " source slot " + num(k) + "=" +
                      show(c.cur->table[k]) + " not drained");
  }
}

const Hashtable* mig_table(const Ctx& c, const ProcState& q) {
  if (!c.slot_ok(q.i_mig)) return nullptr;
  return c.tbl(c.s.H[q.i_mig]);
}

void ck_mi14(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    for (Address a : c.addrs) {
      for (u64 n = 0; n < t->size; ++n) {
        EValue e = t->table[probe_key(a, t->size, n, c.s.mixer)];
        if (!find_match(e, a)) continue;
        if (!(c.x_of(a) == val(e)))
          return r.fail(pw(p) + " a=" + num(a) + " first match holds " + show(e) +
                        " but X(a)=" + show(c.x_of(a)));
        break;
      }
    }
  }
}

void ck_mi15(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    for (Address a : c.addrs) {
      Value xa = c.x_of(a);
      if (is_null(xa)) continue;
      bool found_before = false;
      for (u64 n = 0; n < t->size; ++n) {
        EValue e = t->table[probe_key(a, t->size, n, c.s.mixer)];
        bool f = find_match(e, a);
        if (val(e) == xa && (found_before || !f))
          return r.fail(pw(p) + " a=" + num(a) + " X(a) at n=" + num(n) +
                        " is not the first match");
        found_before = found_before || f;
      }
    }
  }
}

void ck_mi16(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr) continue;
    for (u64 k = 0; k < t->size; ++k)
      if (oldp(t->table[k]))
        return r.fail(pw(p) + " replacement slot " + num(k) + "=" + show(t->table[k]));
  }
}

void ck_mi17(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    for (Address a : c.addrs) {
      Value xa = c.x_of(a);
      if (is_null(xa)) continue;
      std::size_t a1 = kNone, a2 = kNone;
      for (u64 m = 0; m < t->size; ++m) {
        EValue e = t->table[probe_key(a, t->size, m, c.s.mixer)];
        if (adr(e) == a && !is_null(val(e))) {
          if (a1 == kNone) a1 = m;
          else if (a2 == kNone) a2 = m;
        }
      }
      for (u64 m = 0; m < t->size; ++m) {
        EValue e = t->table[probe_key(a, t->size, m, c.s.mixer)];
        if (!(val(e) == xa)) continue;
        std::size_t other = (a1 != kNone && a1 != m) ? a1 : a2;
        if (other != kNone && other != m)
          return r.fail(pw(p) + " a=" + num(a) + " stored at probes " + num(m) +
                        " and " + num(other));
      }
    }
  }
}

void ck_mi18(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    for (Address a : c.addrs) {
      if (!is_null(c.x_of(a))) continue;
      for (u64 k = 0; k < t->size; ++k) {
        EValue e = t->table[probe_key(a, t->size, k, c.s.mixer)];
        if (!is_null(val(e)) && adr(e) == a)
          return r.fail(pw(p) + " a=" + num(a) + " absent from X but stored at k=" +
                        num(k));
      }
    }
  }
}

void ck_mi19(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 103 || q.index != c.curr) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    for (Address a : c.addrs) {
      Value xa = c.x_of(a);
      if (is_null(xa)) continue;
      bool present = false;
      for (u64 m = 0; m < t->size && !present; ++m)
        present = val(t->table[probe_key(a, t->size, m, c.s.mixer)]) == xa;
      if (!present)
        return r.fail(pw(p) + " a=" + num(a) + " X(a)=" + show(xa) +
                      " missing from the replacement");
    }
  }
}

void ck_mi20(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    Address a = adr(c.y_at(q.i_mC));
    Value xa = c.x_of(a);
    if (is_null(xa)) continue;
    bool trigger = false;
    if (q.pc == 117 && c.slot_ok(q.index)) {
      const Hashtable* src = c.tbl(c.s.H[q.index]);
      trigger = src != nullptr && q.i_mC < src->table.size() &&
                !is_null(val(src->table[q.i_mC]));
    }
    trigger = trigger || (q.pc >= 126 && q.index == c.curr);
    trigger = trigger ||
              (q.pc == 125 && q.index == c.curr &&
               (q.b_mE || (!is_null(val(q.w_mE)) && q.a_mE == adr(q.w_mE))));
    if (!trigger) continue;
    if (c.nxt == nullptr)
      return r.fail(pw(p) + " moved slot " + num(q.i_mC) +
                    " but no replacement pending");
    if (c.nxt->size == 0) continue;
    bool present = false;
    for (u64 m = 0; m < c.nxt->size && !present; ++m)
      present = val(c.nxt->table[probe_key(a, c.nxt->size, m, c.s.mixer)]) == xa;
    if (!present)
      return r.fail(pw(p) + " a=" + num(a) + " X(a)=" + show(xa) +
                    " missing from the replacement");
  }
}

// ---- moveContents locals ----

void ck_mC1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 103 || q.pc >= 110)) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (q.to_mC != c.s.H[q.i_mig])
      return r.fail(pw(p) + " to=" + num(q.to_mC) + " H[target]=" + num(c.s.H[q.i_mig]));
  }
}

void ck_mC2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 110) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (q.from_mC != c.s.H[q.index])
      return r.fail(pw(p) + " from=" + num(q.from_mC) + " H[index]=" +
                    num(c.s.H[q.index]));
  }
}

void ck_mC3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc <= 102 || q.to_be_moved.empty() || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t != nullptr && *q.to_be_moved.rbegin() >= t->size)
      return r.fail(pw(p) + " pending slot " + num(*q.to_be_moved.rbegin()) +
                    " >= size " + num(t->size));
  }
}

void ck_mC4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 111) continue;
    const Hashtable* t = c.tbl(q.from_mC);
    if (t == nullptr) continue;
    if (q.to_be_moved.empty() || *q.to_be_moved.begin() >= t->size)
      return r.fail(pw(p) + " nothing left to move");
  }
}

void ck_mC5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc >= 114 && q.pc != 118 && q.v_mC == kDone)
      return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_mC6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 114 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t != nullptr && q.i_mC >= t->size)
      return r.fail(pw(p) + " i=" + num(q.i_mC) + " size=" + num(t->size));
  }
}

void ck_mC7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 118 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t == nullptr || q.i_mC >= t->table.size()) continue;
    if (!(t->table[q.i_mC] == kDone))
      return r.fail(pw(p) + " source slot " + num(q.i_mC) + "=" +
                    show(t->table[q.i_mC]));
  }
}

void ck_mC8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 110 || !c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t == nullptr) continue;
    for (u64 k = 0; k < t->size; ++k) {
      if (q.to_be_moved.count(static_cast<u32>(k)) != 0) continue;
      if (!(t->table[k] == kDone))
        return r.fail(pw(p) + " slot " + num(k) + "=" + show(t->table[k]) +
                      " dropped from the pending set while not drained");
    }
  }
}

void ck_mC9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 110 || q.index != c.curr || !q.to_be_moved.empty()) continue;
    if (!c.slot_ok(q.index)) continue;
    const Hashtable* t = c.tbl(c.s.H[q.index]);
    if (t == nullptr) continue;
    for (u64 k = 0; k < t->size; ++k)
      if (!(t->table[k] == kDone))
        return r.fail(pw(p) + " slot " + num(k) + "=" + show(t->table[k]) +
                      " not drained with empty pending set");
  }
}

void ck_mC10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 116 || is_null(val(q.v_mC)) || !c.slot_ok(q.index)) continue;
    const Hashtable* src = c.tbl(c.s.H[q.index]);
    if (src == nullptr || q.i_mC >= src->table.size()) continue;
    if (!(src->table[q.i_mC] == kDone)) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    EValue e = t->table[probe_key(adr(q.v_mC), t->size, 0, c.s.mixer)];
    if (is_null(e))
      return r.fail(pw(p) + " moved " + show(q.v_mC) +
                    " but its first probe slot is empty");
  }
}

void ck_mC11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 116 || !c.slot_ok(q.index)) continue;
    const Hashtable* src = c.tbl(c.s.H[q.index]);
    if (src == nullptr || q.i_mC >= src->table.size()) continue;
    EValue e = src->table[q.i_mC];
    if (e == kDone) continue;
    if (!(val(q.v_mC) == val(e)) || !oldp(e))
      return r.fail(pw(p) + " captured " + show(q.v_mC) + " but source slot holds " +
                    show(e));
  }
}

void ck_mC12(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 116 || q.index != c.curr || is_null(val(q.v_mC))) continue;
    if (!(val(q.v_mC) == val(c.y_at(q.i_mC))))
      return r.fail(pw(p) + " captured " + show(q.v_mC) + " but Y[" + num(q.i_mC) +
                    "]=" + show(c.y_at(q.i_mC)));
  }
}

// ---- moveElement locals ----

void ck_mE1(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc >= 120 && !(val(q.v_mC) == q.v_mE))
      return r.fail(pw(p) + " v=" + show(q.v_mE) + " captured " + show(q.v_mC));
  }
}

void ck_mE2(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p)
    if (c.s.at(p).pc >= 120 && is_null(c.s.at(p).v_mE))
      return r.fail(pw(p));
}

void ck_mE3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 120) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (q.to_mC != c.s.H[q.i_mig])
      return r.fail(pw(p) + " to=" + num(q.to_mC) + " H[target]=" + num(c.s.H[q.i_mig]));
  }
}

void ck_mE4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc >= 121 && q.a_mE != adr(q.v_mC))
      return r.fail(pw(p) + " a=" + num(q.a_mE) + " captured " + show(q.v_mC));
  }
}

void ck_mE5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 121) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t != nullptr && q.m_mE != t->size)
      return r.fail(pw(p) + " m=" + num(q.m_mE) + " size=" + num(t->size));
  }
}

void ck_mE6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 121 || q.pc == 123) && q.b_mE)
      return r.fail(pw(p) + " pc=" + num(q.pc));
  }
}

void ck_mE7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 123) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || t->size == 0) continue;
    if (q.k_mE != probe_key(q.a_mE, t->size, q.n_mE, c.s.mixer))
      return r.fail(pw(p) + " k=" + num(q.k_mE) + " expected " +
                    num(probe_key(q.a_mE, t->size, q.n_mE, c.s.mixer)));
  }
}

void ck_mE8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 123) continue;
    const Hashtable* t = mig_table(c, q);
    if (t != nullptr && q.k_mE >= t->size)
      return r.fail(pw(p) + " k=" + num(q.k_mE) + " size=" + num(t->size));
  }
}

void ck_mE9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 120) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || t->size == 0) continue;
    if (is_null(t->table[probe_key(adr(q.v_mE), t->size, 0, c.s.mixer)]) &&
        q.index != c.curr)
      return r.fail(pw(p) + " first probe empty but index " + num(q.index) +
                    " is not current");
  }
}

void ck_mE10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 121 || q.pc == 123)) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || t->size == 0) continue;
    if (is_null(t->table[probe_key(q.a_mE, t->size, q.n_mE, c.s.mixer)]) &&
        q.index != c.curr)
      return r.fail(pw(p) + " probe " + num(q.n_mE) + " empty but index " +
                    num(q.index) + " is not current");
  }
}

void ck_mE11(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 121 || q.pc == 123)) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || t->size == 0) continue;
    if (!is_null(t->table[probe_key(q.a_mE, t->size, q.n_mE, c.s.mixer)])) continue;
    for (u32 o = 1; o <= c.s.P; ++o) {
      const ProcState& w = c.s.at(o);
      if (w.pc == 103 && w.index == c.curr)
        return r.fail(pw(o) + " may retire the table p=" + num(p) +
                      " still writes into");
    }
  }
}

void ck_mE12(const Ctx& c, Rep& r) {
  if (c.nxt == nullptr) return;
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if ((q.pc == 121 || q.pc == 123) && q.to_mC == c.nxt_id &&
        q.n_mE >= c.nxt->size)
      return r.fail(pw(p) + " n=" + num(q.n_mE) + " size=" + num(c.nxt->size));
  }
}

void ck_mE13(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(q.pc == 123 || q.pc == 125) || is_null(q.w_mE)) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || q.k_mE >= t->table.size()) continue;
    EValue e = t->table[q.k_mE];
    if (!(adr(q.w_mE) == adr(e) || e == kDel || e == kDone))
      return r.fail(pw(p) + " read " + show(q.w_mE) + " slot now " + show(e));
  }
}

void ck_mE14(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 123 || is_null(q.w_mE)) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || q.k_mE >= t->table.size()) continue;
    if (is_null(t->table[q.k_mE]))
      return r.fail(pw(p) + " read " + show(q.w_mE) + " but slot " + num(q.k_mE) +
                    " is now empty");
  }
}

void ck_mE15(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    bool trigger = (q.pc == 117 && !is_null(val(q.v_mC))) ||
                   ((q.pc == 121 || q.pc == 123) && q.n_mE > 0) || q.pc == 125;
    if (!trigger) continue;
    const Hashtable* t = mig_table(c, q);
    if (t == nullptr || t->size == 0) continue;
    if (is_null(t->table[probe_key(adr(q.v_mC), t->size, 0, c.s.mixer)]))
      return r.fail(pw(p) + " first probe slot of " + show(q.v_mC) + " is empty");
  }
}

void ck_mE16(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    bool trigger = q.pc == 121 || q.pc == 123 ||
                   (q.pc == 125 && !q.b_mE &&
                    (is_null(val(q.w_mE)) || q.a_mE != adr(q.w_mE)));
    if (!trigger) continue;
    const Hashtable* t = c.tbl(q.to_mC);
    if (t == nullptr || t->size == 0) continue;
    u64 lim = std::min<u64>(q.n_mE, t->size);
    for (u64 m = 0; m < lim; ++m) {
      EValue e = t->table[probe_key(q.a_mE, t->size, m, c.s.mixer)];
      if (find_match(e, q.a_mE))
        return r.fail(pw(p) + " earlier probe " + num(m) + " matches with " + show(e));
    }
  }
}

// ---- the prot counters ----

void ck_pr1(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i) {
    u64 want = c.n.pr_set1[i] + c.n.pr_set2[i] + (c.curr == i ? 1 : 0) +
               (c.nxt_slot == i ? 1 : 0);
    if (c.s.prot[i] != want)
      return r.fail("prot[" + num(i) + "]=" + num(c.s.prot[i]) + " expected " +
                    num(want));
  }
}

void ck_pr2(const Ctx& c, Rep& r) {
  if (c.curr_in_range && c.s.prot[c.curr] == 0)
    r.fail("prot[currInd]=0");
}

void ck_pr3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!index_guard(q)) continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.prot[q.index] == 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " prot[" + num(q.index) + "]=0");
  }
}

void ck_pr4(const Ctx& c, Rep& r) {
  if (c.nxt_slot != 0 && c.slot_ok(c.nxt_slot) && c.s.prot[c.nxt_slot] == 0)
    r.fail("prot[" + num(c.nxt_slot) + "]=0");
}

void ck_pr5(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i)
    if (c.s.prot[i] == 0 && c.s.heap.contains(c.s.H[i]))
      return r.fail("prot[" + num(i) + "]=0 but H[" + num(i) + "]=" +
                    num(c.s.H[i]) + " is live");
}

void ck_pr6(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i)
    if (c.s.prot[i] <= c.n.pr_set3[i] && c.s.busy[i] == 0 &&
        c.s.heap.contains(c.s.H[i]))
      return r.fail("slot " + num(i) + " only transiently protected but H[" +
                    num(i) + "]=" + num(c.s.H[i]) + " is live");
}

void ck_pr7(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 67, 72)) continue;
    if (!c.slot_ok(q.i_rA))
      return r.fail(pw(p) + " i=" + num(q.i_rA) + " out of range");
    if (c.s.prot[q.i_rA] == 0)
      return r.fail(pw(p) + " prot[" + num(q.i_rA) + "]=0");
  }
}

void ck_pr8(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 84)) continue;
    if (!c.slot_ok(q.i_nT))
      return r.fail(pw(p) + " i=" + num(q.i_nT) + " out of range");
    if (c.s.prot[q.i_nT] == 0)
      return r.fail(pw(p) + " prot[" + num(q.i_nT) + "]=0");
  }
}

void ck_pr9(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 97) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (c.s.prot[q.i_mig] == 0)
      return r.fail(pw(p) + " prot[" + num(q.i_mig) + "]=0");
  }
}

void ck_pr10(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!pcin(q, 81, 82) || !c.slot_ok(q.i_nT)) continue;
    u64 want = c.n.pr_set4[q.i_nT] + 1;
    if (c.s.prot[q.i_nT] != want)
      return r.fail(pw(p) + " prot[" + num(q.i_nT) + "]=" + num(c.s.prot[q.i_nT]) +
                    " expected " + num(want));
  }
}

// ---- the busy counters ----

void ck_bu1(const Ctx& c, Rep& r) {
  for (u32 i = 1; i <= c.twoP; ++i) {
    u64 want = c.n.bu_set1[i] + c.n.bu_set2[i] + (c.curr == i ? 1 : 0) +
               (c.nxt_slot == i ? 1 : 0);
    if (c.s.busy[i] != want)
      return r.fail("busy[" + num(i) + "]=" + num(c.s.busy[i]) + " expected " +
                    num(want));
  }
}

void ck_bu2(const Ctx& c, Rep& r) {
  if (c.curr_in_range && c.s.busy[c.curr] == 0)
    r.fail("busy[currInd]=0");
}

void ck_bu3(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!(pcin(q, 1, 58) ||
          (q.pc > 65 && !(q.i_rA == q.index && pcin(q, 67, 72)))))
      continue;
    if (!c.slot_ok(q.index))
      return r.fail(pw(p) + " index=" + num(q.index) + " out of range");
    if (c.s.busy[q.index] == 0)
      return r.fail(pw(p) + " pc=" + num(q.pc) + " busy[" + num(q.index) + "]=0");
  }
}

void ck_bu4(const Ctx& c, Rep& r) {
  if (c.nxt_slot != 0 && c.slot_ok(c.nxt_slot) && c.s.busy[c.nxt_slot] == 0)
    r.fail("busy[" + num(c.nxt_slot) + "]=0");
}

void ck_bu5(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc != 81 || !c.slot_ok(q.i_nT)) continue;
    if (c.s.busy[q.i_nT] != 0)
      return r.fail(pw(p) + " busy[" + num(q.i_nT) + "]=" + num(c.s.busy[q.i_nT]));
  }
}

void ck_bu6(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (q.pc < 100) continue;
    if (!c.slot_ok(q.i_mig))
      return r.fail(pw(p) + " target " + num(q.i_mig) + " out of range");
    if (c.s.busy[q.i_mig] == 0)
      return r.fail(pw(p) + " busy[" + num(q.i_mig) + "]=0");
  }
}

// ---- remaining state sanity ----

void ck_Ot1(const Ctx& c, Rep& r) {
  if (!is_null(c.x_of(0))) r.fail("X(0)=" + show(c.x_of(0)));
}

void ck_Ot2(const Ctx& c, Rep& r) {
  for (Address a : c.addrs) {
    Value xa = c.x_of(a);
    if (!is_null(xa) && adr(xa) != a)
      return r.fail("X(" + num(a) + ")=" + show(xa));
  }
}

void ck_Ot3(const Ctx& c, Rep& r) {
  auto in_set = [](u32 v, std::initializer_list<u32> set) {
    for (u32 x : set)
      if (v == x) return true;
    return false;
  };
  for (u32 p = 1; p <= c.s.P; ++p) {
    const ProcState& q = c.s.at(p);
    if (!in_set(q.ret_gA, {1, 10, 20, 30, 36, 46, 51}))
      return r.fail(pw(p) + " ret_gA=" + num(q.ret_gA));
    if (!in_set(q.ret_rA, {0, 59, 77, 90}))
      return r.fail(pw(p) + " ret_rA=" + num(q.ret_rA));
    if (!in_set(q.ret_ref, {10, 20, 30, 36, 46, 51}))
      return r.fail(pw(p) + " ret_ref=" + num(q.ret_ref));
    if (!in_set(q.ret_nT, {30, 46}))
      return r.fail(pw(p) + " ret_nT=" + num(q.ret_nT));
  }
}

void ck_Ot4(const Ctx& c, Rep& r) {
  for (u32 p = 1; p <= c.s.P; ++p) {
    int pc = c.s.at(p).pc;
    if (!std::binary_search(std::begin(kLabels), std::end(kLabels), pc))
      return r.fail(pw(p) + " pc=" + num(pc));
  }
}

struct Entry {
  const char* id;
  void (*fn)(const Ctx&, Rep&);
};

const Entry kCatalogue[] = {
    {"Ax1", ck_Ax1},   {"Ax2", ck_Ax2},   {"Ax3", ck_Ax3},
    {"Co1", ck_Co1},   {"Co2", ck_Co2},   {"Co3", ck_Co3},
    {"Cn1", ck_Cn1},   {"Cn2", ck_Cn2},   {"Cn3", ck_Cn3},   {"Cn4", ck_Cn4},
    {"Cn5", ck_Cn5},   {"Cn6", ck_Cn6},   {"Cn7", ck_Cn7},   {"Cn8", ck_Cn8},
    {"Cn9", ck_Cn9},   {"Cn10", ck_Cn10}, {"Cn11", ck_Cn11},
    {"No1", ck_No1},   {"No2", ck_No2},
    {"He1", ck_He1},   {"He2", ck_He2},   {"He3", ck_He3},   {"He4", ck_He4},
    {"He5", ck_He5},   {"He6", ck_He6},
    {"Ha1", ck_Ha1},   {"Ha2", ck_Ha2},   {"Ha3", ck_Ha3},   {"Ha4", ck_Ha4},
    {"Cu1", ck_Cu1},   {"Cu2", ck_Cu2},   {"Cu3", ck_Cu3},   {"Cu4", ck_Cu4},
    {"Cu5", ck_retired}, {"Cu6", ck_Cu6}, {"Cu7", ck_Cu7},   {"Cu8", ck_Cu8},
    {"Cu9", ck_Cu9},   {"Cu10", ck_Cu10}, {"Cu11", ck_Cu11}, {"Cu12", ck_Cu12},
    {"Cu13", ck_Cu13}, {"Cu14", ck_Cu14}, {"Cu15", ck_Cu15}, {"Cu16", ck_Cu16},
    {"Ne1", ck_Ne1},   {"Ne2", ck_Ne2},   {"Ne3", ck_Ne3},   {"Ne4", ck_Ne4},
    {"Ne5", ck_Ne5},   {"Ne6", ck_Ne6},   {"Ne7", ck_Ne7},   {"Ne8", ck_Ne8},
    {"Ne9", ck_Ne9},   {"Ne9a", ck_Ne9a}, {"Ne10", ck_Ne10}, {"Ne11", ck_Ne11},
    {"Ne12", ck_Ne12}, {"Ne13", ck_Ne13}, {"Ne14", ck_Ne14}, {"Ne15", ck_Ne15},
    {"Ne16", ck_Ne16}, {"Ne17", ck_Ne17}, {"Ne18", ck_Ne18}, {"Ne19", ck_Ne19},
    {"Ne20", ck_Ne20}, {"Ne21", ck_retired}, {"Ne22", ck_Ne22},
    {"Ne23", ck_Ne23}, {"Ne24", ck_Ne24}, {"Ne25", ck_Ne25}, {"Ne26", ck_Ne26},
    {"Ne27", ck_Ne27},
    {"fi1", ck_fi1},   {"fi2", ck_fi2},   {"fi3", ck_fi3},   {"fi4", ck_fi4},
    {"fi5", ck_fi5},   {"fi6", ck_fi6},   {"fi7", ck_fi7},   {"fi8", ck_fi8},
    {"fi9", ck_fi9},   {"fi10", ck_fi10}, {"fi11", ck_fi11},
    {"de1", ck_de1},   {"de2", ck_de2},   {"de3", ck_de3},   {"de4", ck_de4},
    {"de5", ck_de5},   {"de6", ck_de6},   {"de7", ck_de7},   {"de8", ck_de8},
    {"de9", ck_de9},   {"de10", ck_de10}, {"de11", ck_de11}, {"de12", ck_de12},
    {"de13", ck_de13},
    {"in1", ck_in1},   {"in2", ck_in2},   {"in3", ck_in3},   {"in4", ck_in4},
    {"in5", ck_in5},   {"in6", ck_in6},   {"in7", ck_in7},   {"in8", ck_in8},
    {"in9", ck_in9},   {"in10", ck_in10}, {"in11", ck_in11}, {"in12", ck_in12},
    {"in13", ck_in13},
    {"as1", ck_as1},   {"as2", ck_as2},   {"as3", ck_as3},   {"as4", ck_as4},
    {"as5", ck_as5},   {"as6", ck_as6},   {"as7", ck_as7},   {"as8", ck_as8},
    {"as9", ck_as9},   {"as10", ck_as10}, {"as11", ck_as11},
    {"rA1", ck_rA1},   {"rA2", ck_rA2},   {"rA3", ck_rA3},   {"rA4", ck_rA4},
    {"rA5", ck_rA5},   {"rA6", ck_rA6},   {"rA7", ck_rA7},   {"rA8", ck_rA8},
    {"rA9", ck_rA9},   {"rA10", ck_rA10}, {"rA11", ck_rA11}, {"rA12", ck_rA12},
    {"rA13", ck_rA13}, {"rA14", ck_rA14},
    {"nT1", ck_nT1},   {"nT2", ck_nT2},   {"nT3", ck_nT3},   {"nT4", ck_nT4},
    {"nT5", ck_nT5},   {"nT6", ck_nT6},   {"nT7", ck_nT7},   {"nT8", ck_nT8},
    {"nT9", ck_nT9},   {"nT10", ck_nT10}, {"nT11", ck_nT11}, {"nT12", ck_nT12},
    {"nT13", ck_nT13}, {"nT14", ck_nT14}, {"nT15", ck_nT15}, {"nT16", ck_nT16},
    {"nT17", ck_nT17}, {"nT18", ck_nT18},
    {"mi1", ck_mi1},   {"mi2", ck_mi2},   {"mi3", ck_mi3},   {"mi4", ck_mi4},
    {"mi5", ck_mi5},   {"mi6", ck_mi6},   {"mi7", ck_mi7},   {"mi8", ck_mi8},
    {"mi9", ck_mi9},   {"mi10", ck_mi10}, {"mi11", ck_mi11}, {"mi12", ck_mi12},
    {"mi13", ck_mi13}, {"mi14", ck_mi14}, {"mi15", ck_mi15}, {"mi16", ck_mi16},
    {"mi17", ck_mi17}, {"mi18", ck_mi18}, {"mi19", ck_mi19}, {"mi20", ck_mi20},
    {"mC1", ck_mC1},   {"mC2", ck_mC2},   {"mC3", ck_mC3},   {"mC4", ck_mC4},
    {"mC5", ck_mC5},   {"mC6", ck_mC6},   {"mC7", ck_mC7},   {"mC8", ck_mC8},
    {"mC9", ck_mC9},   {"mC10", ck_mC10}, {"mC11", ck_mC11}, {"mC12", ck_mC12},
    {"mE1", ck_mE1},   {"mE2", ck_mE2},   {"mE3", ck_mE3},   {"mE4", ck_mE4},
    {"mE5", ck_mE5},   {"mE6", ck_mE6},   {"mE7", ck_mE7},   {"mE8", ck_mE8},
    {"mE9", ck_mE9},   {"mE10", ck_mE10}, {"mE11", ck_mE11}, {"mE12", ck_mE12},
    {"mE13", ck_mE13}, {"mE14", ck_mE14}, {"mE15", ck_mE15}, {"mE16", ck_mE16},
    {"pr1", ck_pr1},   {"pr2", ck_pr2},   {"pr3", ck_pr3},   {"pr4", ck_pr4},
    {"pr5", ck_pr5},   {"pr6", ck_pr6},   {"pr7", ck_pr7},   {"pr8", ck_pr8},
    {"pr9", ck_pr9},   {"pr10", ck_pr10},
    {"bu1", ck_bu1},   {"bu2", ck_bu2},   {"bu3", ck_bu3},   {"bu4", ck_bu4},
    {"bu5", ck_bu5},   {"bu6", ck_bu6},
    {"Ot1", ck_Ot1},   {"Ot2", ck_Ot2},   {"Ot3", ck_Ot3},   {"Ot4", ck_Ot4},
};

} // namespace

SetCounts count_sets(const ModelState& s) { return make_ctx(s).n; }

const std::vector<std::string>& invariant_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Entry& e : kCatalogue) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

std::vector<Violation> check_invariants(const ModelState& s) {
  Ctx c = make_ctx(s);
  std::vector<Violation> out;
  for (const Entry& e : kCatalogue) {
    Rep r{e.id, &out};
    e.fn(c, r);
  }
  return out;
}

std::vector<Violation> check_invariants(const ModelState& s,
                                        const std::vector<std::string>& subset) {
  for (const std::string& id : subset) {
    bool known = false;
    for (const Entry& e : kCatalogue) known = known || id == e.id;
    if (!known) throw std::invalid_argument("unknown invariant id: " + id);
  }
  Ctx c = make_ctx(s);
  std::vector<Violation> out;
  for (const Entry& e : kCatalogue) {
    if (std::find(subset.begin(), subset.end(), e.id) == subset.end()) continue;
    Rep r{e.id, &out};
    e.fn(c, r);
  }
  return out;
}

} // namespace lfht
