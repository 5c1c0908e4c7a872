#include "lfht/model/state.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace lfht {

ModelState model_init(const ModelConfig& cfg) {
  if (cfg.P == 0) throw std::invalid_argument("P must be positive");
  ModelState s;
  s.P = cfg.P;
  s.mixer = cfg.mixer;
  s.H.assign(2 * cfg.P + 1, 0);
  s.busy.assign(2 * cfg.P + 1, 0);
  s.prot.assign(2 * cfg.P + 1, 0);
  s.next.assign(2 * cfg.P + 1, 0);

  TableShape shape = initial_shape(cfg.initial_size, cfg.initial_bound, cfg.P);
  TableId first = s.heap.allocate(shape.size, shape.bound, cfg.P);
  s.curr_ind = 1;
  s.H[1] = first;
  s.busy[1] = 1;
  s.prot[1] = 1;
  s.Y.assign(shape.size, kENull);

  s.proc.assign(cfg.P, ProcState{});
  s.scripts = cfg.scripts;
  s.scripts.resize(cfg.P);
  s.forced_slots.assign(cfg.P, {});
  return s;
}

bool script_done(const ModelState& s, std::uint32_t p) {
  const ProcState& pr = s.at(p);
  return pr.pc == 0 && pr.script_pos >= s.scripts[p - 1].size();
}

namespace {

// Abstract-map actions, executed as ghost updates inside the host statement.
void ghost_find(ModelState& s, ProcState& pr) {
  pr.rS_fi = s.X.get(pr.a_fi);
  pr.cnt_fi++;
}

void ghost_delete(ModelState& s, ProcState& pr) {
  pr.sucS_del = !is_null(s.X.get(pr.a_del));
  if (pr.sucS_del) s.X.set(pr.a_del, kNull);
  pr.cnt_del++;
}

void ghost_insert(ModelState& s, ProcState& pr) {
  pr.sucS_ins = is_null(s.X.get(pr.a_ins));
  if (pr.sucS_ins) s.X.set(pr.a_ins, pr.v_ins);
  pr.cnt_ins++;
}

void ghost_assign(ModelState& s, ProcState& pr) {
  s.X.set(pr.a_ass, pr.v_ass);
  pr.cnt_ass++;
}

void shadow_write(ModelState& s, std::uint64_t k, EValue v) {
  if (k < s.Y.size()) s.Y[k] = v;
}

bool find_cond(EValue r, Address a) { return is_null(r) || adr(r) == a; }

// Replacement-slot choice: forced test queue first, then the shared policy.
std::uint32_t pick_slot(ModelState& s, std::uint32_t p) {
  auto& forced = s.forced_slots[p - 1];
  if (!forced.empty()) {
    std::uint32_t i = forced.front();
    forced.pop_front();
    return i;
  }
  return scan_slot(p, s.at(p).scan_offset, s.P);
}

// Source-slot choice: cyclic walk over the pending set from the cursor.
std::uint32_t pick_move_slot(const ProcState& pr, std::uint64_t size) {
  for (std::uint64_t j = 0; j < size; ++j) {
    auto cand = static_cast<std::uint32_t>((pr.move_cursor + j) % size);
    if (pr.to_be_moved.count(cand)) return cand;
  }
  return *pr.to_be_moved.begin();
}

bool fail(std::string* why, const char* msg) {
  if (why) *why = msg;
  return false;
}

} // namespace

bool enabled(const ModelState& s, std::uint32_t p, std::string* why) {
  if (p == 0 || p > s.P) return fail(why, "no such process");
  const ProcState& pr = s.at(p);
  const HeapModel& heap = s.heap;
  auto live = [&](TableId h) { return h != 0 && heap.contains(h); };
  auto table_size = [&](TableId h) { return heap.at(h).size; };

  switch (pr.pc) {
    case 0: case 1: case 5: case 8: case 10: case 13: case 14:
    case 15: case 20: case 26: case 27: case 30: case 32: case 42:
    case 43: case 46: case 48: case 59: case 60: case 61: case 62: case 63:
    case 67: case 69: case 70: case 77: case 78: case 81: case 83: case 84:
    case 90: case 94: case 95: case 97: case 99: case 100: case 101:
    case 110: case 112: case 116: case 118: case 125:
      return true;

    case 6: case 11:
      return live(pr.h_fi) || fail(why, "find table gone");
    case 7:
      if (!live(pr.h_fi)) return fail(why, "find table gone");
      if (pr.l_fi == 0 || pr.l_fi != table_size(pr.h_fi)) return fail(why, "find probe length stale");
      return true;

    case 16: case 21:
      return live(pr.h_del) || fail(why, "delete table gone");
    case 17:
      if (!live(pr.h_del)) return fail(why, "delete table gone");
      if (pr.l_del == 0 || pr.l_del != table_size(pr.h_del)) return fail(why, "delete probe length stale");
      return true;
    case 18:
      if (oldp(pr.r_del)) return true;
      if (adr(pr.r_del) != pr.a_del) return true;
      if (!live(pr.h_del) || pr.k_del >= table_size(pr.h_del)) return fail(why, "delete slot out of range");
      return true;
    case 25:
      return !pr.suc_del || live(pr.h_del) || fail(why, "delete table gone");

    case 28:
      return live(pr.h_ins) || fail(why, "insert table gone");
    case 31: case 37:
      return live(pr.h_ins) || fail(why, "insert table gone");
    case 33:
      if (!live(pr.h_ins) || pr.k_ins >= table_size(pr.h_ins)) return fail(why, "insert slot out of range");
      return true;
    case 35:
      if (oldp(pr.r_ins) || !is_null(pr.r_ins)) return true;
      if (!live(pr.h_ins) || pr.k_ins >= table_size(pr.h_ins)) return fail(why, "insert slot out of range");
      return true;
    case 36:
      return true;
    case 41:
      return !pr.suc_ins || live(pr.h_ins) || fail(why, "insert table gone");

    case 44:
      return live(pr.h_ass) || fail(why, "assign table gone");
    case 47: case 52:
      return live(pr.h_ass) || fail(why, "assign table gone");
    case 49:
      if (!live(pr.h_ass) || pr.k_ass >= table_size(pr.h_ass)) return fail(why, "assign slot out of range");
      return true;
    case 50:
      if (oldp(pr.r_ass)) return true;
      if (!is_null(pr.r_ass) && adr(pr.r_ass) != pr.a_ass) return true;
      if (!live(pr.h_ass) || pr.k_ass >= table_size(pr.h_ass)) return fail(why, "assign slot out of range");
      return true;
    case 51:
      return true;
    case 57:
      return !is_null(pr.r_ass) || live(pr.h_ass) || fail(why, "assign table gone");

    case 65:
      return s.prot[pr.index] > 0 || fail(why, "prot underflow");
    case 68:
      return s.busy[pr.i_rA] > 0 || fail(why, "busy underflow");
    case 71:
      return heap.contains(pr.h_rA) || fail(why, "double deallocation");
    case 72:
      return s.prot[pr.i_rA] > 0 || fail(why, "prot underflow");

    case 82:
      return live(s.H[pr.index]) || fail(why, "current table gone");

    case 98:
      return s.prot[pr.i_mig] > 0 || fail(why, "prot underflow");
    case 102:
      return live(s.H[pr.index]) || fail(why, "current table gone");
    case 103:
      if (s.curr_ind != pr.index) return true;
      return live(s.H[pr.i_mig]) || fail(why, "replacement table gone");
    case 104:
      return s.busy[pr.index] > 0 || fail(why, "busy underflow");
    case 105:
      return s.prot[pr.index] > 0 || fail(why, "prot underflow");

    case 111: {
      if (pr.to_be_moved.empty()) return fail(why, "empty move set");
      if (!live(pr.from_mC)) return fail(why, "source table gone");
      return *pr.to_be_moved.rbegin() < table_size(pr.from_mC) || fail(why, "move slot out of range");
    }
    case 114: case 117:
      if (!live(pr.from_mC) || pr.i_mC >= table_size(pr.from_mC)) return fail(why, "source slot out of range");
      return true;

    case 120:
      return live(pr.to_mC) || fail(why, "target table gone");
    case 121:
      if (!live(pr.to_mC)) return fail(why, "target table gone");
      if (pr.m_mE == 0 || pr.m_mE != table_size(pr.to_mC)) return fail(why, "target probe length stale");
      return true;
    case 123:
      if (!live(pr.to_mC) || pr.k_mE >= table_size(pr.to_mC)) return fail(why, "target slot out of range");
      return true;
    case 126:
      return !pr.b_mE || live(pr.to_mC) || fail(why, "target table gone");

    default:
      return fail(why, "pc outside the label set");
  }
}

int step(ModelState& s, std::uint32_t p) {
  std::string why;
  if (!enabled(s, p, &why)) throw ProtocolViolation("disabled statement: " + why);
  ProcState& pr = s.at(p);
  int label = pr.pc;

  auto call_release = [&](std::uint32_t i, std::uint32_t ret) {
    pr.i_rA = i;
    pr.ret_rA = ret;
    pr.pc = 67;
  };
  auto op_done = [&](CompletedOp op) {
    op.process = p;
    s.completed.push_back(op);
    pr.stats.ops_done++;
    pr.pc = 1;
  };

  switch (pr.pc) {
    // ---- main loop: acquire, run the script, release when it runs dry ----
    case 0:
      pr.ret_gA = 1;
      pr.pc = 59;
      break;
    case 1: {
      const Script& sc = s.scripts[p - 1];
      if (pr.script_pos >= sc.size()) {
        call_release(pr.index, 0);
        break;
      }
      const WorkItem& w = sc[pr.script_pos++];
      switch (w.kind) {
        case OpKind::Find: pr.a_fi = w.addr; pr.pc = 5; break;
        case OpKind::Erase: pr.a_del = w.addr; pr.pc = 15; break;
        case OpKind::Insert: pr.v_ins = w.value; pr.a_ins = adr(w.value); pr.pc = 27; break;
        case OpKind::Assign: pr.v_ass = w.value; pr.a_ass = adr(w.value); pr.pc = 43; break;
        case OpKind::Release: call_release(pr.index, 0); break;
      }
      break;
    }

    // ---- find ----
    case 5:
      pr.h_fi = s.H[pr.index];
      pr.n_fi = 0;
      pr.cnt_fi = 0;
      pr.pc = 6;
      break;
    case 6:
      pr.l_fi = s.heap.at(pr.h_fi).size;
      pr.pc = 7;
      break;
    case 7: {
      std::uint64_t k = probe_key(pr.a_fi, pr.l_fi, pr.n_fi, s.mixer);
      pr.r_fi = s.heap.at(pr.h_fi).table[k];
      if (find_cond(pr.r_fi, pr.a_fi)) ghost_find(s, pr);
      pr.pc = 8;
      break;
    }
    case 8:
      if (pr.r_fi == kDone) {
        pr.ret_ref = 10;
        pr.pc = 90;
      } else {
        pr.n_fi++;
        pr.pc = 13;
      }
      break;
    case 10:
      pr.h_fi = s.H[pr.index];
      pr.n_fi = 0;
      pr.pc = 11;
      break;
    case 11:
      pr.l_fi = s.heap.at(pr.h_fi).size;
      pr.pc = 13;
      break;
    case 13:
      pr.pc = find_cond(pr.r_fi, pr.a_fi) ? 14 : 7;
      break;
    case 14:
      op_done({0, {OpKind::Find, pr.a_fi, {}}, val(pr.r_fi), false});
      break;

    // ---- delete ----
    case 15:
      pr.h_del = s.H[pr.index];
      pr.suc_del = false;
      pr.cnt_del = 0;
      pr.pc = 16;
      break;
    case 16:
      pr.l_del = s.heap.at(pr.h_del).size;
      pr.n_del = 0;
      pr.pc = 17;
      break;
    case 17:
      pr.k_del = probe_key(pr.a_del, pr.l_del, pr.n_del, s.mixer);
      pr.r_del = s.heap.at(pr.h_del).table[pr.k_del];
      if (is_null(pr.r_del)) ghost_delete(s, pr);
      pr.pc = 18;
      break;
    case 18:
      if (oldp(pr.r_del)) {
        pr.ret_ref = 20;
        pr.pc = 90;
        break;
      }
      if (adr(pr.r_del) == pr.a_del) {
        Hashtable& t = s.heap.at(pr.h_del);
        if (t.table[pr.k_del] == pr.r_del) {
          pr.suc_del = true;
          t.table[pr.k_del] = kDel;
          ghost_delete(s, pr);
          shadow_write(s, pr.k_del, kDel);
        }
      } else {
        pr.n_del++;
      }
      pr.pc = (pr.suc_del || is_null(pr.r_del)) ? 25 : 17;
      break;
    case 20:
      pr.h_del = s.H[pr.index];
      pr.pc = 21;
      break;
    case 21:
      pr.l_del = s.heap.at(pr.h_del).size;
      pr.n_del = 0;
      pr.pc = (pr.suc_del || is_null(pr.r_del)) ? 25 : 17;
      break;
    case 25:
      if (pr.suc_del) s.heap.at(pr.h_del).dels++;
      pr.pc = 26;
      break;
    case 26:
      op_done({0, {OpKind::Erase, pr.a_del, {}}, {}, pr.suc_del});
      break;

    // ---- insert ----
    case 27:
      pr.h_ins = s.H[pr.index];
      pr.cnt_ins = 0;
      pr.pc = 28;
      break;
    case 28: {
      const Hashtable& t = s.heap.at(pr.h_ins);
      if (t.occ > t.bound) {
        pr.ret_nT = 30;
        pr.pc = 77;
      } else {
        pr.pc = 31;
      }
      break;
    }
    case 30:
      pr.h_ins = s.H[pr.index];
      pr.pc = 31;
      break;
    case 31:
      pr.n_ins = 0;
      pr.l_ins = s.heap.at(pr.h_ins).size;
      pr.suc_ins = false;
      pr.pc = 32;
      break;
    case 32:
      pr.k_ins = probe_key(pr.a_ins, pr.l_ins, pr.n_ins, s.mixer);
      pr.pc = 33;
      break;
    case 33:
      pr.r_ins = s.heap.at(pr.h_ins).table[pr.k_ins];
      if (adr(pr.r_ins) == pr.a_ins) ghost_insert(s, pr);
      pr.pc = 35;
      break;
    case 35:
      if (oldp(pr.r_ins)) {
        pr.ret_ref = 36;
        pr.pc = 90;
        break;
      }
      if (is_null(pr.r_ins)) {
        Hashtable& t = s.heap.at(pr.h_ins);
        if (is_null(t.table[pr.k_ins])) {
          pr.suc_ins = true;
          t.table[pr.k_ins] = to_evalue(pr.v_ins);
          ghost_insert(s, pr);
          shadow_write(s, pr.k_ins, to_evalue(pr.v_ins));
        }
      } else {
        pr.n_ins++;
      }
      pr.pc = (pr.suc_ins || adr(pr.r_ins) == pr.a_ins) ? 41 : 32;
      break;
    case 36:
      pr.h_ins = s.H[pr.index];
      pr.pc = 37;
      break;
    case 37:
      pr.n_ins = 0;
      pr.l_ins = s.heap.at(pr.h_ins).size;
      pr.pc = (pr.suc_ins || adr(pr.r_ins) == pr.a_ins) ? 41 : 32;
      break;
    case 41:
      if (pr.suc_ins) s.heap.at(pr.h_ins).occ++;
      pr.pc = 42;
      break;
    case 42:
      op_done({0, {OpKind::Insert, pr.a_ins, pr.v_ins}, {}, pr.suc_ins});
      break;

    // ---- assign ----
    case 43:
      pr.h_ass = s.H[pr.index];
      pr.cnt_ass = 0;
      pr.pc = 44;
      break;
    case 44: {
      const Hashtable& t = s.heap.at(pr.h_ass);
      if (t.occ > t.bound) {
        pr.ret_nT = 46;
        pr.pc = 77;
      } else {
        pr.pc = 47;
      }
      break;
    }
    case 46:
      pr.h_ass = s.H[pr.index];
      pr.pc = 47;
      break;
    case 47:
      pr.n_ass = 0;
      pr.l_ass = s.heap.at(pr.h_ass).size;
      pr.suc_ass = false;
      pr.pc = 48;
      break;
    case 48:
      pr.k_ass = probe_key(pr.a_ass, pr.l_ass, pr.n_ass, s.mixer);
      pr.pc = 49;
      break;
    case 49:
      pr.r_ass = s.heap.at(pr.h_ass).table[pr.k_ass];
      pr.pc = 50;
      break;
    case 50:
      if (oldp(pr.r_ass)) {
        pr.ret_ref = 51;
        pr.pc = 90;
        break;
      }
      if (is_null(pr.r_ass) || adr(pr.r_ass) == pr.a_ass) {
        Hashtable& t = s.heap.at(pr.h_ass);
        if (t.table[pr.k_ass] == pr.r_ass) {
          pr.suc_ass = true;
          t.table[pr.k_ass] = to_evalue(pr.v_ass);
          ghost_assign(s, pr);
          shadow_write(s, pr.k_ass, to_evalue(pr.v_ass));
        }
      } else {
        pr.n_ass++;
      }
      pr.pc = pr.suc_ass ? 57 : 48;
      break;
    case 51:
      pr.h_ass = s.H[pr.index];
      pr.pc = 52;
      break;
    case 52:
      pr.n_ass = 0;
      pr.l_ass = s.heap.at(pr.h_ass).size;
      pr.pc = pr.suc_ass ? 57 : 48;
      break;
    case 57:
      if (is_null(pr.r_ass)) s.heap.at(pr.h_ass).occ++;
      op_done({0, {OpKind::Assign, pr.a_ass, pr.v_ass}, {}, true});
      break;

    // ---- getAccess ----
    case 59:
      pr.index = s.curr_ind;
      pr.pc = 60;
      break;
    case 60:
      s.prot[pr.index]++;
      pr.pc = 61;
      break;
    case 61:
      pr.pc = (pr.index == s.curr_ind) ? 62 : 65;
      break;
    case 62:
      s.busy[pr.index]++;
      pr.pc = 63;
      break;
    case 63:
      if (pr.index == s.curr_ind) {
        pr.pc = static_cast<int>(pr.ret_gA);
      } else {
        call_release(pr.index, 59);
      }
      break;
    case 65:
      s.prot[pr.index]--;
      pr.pc = 59;
      break;

    // ---- releaseAccess ----
    case 67:
      pr.h_rA = s.H[pr.i_rA];
      pr.pc = 68;
      break;
    case 68:
      s.busy[pr.i_rA]--;
      pr.pc = 69;
      break;
    case 69:
      pr.pc = (pr.h_rA != 0 && s.busy[pr.i_rA] == 0) ? 70 : 72;
      break;
    case 70:
      if (s.H[pr.i_rA] == pr.h_rA) {
        s.H[pr.i_rA] = 0;
        pr.stats.cas70_wins++;
        pr.pc = 71;
      } else {
        pr.pc = 72;
      }
      break;
    case 71:
      s.heap.deallocate(pr.h_rA);
      pr.stats.deallocs++;
      pr.pc = 72;
      break;
    case 72:
      s.prot[pr.i_rA]--;
      switch (pr.ret_rA) {
        case 0: pr.pc = 0; break;
        case 59: pr.pc = 59; break;
        case 77: pr.pc = 77; break;
        default: pr.pc = static_cast<int>(pr.ret_ref); break;
      }
      break;

    // ---- newTable ----
    case 77:
      if (s.next[pr.index] == 0) {
        pr.pc = 78;
      } else {
        pr.ret_ref = pr.ret_nT;
        pr.pc = 90;
      }
      break;
    case 78: {
      std::uint32_t i = pick_slot(s, p);
      if (s.prot[i] == 0) {
        s.prot[i] = 1;
        pr.i_nT = i;
        pr.stats.tas78_wins++;
        pr.pc = 81;
      } else {
        pr.scan_offset++;
        pr.pc = 77;
      }
      break;
    }
    case 81:
      s.busy[pr.i_nT] = 1;
      pr.pc = 82;
      break;
    case 82: {
      const Hashtable& cur = s.heap.at(s.H[pr.index]);
      TableShape shape = next_table_shape(cur.bound, cur.dels, s.P);
      s.H[pr.i_nT] = s.heap.allocate(shape.size, shape.bound, s.P);
      pr.pc = 83;
      break;
    }
    case 83:
      s.next[pr.i_nT] = 0;
      pr.pc = 84;
      break;
    case 84:
      if (s.next[pr.index] == 0) {
        s.next[pr.index] = pr.i_nT;
        pr.stats.cas84_wins++;
        pr.pc = 77;
      } else {
        call_release(pr.i_nT, 77);
      }
      break;

    // ---- refresh ----
    case 90:
      if (pr.index != s.curr_ind) {
        pr.ret_gA = pr.ret_ref;
        call_release(pr.index, 59);
      } else {
        pr.pc = 94;
      }
      break;

    // ---- migrate ----
    case 94:
      pr.i_mig = s.next[pr.index];
      pr.pc = 95;
      break;
    case 95:
      s.prot[pr.i_mig]++;
      pr.pc = 97;
      break;
    case 97:
      pr.pc = (pr.index != s.curr_ind) ? 98 : 99;
      break;
    case 98:
      s.prot[pr.i_mig]--;
      pr.pc = static_cast<int>(pr.ret_ref);
      break;
    case 99:
      s.busy[pr.i_mig]++;
      pr.pc = 100;
      break;
    case 100:
      pr.h_mig = s.H[pr.i_mig];
      pr.pc = 101;
      break;
    case 101:
      if (pr.index == s.curr_ind) {
        pr.pc = 102;
      } else {
        call_release(pr.i_mig, 90);
      }
      break;
    case 102: {
      pr.from_mC = s.H[pr.index];
      pr.to_mC = pr.h_mig;
      const Hashtable& from = s.heap.at(pr.from_mC);
      pr.to_be_moved.clear();
      for (std::uint32_t i = 0; i < from.size; ++i) pr.to_be_moved.insert(i);
      pr.move_cursor = move_start(p, from.size, s.P);
      pr.pc = 110;
      break;
    }
    case 103:
      if (s.curr_ind == pr.index) {
        s.curr_ind = pr.i_mig;
        pr.stats.cas103_wins++;
        s.Y = s.heap.at(s.H[pr.i_mig]).table;
        pr.pc = 104;
      } else {
        call_release(pr.i_mig, 90);
      }
      break;
    case 104:
      s.busy[pr.index]--;
      pr.pc = 105;
      break;
    case 105:
      s.prot[pr.index]--;
      call_release(pr.i_mig, 90);
      break;

    // ---- moveContents ----
    case 110:
      pr.pc = (s.curr_ind == pr.index && !pr.to_be_moved.empty()) ? 111 : 103;
      break;
    case 111: {
      const Hashtable& from = s.heap.at(pr.from_mC);
      pr.i_mC = pick_move_slot(pr, from.size);
      pr.move_cursor = (pr.i_mC + 1) % from.size;
      pr.v_mC = from.table[pr.i_mC];
      pr.pc = (pr.v_mC == kDone) ? 112 : 114;
      break;
    }
    case 112:
      pr.to_be_moved.erase(pr.i_mC);
      pr.stats.removals112++;
      pr.pc = 110;
      break;
    case 114: {
      Hashtable& from = s.heap.at(pr.from_mC);
      if (from.table[pr.i_mC] == pr.v_mC) {
        from.table[pr.i_mC] = mark_old(pr.v_mC);
        if (!oldp(pr.v_mC) && !is_null(val(pr.v_mC))) pr.stats.tag114_value++;
        pr.pc = 116;
      } else {
        pr.pc = 110;
      }
      break;
    }
    case 116:
      if (!is_null(val(pr.v_mC))) {
        pr.v_mE = val(pr.v_mC);
        pr.stats.move_calls++;
        pr.pc = 120;
      } else {
        pr.pc = 117;
      }
      break;
    case 117:
      s.heap.at(pr.from_mC).table[pr.i_mC] = kDone;
      pr.pc = 118;
      break;
    case 118:
      pr.to_be_moved.erase(pr.i_mC);
      pr.pc = 110;
      break;

    // ---- moveElement ----
    case 120:
      pr.n_mE = 0;
      pr.b_mE = false;
      pr.a_mE = adr(pr.v_mE);
      pr.m_mE = s.heap.at(pr.to_mC).size;
      pr.pc = 121;
      break;
    case 121:
      pr.k_mE = probe_key(pr.a_mE, pr.m_mE, pr.n_mE, s.mixer);
      pr.w_mE = s.heap.at(pr.to_mC).table[pr.k_mE];
      if (is_null(pr.w_mE)) {
        pr.pc = 123;
      } else {
        pr.n_mE++;
        pr.pc = 125;
      }
      break;
    case 123: {
      Hashtable& to = s.heap.at(pr.to_mC);
      if (is_null(to.table[pr.k_mE])) {
        pr.b_mE = true;
        to.table[pr.k_mE] = to_evalue(pr.v_mE);
        pr.stats.cas123_wins++;
      }
      pr.pc = 125;
      break;
    }
    case 125:
      pr.pc = (pr.b_mE || adr(pr.w_mE) == pr.a_mE || s.curr_ind != pr.index) ? 126 : 121;
      break;
    case 126:
      if (pr.b_mE) s.heap.at(pr.to_mC).occ++;
      pr.pc = 117;
      break;

    default:
      throw ProtocolViolation("pc outside the label set");
  }
  return label;
}

// ---- serialization ----

namespace {

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

std::string serialize(const ModelState& s) {
  std::string out;
  out.reserve(2048);
  put_u64(out, s.P);
  put_u64(out, s.curr_ind);
  for (std::uint32_t i = 1; i <= s.slots(); ++i) {
    put_u64(out, s.H[i]);
    put_u64(out, s.busy[i]);
    put_u64(out, s.prot[i]);
    put_u64(out, s.next[i]);
  }
  put_u64(out, s.heap.next_id());
  put_u64(out, s.heap.live_count());
  for (const auto& [id, t] : s.heap.entries()) {
    put_u64(out, id);
    put_u64(out, t.size);
    put_u64(out, t.bound);
    put_u64(out, t.occ);
    put_u64(out, t.dels);
    for (EValue e : t.table) put_u64(out, e.bits);
  }
  auto xs = s.X.support();
  std::sort(xs.begin(), xs.end());
  put_u64(out, xs.size());
  for (Address a : xs) {
    put_u64(out, a);
    put_u64(out, s.X.get(a).bits);
  }
  put_u64(out, s.Y.size());
  for (EValue e : s.Y) put_u64(out, e.bits);
  for (const ProcState& pr : s.proc) {
    put_u64(out, static_cast<std::uint64_t>(pr.pc));
    put_u64(out, pr.index);
    put_u64(out, pr.a_fi); put_u64(out, pr.r_fi.bits); put_u64(out, pr.n_fi);
    put_u64(out, pr.l_fi); put_u64(out, pr.h_fi); put_u64(out, pr.cnt_fi);
    put_u64(out, pr.rS_fi.bits);
    put_u64(out, pr.a_del); put_u64(out, pr.r_del.bits); put_u64(out, pr.k_del);
    put_u64(out, pr.l_del); put_u64(out, pr.n_del); put_u64(out, pr.h_del);
    put_u64(out, pr.suc_del); put_u64(out, pr.sucS_del); put_u64(out, pr.cnt_del);
    put_u64(out, pr.v_ins.bits); put_u64(out, pr.a_ins); put_u64(out, pr.r_ins.bits);
    put_u64(out, pr.k_ins); put_u64(out, pr.l_ins); put_u64(out, pr.n_ins);
    put_u64(out, pr.h_ins); put_u64(out, pr.suc_ins); put_u64(out, pr.sucS_ins);
    put_u64(out, pr.cnt_ins);
    put_u64(out, pr.v_ass.bits); put_u64(out, pr.a_ass); put_u64(out, pr.r_ass.bits);
    put_u64(out, pr.k_ass); put_u64(out, pr.l_ass); put_u64(out, pr.n_ass);
    put_u64(out, pr.h_ass); put_u64(out, pr.suc_ass); put_u64(out, pr.cnt_ass);
    put_u64(out, pr.i_rA); put_u64(out, pr.h_rA);
    put_u64(out, pr.i_nT); put_u64(out, pr.scan_offset);
    put_u64(out, pr.i_mig); put_u64(out, pr.h_mig);
    put_u64(out, pr.from_mC); put_u64(out, pr.to_mC);
    put_u64(out, pr.to_be_moved.size());
    for (std::uint32_t i : pr.to_be_moved) put_u64(out, i);
    put_u64(out, pr.i_mC); put_u64(out, pr.v_mC.bits); put_u64(out, pr.move_cursor);
    put_u64(out, pr.v_mE.bits); put_u64(out, pr.a_mE); put_u64(out, pr.k_mE);
    put_u64(out, pr.m_mE); put_u64(out, pr.n_mE); put_u64(out, pr.w_mE.bits);
    put_u64(out, pr.b_mE);
    put_u64(out, pr.ret_gA); put_u64(out, pr.ret_rA);
    put_u64(out, pr.ret_ref); put_u64(out, pr.ret_nT);
    put_u64(out, pr.script_pos);
    put_u64(out, pr.stats.ops_done); put_u64(out, pr.stats.tas78_wins);
    put_u64(out, pr.stats.cas84_wins); put_u64(out, pr.stats.cas103_wins);
    put_u64(out, pr.stats.cas70_wins); put_u64(out, pr.stats.deallocs);
    put_u64(out, pr.stats.tag114_value); put_u64(out, pr.stats.removals112);
    put_u64(out, pr.stats.move_calls); put_u64(out, pr.stats.cas123_wins);
  }
  for (const auto& q : s.forced_slots) {
    put_u64(out, q.size());
    for (std::uint32_t i : q) put_u64(out, i);
  }
  return out;
}

std::uint64_t state_hash(const ModelState& s) {
  return std::hash<std::string>{}(serialize(s));
}

std::string dump_json(const ModelState& s) {
  nlohmann::json j;
  j["P"] = s.P;
  j["curr_ind"] = s.curr_ind;
  for (std::uint32_t i = 1; i <= s.slots(); ++i) {
    nlohmann::json slot;
    slot["H"] = s.H[i];
    slot["busy"] = s.busy[i];
    slot["prot"] = s.prot[i];
    slot["next"] = s.next[i];
    j["registry"].push_back(slot);
  }
  for (const auto& [id, t] : s.heap.entries()) {
    nlohmann::json tj;
    tj["id"] = id;
    tj["size"] = t.size;
    tj["bound"] = t.bound;
    tj["occ"] = t.occ;
    tj["dels"] = t.dels;
    for (EValue e : t.table) tj["slots"].push_back(e.bits);
    j["heap"].push_back(tj);
  }
  j["h_index"] = s.heap.next_id();
  auto xs = s.X.support();
  std::sort(xs.begin(), xs.end());
  for (Address a : xs) j["X"][std::to_string(a)] = s.X.get(a).bits;
  for (EValue e : s.Y) j["Y"].push_back(e.bits);
  for (std::uint32_t p = 1; p <= s.P; ++p) {
    const ProcState& pr = s.at(p);
    nlohmann::json pj;
    pj["pc"] = pr.pc;
    pj["index"] = pr.index;
    pj["find"] = {{"a", pr.a_fi}, {"r", pr.r_fi.bits}, {"n", pr.n_fi}, {"l", pr.l_fi},
                  {"h", pr.h_fi}, {"cnt", pr.cnt_fi}, {"rS", pr.rS_fi.bits}};
    pj["del"] = {{"a", pr.a_del}, {"r", pr.r_del.bits}, {"k", pr.k_del}, {"l", pr.l_del},
                 {"n", pr.n_del}, {"h", pr.h_del}, {"suc", pr.suc_del},
                 {"sucS", pr.sucS_del}, {"cnt", pr.cnt_del}};
    pj["ins"] = {{"v", pr.v_ins.bits}, {"a", pr.a_ins}, {"r", pr.r_ins.bits},
                 {"k", pr.k_ins}, {"l", pr.l_ins}, {"n", pr.n_ins}, {"h", pr.h_ins},
                 {"suc", pr.suc_ins}, {"sucS", pr.sucS_ins}, {"cnt", pr.cnt_ins}};
    pj["ass"] = {{"v", pr.v_ass.bits}, {"a", pr.a_ass}, {"r", pr.r_ass.bits},
                 {"k", pr.k_ass}, {"l", pr.l_ass}, {"n", pr.n_ass}, {"h", pr.h_ass},
                 {"suc", pr.suc_ass}, {"cnt", pr.cnt_ass}};
    pj["rA"] = {{"i", pr.i_rA}, {"h", pr.h_rA}};
    pj["nT"] = {{"i", pr.i_nT}, {"scan_offset", pr.scan_offset}};
    pj["mig"] = {{"i", pr.i_mig}, {"h", pr.h_mig}};
    pj["mC"] = {{"from", pr.from_mC}, {"to", pr.to_mC}, {"i", pr.i_mC},
                {"v", pr.v_mC.bits}, {"cursor", pr.move_cursor},
                {"pending", nlohmann::json(pr.to_be_moved)}};
    pj["mE"] = {{"v", pr.v_mE.bits}, {"a", pr.a_mE}, {"k", pr.k_mE}, {"m", pr.m_mE},
                {"n", pr.n_mE}, {"w", pr.w_mE.bits}, {"b", pr.b_mE}};
    pj["ret"] = {{"gA", pr.ret_gA}, {"rA", pr.ret_rA}, {"ref", pr.ret_ref}, {"nT", pr.ret_nT}};
    pj["script_pos"] = pr.script_pos;
    j["proc"].push_back(pj);
  }
  return j.dump(2);
}

} // namespace lfht
