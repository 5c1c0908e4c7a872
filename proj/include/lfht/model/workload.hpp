// Per-process operation scripts driving the model's main loop, plus the
// seeded generator and the text form used by the command line.
#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfht/encoding.hpp"

namespace lfht {

enum class OpKind : std::uint8_t { Find, Erase, Insert, Assign, Release };

struct WorkItem {
  OpKind kind = OpKind::Find;
  Address addr = 1;   // Find/Erase
  Value value = {};   // Insert/Assign

  friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

using Script = std::vector<WorkItem>;

struct MixWeights {
  double find = 0.25;
  double erase = 0.20;
  double insert = 0.40;
  double assign = 0.10;
  double release = 0.05;
};

inline Script random_script(std::uint64_t seed, std::size_t len, const MixWeights& mix,
                            Address lo, Address hi) {
  if (lo == 0 || hi < lo) throw std::invalid_argument("address range must be nonzero and ordered");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> pick({mix.find, mix.erase, mix.insert, mix.assign, mix.release});
  std::uniform_int_distribution<Address> addr(lo, hi);
  std::uniform_int_distribution<Payload> pay(1, 100);
  Script s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    WorkItem w;
    w.kind = static_cast<OpKind>(pick(rng));
    if (w.kind == OpKind::Insert || w.kind == OpKind::Assign) {
      w.value = make_value(addr(rng), pay(rng));
      w.addr = adr(w.value);
    } else {
      w.addr = addr(rng);
    }
    s.push_back(w);
  }
  return s;
}

// Text form: comma- or space-separated ops "f:ADDR", "d:ADDR", "i:ADDR[:PAYLOAD]",
// "a:ADDR[:PAYLOAD]", "r". Payload defaults to the address.
inline Script parse_script(const std::string& text) {
  Script out;
  std::string tok;
  std::istringstream in(text);
  auto flush = [&](const std::string& t) {
    if (t.empty()) return;
    WorkItem w;
    char op = t[0];
    std::uint64_t a = 0, pay = 0;
    bool has_pay = false;
    if (t.size() > 1) {
      if (t[1] != ':') throw std::invalid_argument("bad op token: " + t);
      std::size_t colon = t.find(':', 2);
      a = std::stoull(t.substr(2, colon == std::string::npos ? std::string::npos : colon - 2));
      if (colon != std::string::npos) {
        pay = std::stoull(t.substr(colon + 1));
        has_pay = true;
      }
    }
    switch (op) {
      case 'f': w.kind = OpKind::Find; w.addr = static_cast<Address>(a); break;
      case 'd': w.kind = OpKind::Erase; w.addr = static_cast<Address>(a); break;
      case 'i': w.kind = OpKind::Insert; break;
      case 'a': w.kind = OpKind::Assign; break;
      case 'r': w.kind = OpKind::Release; out.push_back(w); return;
      default: throw std::invalid_argument("bad op token: " + t);
    }
    if (op == 'i' || op == 'a') {
      if (a == 0) throw std::invalid_argument("op needs an address: " + t);
      w.value = make_value(static_cast<Address>(a),
                           static_cast<Payload>(has_pay ? pay : a));
      w.addr = adr(w.value);
    } else if (a == 0) {
      throw std::invalid_argument("op needs an address: " + t);
    }
    out.push_back(w);
  };
  while (in >> tok) {
    std::size_t start = 0, comma;
    while ((comma = tok.find(',', start)) != std::string::npos) {
      flush(tok.substr(start, comma - start));
      start = comma + 1;
    }
    flush(tok.substr(start));
  }
  return out;
}

} // namespace lfht
