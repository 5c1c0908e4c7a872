// Sequential reference behaviour of the map: a total function from addresses to
// values (absent = null) plus the four primitive actions. The model executes
// these as ghost updates at linearization points; the linearizability checker
// and the unit tests replay them as the correctness oracle.
#pragma once

#include <unordered_map>
#include <vector>

#include "lfht/encoding.hpp"

namespace lfht {

class AbstractMap {
public:
  Value get(Address a) const {
    auto it = map_.find(a);
    return it == map_.end() ? kNull : it->second;
  }

  void set(Address a, Value v) {
    if (is_null(v)) {
      map_.erase(a);
    } else {
      map_[a] = v;
    }
  }

  // Addresses currently bound to a non-null value.
  std::vector<Address> support() const {
    std::vector<Address> out;
    out.reserve(map_.size());
    for (const auto& [a, v] : map_) out.push_back(a);
    return out;
  }

  std::size_t size() const { return map_.size(); }

  friend bool operator==(const AbstractMap& x, const AbstractMap& y) {
    if (x.map_.size() != y.map_.size()) return false;
    for (const auto& [a, v] : x.map_) {
      auto it = y.map_.find(a);
      if (it == y.map_.end() || !(it->second == v)) return false;
    }
    return true;
  }

private:
  std::unordered_map<Address, Value> map_;
};

// The primitive actions. Mutators report the success flag the concurrent
// operations must agree with.
inline Value spec_find(const AbstractMap& x, Address a) { return x.get(a); }

inline bool spec_delete(AbstractMap& x, Address a) {
  bool suc = !is_null(x.get(a));
  if (suc) x.set(a, kNull);
  return suc;
}

inline bool spec_insert(AbstractMap& x, Value v) {
  Address a = adr(v);
  bool suc = is_null(x.get(a));
  if (suc) x.set(a, v);
  return suc;
}

inline void spec_assign(AbstractMap& x, Value v) { x.set(adr(v), v); }

// Plain associative container with the library's operation surface; used by
// tests as an independent replay target.
class ReferenceMap {
public:
  Value find(Address a) const { return spec_find(x_, a); }
  bool erase(Address a) { return spec_delete(x_, a); }
  bool insert(Value v) { return spec_insert(x_, v); }
  void assign(Value v) { spec_assign(x_, v); }

  const AbstractMap& state() const { return x_; }

private:
  AbstractMap x_;
};

} // namespace lfht
