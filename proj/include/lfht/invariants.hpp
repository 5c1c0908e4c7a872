// Executable safety catalogue for the model: every catalogued predicate is a
// total check on one ModelState snapshot. A check failure carries the witness
// bindings (process, slot, address) that falsified the predicate.
//
// Ids are short family tags plus a number (Ax1 .. Ot4) and are stable API:
// the CLI accepts them as filter strings and tests assert on them. Two ids
// (Cu5, Ne21) are retired and always pass; they stay registered so listings
// and filters keep a stable id set.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfht/model/state.hpp"

namespace lfht {

struct Violation {
  std::string id;
  std::string detail;
};

// Cardinalities of the helper sets the counting checks are phrased over.
// The slot-indexed families are sized 2P+1 with element 0 unused. Sets that
// range over the replacement table are zero while no replacement is pending.
struct SetCounts {
  std::uint64_t nb_set1 = 0;
  std::uint64_t nb_set2 = 0;
  std::uint64_t de_set1 = 0;
  std::uint64_t de_set2 = 0;
  std::uint64_t de_set3 = 0;
  std::uint64_t oc_set1 = 0;
  std::uint64_t oc_set2 = 0;
  std::uint64_t oc_set3 = 0;
  std::uint64_t oc_set4 = 0;
  std::uint64_t oc_set5 = 0;
  std::uint64_t oc_set6 = 0;
  std::uint64_t oc_set7 = 0;
  std::vector<std::uint64_t> pr_set1, pr_set2, pr_set3, pr_set4;
  std::vector<std::uint64_t> bu_set1, bu_set2;
};

SetCounts count_sets(const ModelState& s);

// All catalogue ids in listing order.
const std::vector<std::string>& invariant_ids();

// Evaluate the whole catalogue, or a subset of ids. Each id contributes at
// most one violation (the first witness found). An unknown id in the subset
// throws std::invalid_argument.
std::vector<Violation> check_invariants(const ModelState& s);
std::vector<Violation> check_invariants(const ModelState& s,
                                        const std::vector<std::string>& subset);

} // namespace lfht
