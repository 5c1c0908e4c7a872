// Deterministic resolutions of the algorithm's nondeterministic choices.
// The model interpreter and the live library share these so their behaviours
// stay statement-for-statement comparable.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace lfht {

struct TableShape {
  std::uint64_t bound = 0;
  std::uint64_t size = 0;
};

// Replacement-table sizing: keep room for the surviving entries plus the
// worst-case concurrent overshoot (2P), and grow by half the survivors so a
// shrinking map migrates less often. The size leaves the slack the occupancy
// accounting needs (bound + 2P < size) and at least one probe home per
// process (size >= P).
inline TableShape next_table_shape(std::uint64_t old_bound, std::uint64_t old_dels, std::uint64_t P) {
  std::uint64_t survivors = old_bound > old_dels ? old_bound - old_dels : 0;
  std::uint64_t growth = std::max<std::uint64_t>(1, (survivors + 1) / 2);
  TableShape shape;
  shape.bound = survivors + 2 * P + growth;
  shape.size = 1;
  while (shape.size <= shape.bound + 2 * P || shape.size < P) shape.size <<= 1;
  return shape;
}

// First table. bound 0 means "derive from size"; infeasible combinations are
// rejected by the allocation itself (bound + 2P < size, size >= P).
inline TableShape initial_shape(std::uint64_t size, std::uint64_t bound, std::uint64_t P) {
  if (bound == 0) bound = size > 2 * P + 1 ? size - 2 * P - 1 : 1;
  return {bound, size};
}

// Registry slot to try when staging a replacement table. Distinct processes
// start at distinct slots; the offset advances after every failed claim.
inline std::uint32_t scan_slot(std::uint32_t p, std::uint32_t offset, std::uint32_t P) {
  return ((p + offset) % (2 * P)) + 1;
}

// First source slot a process migrates; processes fan out across the table
// and walk cyclically from there.
inline std::uint64_t move_start(std::uint32_t p, std::uint64_t size, std::uint32_t P) {
  return (std::uint64_t{p} * size / P) % size;
}

} // namespace lfht
