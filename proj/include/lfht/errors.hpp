#pragma once

#include <stdexcept>
#include <string>

namespace lfht {

// Raised when the access protocol is broken: double free, free of an absent
// table, counter underflow, or an operation whose linearization bookkeeping
// comes out wrong. These indicate a bug in the caller or the library, never
// ordinary contention.
class ProtocolViolation : public std::logic_error {
public:
  explicit ProtocolViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace lfht
