// Tagged value words and the open-addressing probe function.
//
// A slot word packs an address, a payload and a migration tag into 64 bits:
//
//   bit 63      migration ("old") tag
//   bits 32..62 payload (31 bits)
//   bits 0..31  address
//
// Word 0 is the absent value (null). The body with address 0 / payload 1 is
// reserved as the deletion marker (del); user values must carry a non-zero
// address, so neither reserved body is constructible through make_value().
// The tombstone old(null), written when a migrated slot has been fully
// drained, is called done.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace lfht {

using Address = std::uint32_t;
using Payload = std::uint32_t; // only the low 31 bits are usable

inline constexpr std::uint64_t kOldBit = std::uint64_t{1} << 63;
inline constexpr std::uint64_t kBodyMask = ~kOldBit;
inline constexpr std::uint64_t kAddressMask = 0xffffffffull;
inline constexpr std::uint64_t kDelBody = std::uint64_t{1} << 32;
inline constexpr Payload kMaxPayload = 0x7fffffffu;

// A plain value: never old-tagged, never the del marker. Word 0 is null.
struct Value {
  std::uint64_t bits = 0;

  friend constexpr bool operator==(Value, Value) = default;
};

// An extended slot word: a Value, or del, or an old-tagged Value.
struct EValue {
  std::uint64_t bits = 0;

  friend constexpr bool operator==(EValue, EValue) = default;
};

inline constexpr Value kNull{};
inline constexpr EValue kENull{};
inline constexpr EValue kDel{kDelBody};
inline constexpr EValue kDone{kOldBit};

inline Value make_value(Address a, Payload payload) {
  if (a == 0) throw std::invalid_argument("value address 0 is reserved");
  if (payload > kMaxPayload) throw std::invalid_argument("payload exceeds 31 bits");
  return Value{(std::uint64_t{payload} << 32) | a};
}

constexpr bool is_null(Value v) { return v.bits == 0; }
constexpr Address adr(Value v) { return static_cast<Address>(v.bits & kAddressMask); }
constexpr Payload payload(Value v) { return static_cast<Payload>((v.bits >> 32) & kMaxPayload); }

constexpr EValue to_evalue(Value v) { return EValue{v.bits}; }

constexpr bool oldp(EValue e) { return (e.bits & kOldBit) != 0; }
constexpr bool is_del(EValue e) { return e.bits == kDelBody; }

// Plain payload view: val(del) = null, val(old(v)) = v.
constexpr Value val(EValue e) {
  std::uint64_t body = e.bits & kBodyMask;
  return body == kDelBody ? Value{} : Value{body};
}

constexpr bool is_null(EValue e) { return e.bits == 0; }
constexpr Address adr(EValue e) { return adr(val(e)); }

// Tag for migration; collapses del to done since val(del) = null.
constexpr EValue mark_old(EValue e) { return EValue{val(e).bits | kOldBit}; }

// Probe mixers. The default is the splitmix64 finalizer; the identity mixer
// makes slot placement predictable in tests.
using Mixer = std::uint64_t (*)(std::uint64_t);

constexpr std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t identity_mix(std::uint64_t x) { return x; }

// n-th probe slot for address a in a table of length l. Walks every slot of
// the table once over n = 0..l-1.
constexpr std::size_t probe_key(Address a, std::size_t l, std::size_t n, Mixer mixer = mix64) {
  return static_cast<std::size_t>((mixer(a) + n) % l);
}

} // namespace lfht
