#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "coinmard/errors.hpp"

namespace coinmard {

using u64 = std::uint64_t;

// Number of bits needed to write x; bit_length(0) == 0.
constexpr unsigned bit_length(u64 x) noexcept { return static_cast<unsigned>(std::bit_width(x)); }

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline u64 pow2(unsigned e) {
  if (e >= 64) throw OverflowError("2^" + std::to_string(e) + " does not fit in 64 bits");
  return u64{1} << e;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

// Inverse of a modulo m for gcd(a, m) == 1. Returns 0 when m == 1.
u64 inverse_mod(u64 a, u64 m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

}  // namespace coinmard
