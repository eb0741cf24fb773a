#pragma once

#include <optional>
#include <vector>

#include "coinmard/integer.hpp"

namespace coinmard {

// Two coin denominations, larger first. Invariant: larger > smaller >= 1.
class CoinPair {
 public:
  CoinPair(u64 larger, u64 smaller);

  u64 x() const noexcept { return x_; }
  u64 y() const noexcept { return y_; }
  u64 gcd() const noexcept { return g_; }
  bool reduced() const noexcept { return g_ == 1; }

  // The pair divided through by its gcd.
  CoinPair reduce() const { return {x_ / g_, y_ / g_}; }

  friend bool operator==(const CoinPair&, const CoinPair&) = default;

 private:
  u64 x_;
  u64 y_;
  u64 g_;
};

// Nonnegative (a, b) with a*x + b*y == target. The identity is checked on
// construction; a mismatch throws VerificationError.
class Representation {
 public:
  Representation(const CoinPair& pair, u64 target, u64 a, u64 b);

  u64 a() const noexcept { return a_; }
  u64 b() const noexcept { return b_; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  u64 a_;
  u64 b_;
};

// x*y - x - y for a coprime pair. Throws NotCoprimeError or, when y == 1,
// AllRepresentableError.
u64 frobenius_number(const CoinPair& pair);

bool is_representable(const CoinPair& pair, u64 n);

// Solution with the least a, found via a modular inverse. Empty when n is
// not representable.
std::optional<Representation> represent(const CoinPair& pair, u64 n);

inline constexpr u64 kDefaultOracleCap = 10'000'000;

// Every solution by enumeration of a = 0..n/x, ascending in a. Test oracle;
// throws ResourceError when n exceeds cap.
std::vector<Representation> represent_oracle(const CoinPair& pair, u64 n,
                                             u64 cap = kDefaultOracleCap);

}  // namespace coinmard
