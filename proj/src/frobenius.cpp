#include "coinmard/frobenius.hpp"

#include <numeric>
#include <string>

namespace coinmard {

CoinPair::CoinPair(u64 larger, u64 smaller) : x_(larger), y_(smaller), g_(0) {
  if (smaller < 1 || larger <= smaller)
    throw DomainError("coin pair requires x > y >= 1, got (" + std::to_string(larger) + ", " +
                      std::to_string(smaller) + ")");
  g_ = std::gcd(larger, smaller);
}

Representation::Representation(const CoinPair& pair, u64 target, u64 a, u64 b) : a_(a), b_(b) {
  using u128 = unsigned __int128;
  const u128 sum = static_cast<u128>(a) * pair.x() + static_cast<u128>(b) * pair.y();
  if (sum != target)
    throw VerificationError("representation " + std::to_string(a) + "*" + std::to_string(pair.x()) +
                            " + " + std::to_string(b) + "*" + std::to_string(pair.y()) +
                            " != " + std::to_string(target));
}

u64 frobenius_number(const CoinPair& pair) {
  if (!pair.reduced()) throw NotCoprimeError();
  if (pair.y() == 1) throw AllRepresentableError();
  // x*y >= x + y whenever y >= 2 and x > y.
  return checked_mul(pair.x(), pair.y()) - pair.x() - pair.y();
}

bool is_representable(const CoinPair& pair, u64 n) { return represent(pair, n).has_value(); }

std::optional<Representation> represent(const CoinPair& pair, u64 n) {
  if (n % pair.gcd() != 0) return std::nullopt;
  const CoinPair r = pair.reduce();
  const u64 target = n / pair.gcd();

  // a must satisfy a*x = target (mod y); the least such a is the candidate.
  u64 a = 0;
  if (r.y() > 1) a = mul_mod(target % r.y(), inverse_mod(r.x() % r.y(), r.y()), r.y());
  if (a > target / r.x()) return std::nullopt;
  const u64 b = (target - a * r.x()) / r.y();
  return Representation(pair, n, a, b);
}

std::vector<Representation> represent_oracle(const CoinPair& pair, u64 n, u64 cap) {
  if (n > cap)
    throw ResourceError("oracle cap: target " + std::to_string(n) + " exceeds " + std::to_string(cap));
  std::vector<Representation> out;
  for (u64 a = 0; a * pair.x() <= n; ++a) {
    const u64 rest = n - a * pair.x();
    if (rest % pair.y() == 0) out.emplace_back(pair, n, a, rest / pair.y());
  }
  return out;
}

}  // namespace coinmard
