#include "coinmard/exponent_audit.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coinmard/frobenius.hpp"
#include "parallel.hpp"

namespace coinmard {
namespace {

void require_odd_v(u64 v) {
  if (v < 9 || v % 2 == 0)
    throw DomainError("v must be odd and >= 9, got " + std::to_string(v));
  // v + 1 must not wrap.
  if (v == ~u64{0}) throw OverflowError("v too large");
}

CoinPair coins_for(u64 v) { return {v + 1, v - 3}; }

constexpr std::size_t kAuditChunk = 4096;

}  // namespace

GcdClass gcd_class(u64 v) {
  require_odd_v(v);
  const u64 g = std::gcd(v + 1, v - 3);
  // Both coins are even and differ by 4.
  if (g != 2 && g != 4) throw VerificationError("gcd(v+1, v-3) outside {2, 4}");
  return {g, g == 2 ? 1u : 2u};
}

u64 sylvester_threshold(u64 v) {
  const auto [g, d] = gcd_class(v);
  return checked_mul((v + 1) / g - 1, (v - 3) / g - 1);
}

void ExponentCertificate::validate() const {
  const auto fail = [this](const char* what) {
    throw VerificationError("certificate for v=" + std::to_string(v) + ": " + what);
  };
  if (g != std::gcd(v + 1, v - 3) || (u64{1} << d) != g) fail("g/d mismatch");
  if ((g == 2) != (v % 4 == 1)) fail("residue law");
  if (threshold != ((v + 1) / g - 1) * ((v - 3) / g - 1)) fail("threshold mismatch");
  if (k != bit_length(threshold)) fail("k is not the least exponent with 2^k > N");
  if (t != k + d) fail("t != k + d");
  using u128 = unsigned __int128;
  if (t >= 128 || static_cast<u128>(a) * (v + 1) + static_cast<u128>(b) * (v - 3) != u128{1} << t)
    fail("a(v+1) + b(v-3) != 2^t");
}

ExponentCertificate exponent_certificate(u64 v) {
  const auto [g, d] = gcd_class(v);
  const u64 threshold = sylvester_threshold(v);
  const unsigned k = bit_length(threshold);
  const CoinPair reduced = coins_for(v).reduce();
  const auto rep = represent(reduced, pow2(k));
  if (!rep)
    throw VerificationError("no representation of 2^" + std::to_string(k) +
                            " above the threshold for v=" + std::to_string(v));
  // Multiplying the reduced relation by g = 2^d lifts it to the full coins.
  ExponentCertificate cert{v, g, d, threshold, k, k + d, rep->a(), rep->b()};
  pow2(cert.t);
  cert.validate();
  return cert;
}

MinimalExponentWitness minimal_exponent(u64 v, unsigned t_cap) {
  require_odd_v(v);
  const CoinPair coins = coins_for(v);
  for (unsigned t = 0; t < t_cap; ++t) {
    if (auto rep = represent(coins, pow2(t))) return {v, t, rep->a(), rep->b()};
  }
  throw ResourceError("cap exceeded: no power of two below 2^" + std::to_string(t_cap) +
                      " is representable for v=" + std::to_string(v));
}

std::string_view to_string(BoundModel model) noexcept {
  return model == BoundModel::claimed ? "claimed" : "corrected";
}

std::optional<BoundModel> parse_bound_model(std::string_view text) noexcept {
  if (text == "claimed") return BoundModel::claimed;
  if (text == "corrected") return BoundModel::corrected;
  return std::nullopt;
}

unsigned bound_value(BoundModel model, u64 q) {
  if (q <= 4) throw DomainError("bound requires q > 4, got " + std::to_string(q));
  const u64 m = q - 3;
  // floor(2 log2 m) = floor(log2 m^2) = bit_length(m^2) - 1.
  const unsigned claimed = bit_length(checked_mul(m, m)) - 1;
  return model == BoundModel::claimed ? claimed : claimed + 1;
}

unsigned estimated_k(u64 v) {
  require_odd_v(v);
  return bound_value(BoundModel::claimed, v) - 1;
}

bool multiplicativity_holds(u64 p, u64 q, BoundModel model) {
  return bound_value(model, p) + bound_value(model, q) < bound_value(model, checked_mul(p, q));
}

std::vector<MultiplicativityFailure> scan_multiplicativity(BoundModel model, u64 max_q) {
  if (max_q < 5) throw DomainError("scan requires max >= 5");
  std::vector<unsigned> bounds(max_q + 1);
  for (u64 q = 5; q <= max_q; ++q) bounds[q] = bound_value(model, q);
  std::vector<MultiplicativityFailure> out;
  for (u64 p = 5; p <= max_q; ++p) {
    for (u64 q = p; q <= max_q; ++q) {
      const unsigned pq = bound_value(model, checked_mul(p, q));
      if (!(bounds[p] + bounds[q] < pq)) out.push_back({p, q, bounds[p], bounds[q], pq});
    }
  }
  return out;
}

AuditRow audit(u64 v) {
  const ExponentCertificate cert = exponent_certificate(v);
  const MinimalExponentWitness witness = minimal_exponent(v);
  if (witness.t_min > cert.t) throw VerificationError("t_min exceeds procedural t");

  AuditRow row{};
  row.v = v;
  row.residue = static_cast<unsigned>(v % 4);
  row.g = cert.g;
  row.d = cert.d;
  row.threshold = cert.threshold;
  row.k = cert.k;
  row.t = cert.t;
  row.order_exponent = cert.t + 1;
  row.t_min = witness.t_min;
  row.bound_claimed = bound_value(BoundModel::claimed, v);
  row.bound_corrected = bound_value(BoundModel::corrected, v);
  row.k_estimate = estimated_k(v);
  row.t_estimate = row.k_estimate + cert.d;
  // The matrix built from the certificate has order 2^(t+1) v, so the
  // exponent that must respect the claimed cap is t + 1.
  row.violates_claimed = row.order_exponent > row.bound_claimed;
  return row;
}

std::vector<u64> audit_candidates(const AuditRange& range) {
  if (range.from < 9 || range.from > range.to)
    throw DomainError("audit range requires 9 <= from <= to");
  if (range.residue && *range.residue != 1 && *range.residue != 3)
    throw DomainError("residue filter must be 1 or 3");
  std::optional<unsigned> residue = range.residue;
  if (range.primes_only && !residue) residue = 1;

  std::vector<u64> out;
  const u64 first = range.from | 1u;
  for (u64 v = first; v <= range.to; v += 2) {
    if (residue && v % 4 != *residue) continue;
    if (range.primes_only && !is_prime(v)) continue;
    out.push_back(v);
    if (v > range.to - 2) break;
  }
  return out;
}

AuditSummary audit_range(const AuditRange& range, const std::function<void(const AuditRow&)>& sink,
                         unsigned workers) {
  const std::vector<u64> candidates = audit_candidates(range);
  AuditSummary summary;
  std::vector<AuditRow> chunk;
  for (std::size_t begin = 0; begin < candidates.size(); begin += kAuditChunk) {
    const std::size_t count = std::min(kAuditChunk, candidates.size() - begin);
    chunk.assign(count, AuditRow{});
    detail::parallel_for(count, workers, [&](std::size_t i) { chunk[i] = audit(candidates[begin + i]); });
    for (const AuditRow& row : chunk) {
      ++summary.rows;
      if (row.violates_claimed) ++summary.violations;
      summary.max_gap = std::max(summary.max_gap, row.t - row.t_min);
      sink(row);
    }
  }
  return summary;
}

std::vector<AuditRow> audit_rows(const AuditRange& range, unsigned workers) {
  std::vector<AuditRow> rows;
  audit_range(range, [&](const AuditRow& row) { rows.push_back(row); }, workers);
  return rows;
}

}  // namespace coinmard
