#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "coinmard/integer.hpp"

namespace coinmard {

// g = gcd(v+1, v-3) = 2^d for odd v >= 9.
struct GcdClass {
  u64 g;
  unsigned d;
};

GcdClass gcd_class(u64 v);

// ((v+1)/g - 1) * ((v-3)/g - 1): every integer above it is a nonnegative
// combination of the reduced coins.
u64 sylvester_threshold(u64 v);

// Record of the power-of-two representation a(v+1) + b(v-3) = 2^t built from
// the smallest power of two above the threshold, scaled back up by g.
struct ExponentCertificate {
  u64 v;
  u64 g;
  unsigned d;
  u64 threshold;  // N
  unsigned k;     // least k with 2^k > N
  unsigned t;     // k + d
  u64 a;
  u64 b;

  u64 larger_coin() const noexcept { return v + 1; }
  u64 smaller_coin() const noexcept { return v - 3; }
  // Re-checks every invariant; throws VerificationError on the first failure.
  void validate() const;
};

ExponentCertificate exponent_certificate(u64 v);

struct MinimalExponentWitness {
  u64 v;
  unsigned t_min;
  u64 a;
  u64 b;
};

inline constexpr unsigned kDefaultExponentCap = 64;

// Scans t = 0, 1, ... while t < t_cap and returns the first representable
// 2^t. Throws ResourceError when the scan runs out.
MinimalExponentWitness minimal_exponent(u64 v, unsigned t_cap = kDefaultExponentCap);

enum class BoundModel { claimed, corrected };

std::string_view to_string(BoundModel model) noexcept;
std::optional<BoundModel> parse_bound_model(std::string_view text) noexcept;

// floor(2 log2(q-3)), plus one for the corrected model. Evaluated exactly as
// bit_length((q-3)^2) - 1. Requires q > 4.
unsigned bound_value(BoundModel model, u64 q);

// The looser k = floor(2 log2(v-3)) - 1 used to estimate the procedure.
unsigned estimated_k(u64 v);

// bound(p) + bound(q) < bound(pq) under the given model.
bool multiplicativity_holds(u64 p, u64 q, BoundModel model);

struct MultiplicativityFailure {
  u64 p;
  u64 q;
  unsigned bound_p;
  unsigned bound_q;
  unsigned bound_pq;
};

// All pairs 5 <= p <= q <= max_q where the strict inequality fails, in
// lexicographic order.
std::vector<MultiplicativityFailure> scan_multiplicativity(BoundModel model, u64 max_q);

struct AuditRow {
  u64 v;
  unsigned residue;  // v mod 4
  u64 g;
  unsigned d;
  u64 threshold;
  unsigned k;
  unsigned t;
  unsigned order_exponent;  // t + 1: the matrix order is 2^(t+1) v
  unsigned t_min;
  unsigned bound_claimed;
  unsigned bound_corrected;
  unsigned k_estimate;
  unsigned t_estimate;
  bool violates_claimed;
};

AuditRow audit(u64 v);

struct AuditRange {
  u64 from = 9;
  u64 to = 9;
  bool primes_only = false;
  // 1 or 3. With primes_only and no filter, 1 is used.
  std::optional<unsigned> residue;
};

struct AuditSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  unsigned max_gap = 0;  // max of t - t_min
};

// The v values an AuditRange selects, ascending. Throws DomainError on a bad range.
std::vector<u64> audit_candidates(const AuditRange& range);

// Rows are computed by up to `workers` threads (0 = hardware concurrency) and
// handed to `sink` in ascending v on the calling thread.
AuditSummary audit_range(const AuditRange& range, const std::function<void(const AuditRow&)>& sink,
                         unsigned workers = 0);

std::vector<AuditRow> audit_rows(const AuditRange& range, unsigned workers = 0);

}  // namespace coinmard
