#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coinmard/exponent_audit.hpp"
#include "coinmard/integer.hpp"

namespace coinmard {

// Square +-1 matrix with bit-packed rows: a set bit is -1, a clear bit +1.
// Padding bits past column n are always clear.
class SignMatrix {
 public:
  static constexpr std::size_t kWordBits = 64;

  explicit SignMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool negative(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  int at(std::size_t i, std::size_t j) const noexcept { return negative(i, j) ? -1 : 1; }

  void set_negative(std::size_t i, std::size_t j, bool neg) noexcept;
  void flip(std::size_t i, std::size_t j) noexcept;

  std::span<const u64> row(std::size_t i) const noexcept {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<u64> row(std::size_t i) noexcept { return {bits_.data() + i * stride_, stride_}; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<u64> bits_;
};

// Dot product of rows i and j over +-1 entries: n - 2 popcount(r_i ^ r_j).
long long row_dot(const SignMatrix& m, std::size_t i, std::size_t j) noexcept;

struct Violation {
  std::size_t i;
  std::size_t j;
  long long dot;
};

struct VerifyResult {
  std::optional<Violation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Checks H H^T = nI. On failure reports the lexicographically first row
// pair (i <= j) whose dot product is wrong, independent of worker count.
VerifyResult is_hadamard(const SignMatrix& m, unsigned workers = 0);

// n in {1, 2} or n divisible by 4.
bool order_admissible(u64 n) noexcept;

struct MatrixLimits {
  std::size_t max_order = std::size_t{1} << 14;
  u64 max_paley_prime = 4099;

  // Defaults, with max_order overridden by COINMARD_MAX_ORDER when set.
  static MatrixLimits from_env();
};

// A SignMatrix that has passed is_hadamard. Only obtainable through verify()
// or the constructors below.
class HadamardMatrix {
 public:
  // Throws VerificationError naming the violated pair.
  static HadamardMatrix verify(SignMatrix m, unsigned workers = 0);

  std::size_t order() const noexcept { return m_.order(); }
  const SignMatrix& signs() const noexcept { return m_; }
  int at(std::size_t i, std::size_t j) const noexcept { return m_.at(i, j); }

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  explicit HadamardMatrix(SignMatrix m) : m_(std::move(m)) {}
  SignMatrix m_;
};

// Order 2^k by repeated 2x2 doubling.
HadamardMatrix sylvester(unsigned k, const MatrixLimits& limits = {});

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b,
                         const MatrixLimits& limits = {});

// Order q+1 for a prime q = 3 (mod 4): [[-1, 1^T], [1, I + Q]] with
// Q_ij = chi(i - j), chi the quadratic character mod q.
HadamardMatrix paley_i(u64 q, const MatrixLimits& limits = {});

struct TargetOrder {
  unsigned exponent;  // t + 1
  u64 order;          // 2^(t+1) v
  bool admissible;
};

// Order accounting only: the construction consuming the certificate is not
// part of this library, so no matrix is produced.
TargetOrder target_order(const ExponentCertificate& cert);

}  // namespace coinmard
