#include "coinmard/hadamard.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "parallel.hpp"

namespace coinmard {

SignMatrix::SignMatrix(std::size_t n)
    : n_(n), stride_((n + kWordBits - 1) / kWordBits), bits_(n * stride_, 0) {
  if (n == 0) throw DomainError("matrix order must be positive");
}

void SignMatrix::set_negative(std::size_t i, std::size_t j, bool neg) noexcept {
  u64& word = bits_[i * stride_ + j / kWordBits];
  const u64 mask = u64{1} << (j % kWordBits);
  word = neg ? (word | mask) : (word & ~mask);
}

void SignMatrix::flip(std::size_t i, std::size_t j) noexcept {
  bits_[i * stride_ + j / kWordBits] ^= u64{1} << (j % kWordBits);
}

long long row_dot(const SignMatrix& m, std::size_t i, std::size_t j) noexcept {
  const auto a = m.row(i);
  const auto b = m.row(j);
  long long differ = 0;
  for (std::size_t w = 0; w < a.size(); ++w) differ += std::popcount(a[w] ^ b[w]);
  return static_cast<long long>(m.order()) - 2 * differ;
}

VerifyResult is_hadamard(const SignMatrix& m, unsigned workers) {
  const std::size_t n = m.order();
  const auto expected = [n](std::size_t i, std::size_t j) {
    return i == j ? static_cast<long long>(n) : 0LL;
  };

  // Rows are claimed in ascending order, so once row r fails no row above r
  // can hold the lexicographically first violation.
  std::atomic<std::size_t> first_bad_row{n};
  std::vector<std::optional<Violation>> per_row(n);
  detail::parallel_for(n, detail::resolve_workers(workers, n / 64), [&](std::size_t i) {
    if (i > first_bad_row.load(std::memory_order_relaxed)) return;
    for (std::size_t j = i; j < n; ++j) {
      const long long dot = row_dot(m, i, j);
      if (dot != expected(i, j)) {
        per_row[i] = Violation{i, j, dot};
        std::size_t cur = first_bad_row.load();
        while (i < cur && !first_bad_row.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  const std::size_t bad = first_bad_row.load();
  if (bad == n) return {};
  return {per_row[bad]};
}

bool order_admissible(u64 n) noexcept { return n == 1 || n == 2 || (n != 0 && n % 4 == 0); }

MatrixLimits MatrixLimits::from_env() {
  MatrixLimits limits;
  if (const char* env = std::getenv("COINMARD_MAX_ORDER"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
      throw DomainError(std::string("COINMARD_MAX_ORDER is not a positive integer: ") + env);
    limits.max_order = value;
  }
  return limits;
}

HadamardMatrix HadamardMatrix::verify(SignMatrix m, unsigned workers) {
  const VerifyResult result = is_hadamard(m, workers);
  if (!result) {
    const Violation& v = *result.violation;
    throw VerificationError("not Hadamard: rows (" + std::to_string(v.i) + "," +
                            std::to_string(v.j) + ") have dot product " + std::to_string(v.dot));
  }
  return HadamardMatrix(std::move(m));
}

namespace {

void require_order(std::size_t order, const MatrixLimits& limits) {
  if (order > limits.max_order)
    throw ResourceError("matrix order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(limits.max_order));
}

}  // namespace

HadamardMatrix sylvester(unsigned k, const MatrixLimits& limits) {
  if (k >= 32) throw ResourceError("sylvester exponent " + std::to_string(k) + " too large");
  const std::size_t n = std::size_t{1} << k;
  require_order(n, limits);

  SignMatrix m(1);
  for (unsigned level = 0; level < k; ++level) {
    // [[H, H], [H, -H]]
    const std::size_t half = m.order();
    SignMatrix next(2 * half);
    if (half % SignMatrix::kWordBits == 0) {
      const std::size_t words = m.words_per_row();
      for (std::size_t i = 0; i < half; ++i) {
        const auto src = m.row(i);
        auto top = next.row(i);
        auto bottom = next.row(i + half);
        for (std::size_t w = 0; w < words; ++w) {
          top[w] = top[w + words] = bottom[w] = src[w];
          bottom[w + words] = ~src[w];
        }
      }
      m = std::move(next);
      continue;
    }
    for (std::size_t i = 0; i < half; ++i) {
      for (std::size_t j = 0; j < half; ++j) {
        const bool neg = m.negative(i, j);
        next.set_negative(i, j, neg);
        next.set_negative(i, j + half, neg);
        next.set_negative(i + half, j, neg);
        next.set_negative(i + half, j + half, !neg);
      }
    }
    m = std::move(next);
  }
  return HadamardMatrix::verify(std::move(m));
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b,
                         const MatrixLimits& limits) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (nb != 0 && na > limits.max_order / nb)
    throw ResourceError("kronecker order " + std::to_string(na) + "*" + std::to_string(nb) +
                        " exceeds cap " + std::to_string(limits.max_order));
  SignMatrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < nb; ++k) {
      const std::size_t row = i * nb + k;
      for (std::size_t j = 0; j < na; ++j) {
        const bool sign_a = a.signs().negative(i, j);
        for (std::size_t l = 0; l < nb; ++l)
          m.set_negative(row, j * nb + l, sign_a != b.signs().negative(k, l));
      }
    }
  }
  return HadamardMatrix::verify(std::move(m));
}

HadamardMatrix paley_i(u64 q, const MatrixLimits& limits) {
  if (q % 4 != 3 || !is_prime(q))
    throw DomainError("paley_i requires a prime q = 3 (mod 4), got " + std::to_string(q));
  if (q > limits.max_paley_prime)
    throw ResourceError("paley prime " + std::to_string(q) + " exceeds cap " +
                        std::to_string(limits.max_paley_prime));
  require_order(q + 1, limits);

  std::vector<bool> residue(q, false);
  for (u64 x = 1; x < q; ++x) residue[mul_mod(x, x, q)] = true;

  SignMatrix m(q + 1);
  m.set_negative(0, 0, true);
  for (u64 i = 0; i < q; ++i) {
    for (u64 j = 0; j < q; ++j) {
      if (i == j) continue;
      const u64 diff = (i + q - j) % q;
      m.set_negative(i + 1, j + 1, !residue[diff]);
    }
  }
  return HadamardMatrix::verify(std::move(m));
}

TargetOrder target_order(const ExponentCertificate& cert) {
  const unsigned exponent = cert.t + 1;
  const u64 order = checked_mul(pow2(exponent), cert.v);
  return {exponent, order, order_admissible(order)};
}

}  // namespace coinmard
