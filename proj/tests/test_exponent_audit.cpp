#include <doctest.h>

#include <cmath>
#include <mpfr.h>
#include <set>

#include "coinmard/exponent_audit.hpp"
#include "coinmard/frobenius.hpp"
#include "support/oracles.hpp"

using namespace coinmard;

namespace {

// floor(2 log2 m) with 256-bit MPFR.
unsigned mpfr_bracket(std::uint64_t m) {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_ui(x, m, MPFR_RNDN);
  mpfr_log2(x, x, MPFR_RNDN);
  mpfr_mul_ui(x, x, 2, MPFR_RNDN);
  // log2 is correctly rounded, so powers of two come out exact.
  const unsigned r = static_cast<unsigned>(mpfr_get_ui(x, MPFR_RNDD));
  mpfr_clear(x);
  return r;
}

}  // namespace

TEST_SUITE("exponent_audit") {
  TEST_CASE("gcd class examples and domain") {
    CHECK(gcd_class(17).g == 2);
    CHECK(gcd_class(17).d == 1);
    CHECK(gcd_class(19).g == 4);
    CHECK(gcd_class(19).d == 2);
    CHECK(gcd_class(9).g == 2);
    CHECK_THROWS_AS(gcd_class(16), DomainError);
    CHECK_THROWS_AS(gcd_class(7), DomainError);
    CHECK_THROWS_AS(sylvester_threshold(8), DomainError);
  }

  TEST_CASE("residue law") {
    for (std::uint64_t v = 9; v < 20001; v += 2) {
      const auto c = gcd_class(v);
      REQUIRE((c.g == 2) == (v % 4 == 1));
      REQUIRE((c.g == 4) == (v % 4 == 3));
    }
  }

  TEST_CASE("sylvester threshold examples") {
    CHECK(sylvester_threshold(17) == 48);
    CHECK(sylvester_threshold(9) == 8);
    CHECK(sylvester_threshold(19) == 12);
  }

  TEST_CASE("certificate examples") {
    // (a, b) frozen from represent_oracle on the reduced pairs:
    // 9a+7b=64 -> (4,4); 5a+3b=16 -> (2,2) is the least a; 5a+4b=16 -> (0,4).
    CHECK(represent_oracle({9, 7}, 64).front() == Representation({9, 7}, 64, 4, 4));
    CHECK(represent_oracle({5, 3}, 16).front() == Representation({5, 3}, 16, 2, 2));
    CHECK(represent_oracle({5, 4}, 16).front() == Representation({5, 4}, 16, 0, 4));

    const auto c17 = exponent_certificate(17);
    CHECK(c17.g == 2);
    CHECK(c17.threshold == 48);
    CHECK(c17.k == 6);
    CHECK(c17.t == 7);
    CHECK(c17.a == 4);
    CHECK(c17.b == 4);
    CHECK(18 * c17.a + 14 * c17.b == 128);

    const auto c9 = exponent_certificate(9);
    CHECK(c9.threshold == 8);
    CHECK(c9.k == 4);
    CHECK(c9.t == 5);
    CHECK(c9.a == 2);
    CHECK(c9.b == 2);

    const auto c19 = exponent_certificate(19);
    CHECK(c19.g == 4);
    CHECK(c19.threshold == 12);
    CHECK(c19.k == 4);
    CHECK(c19.t == 6);
    CHECK(c19.a == 0);
    CHECK(c19.b == 4);
  }

  TEST_CASE("validate rejects tampered certificates") {
    auto c = exponent_certificate(17);
    c.b += 1;
    CHECK_THROWS_AS(c.validate(), VerificationError);
    c = exponent_certificate(17);
    c.k = 7;
    c.t = 8;
    CHECK_THROWS_AS(c.validate(), VerificationError);
  }

  TEST_CASE("certificate soundness in arbitrary precision") {
    for (std::uint64_t v = 9; v < 20001; v += 2) {
      const auto c = exponent_certificate(v);
      REQUIRE(oracle::identity_holds(c.a, v + 1, c.b, v - 3, oracle::power_of_two(c.t)));
      REQUIRE(oracle::power_of_two(c.k) > c.threshold);
      REQUIRE((c.k == 0 || oracle::power_of_two(c.k - 1) <= c.threshold));
    }
  }

  TEST_CASE("large v reaches past 32-bit exponents") {
    const std::uint64_t v = (1ull << 31) + 1;
    const auto c = exponent_certificate(v);
    CHECK(c.t > 32);
    CHECK(oracle::identity_holds(c.a, v + 1, c.b, v - 3, oracle::power_of_two(c.t)));
    CHECK_THROWS_AS(exponent_certificate((1ull << 40) + 1), OverflowError);
  }

  TEST_CASE("minimal exponent examples") {
    // Frozen from the brute-force oracle.
    CHECK(oracle::min_exponent_bruteforce(17).s == 5);
    CHECK(oracle::min_exponent_bruteforce(9).s == 4);
    CHECK(oracle::min_exponent_bruteforce(19).s == 4);

    const auto w17 = minimal_exponent(17);
    CHECK(w17.t_min == 5);
    CHECK(w17.a == 1);
    CHECK(w17.b == 1);
    const auto w9 = minimal_exponent(9);
    CHECK(w9.t_min == 4);
    CHECK(w9.a == 1);
    CHECK(w9.b == 1);
    const auto w19 = minimal_exponent(19);
    CHECK(w19.t_min == 4);
    CHECK(w19.t_min <= exponent_certificate(19).t);
    CHECK(w19.a == 0);
    CHECK(w19.b == 1);
    CHECK_THROWS_AS(minimal_exponent(17, 5), ResourceError);
    CHECK_NOTHROW(minimal_exponent(17, 6));
  }

  TEST_CASE("minimal exponent matches brute force and bounds the procedure") {
    for (std::uint64_t v = 9; v < 2000; v += 2) {
      const auto w = minimal_exponent(v);
      const auto bf = oracle::min_exponent_bruteforce(v);
      REQUIRE(w.t_min == bf.s);
      REQUIRE(oracle::identity_holds(w.a, v + 1, w.b, v - 3, oracle::power_of_two(w.t_min)));
      REQUIRE(w.t_min <= exponent_certificate(v).t);
    }
  }

  TEST_CASE("bound value examples") {
    CHECK(bound_value(BoundModel::claimed, 17) == 7);
    CHECK(bound_value(BoundModel::claimed, 7) == 4);
    CHECK(bound_value(BoundModel::corrected, 17) == 8);
    CHECK(bound_value(BoundModel::claimed, 5) == 2);
    CHECK_THROWS_AS(bound_value(BoundModel::claimed, 4), DomainError);
    CHECK_THROWS_AS(bound_value(BoundModel::corrected, 0), DomainError);
  }

  TEST_CASE("bound value agrees with high-precision log2") {
    for (std::uint64_t q = 5; q <= 50'000; ++q)
      REQUIRE(bound_value(BoundModel::claimed, q) == mpfr_bracket(q - 3));
    for (unsigned e = 2; e < 32; ++e) {
      const std::uint64_t q = (1ull << e) + 3;
      CHECK(bound_value(BoundModel::claimed, q) == 2 * e);
      CHECK(bound_value(BoundModel::claimed, q + 1) == mpfr_bracket(q - 2));
      CHECK(bound_value(BoundModel::claimed, q - 1) == mpfr_bracket(q - 4));
    }
  }

  TEST_CASE("estimated k examples") {
    CHECK(estimated_k(17) == 6);
    CHECK(estimated_k(13) == 5);
    CHECK(estimated_k(9) == 4);
    CHECK_THROWS_AS(estimated_k(10), DomainError);
  }

  TEST_CASE("estimated k exceeds the threshold for v = 1 mod 4") {
    for (std::uint64_t v = 9; v <= 100'000; v += 4)
      REQUIRE(oracle::power_of_two(estimated_k(v)) > sylvester_threshold(v));
  }

  TEST_CASE("multiplicativity examples") {
    CHECK(multiplicativity_holds(5, 13, BoundModel::claimed));
    CHECK(multiplicativity_holds(5, 5, BoundModel::claimed));
    CHECK(multiplicativity_holds(5, 5, BoundModel::corrected));
    // Smallest failure of the strict inequality: 6 + 14 vs floor(2 log2 1438) = 20.
    CHECK_FALSE(multiplicativity_holds(11, 131, BoundModel::claimed));
    CHECK_THROWS_AS(multiplicativity_holds(4, 9, BoundModel::claimed), DomainError);
  }

  TEST_CASE("multiplicativity scan reports findings deterministically") {
    const auto claimed = scan_multiplicativity(BoundModel::claimed, 200);
    const auto again = scan_multiplicativity(BoundModel::claimed, 200);
    REQUIRE(claimed.size() == again.size());
    std::size_t brute = 0;
    for (std::uint64_t p = 5; p <= 200; ++p)
      for (std::uint64_t q = p; q <= 200; ++q)
        if (!multiplicativity_holds(p, q, BoundModel::claimed)) ++brute;
    CHECK(claimed.size() == brute);
    if (!claimed.empty()) {
      MESSAGE("claimed-model failures up to 200: " << claimed.size() << ", first (" << claimed[0].p
                                                  << "," << claimed[0].q << ")");
      CHECK(claimed[0].p == 11);
      CHECK(claimed[0].q == 131);
    }
    CHECK_THROWS_AS(scan_multiplicativity(BoundModel::claimed, 4), DomainError);
  }

  TEST_CASE("audit row examples") {
    const auto r17 = audit(17);
    CHECK(r17.threshold == 48);
    CHECK(r17.k == 6);
    CHECK(r17.t == 7);
    CHECK(r17.order_exponent == 8);
    CHECK(r17.bound_claimed == 7);
    CHECK(r17.bound_corrected == 8);
    CHECK(r17.t_min == 5);
    CHECK(r17.k_estimate == 6);
    CHECK(r17.t_estimate == 7);
    CHECK(r17.violates_claimed);

    const auto r9 = audit(9);
    CHECK(r9.t == 5);
    CHECK(r9.t_min == 4);

    const auto r19 = audit(19);
    CHECK(r19.g == 4);
    CHECK(r19.d == 2);
    CHECK(r19.t == 6);
    CHECK(r19.residue == 3);
  }

  TEST_CASE("audit rows are internally consistent") {
    for (const auto& r : audit_rows({9, 3001, false, std::nullopt})) {
      REQUIRE(r.bound_corrected == r.bound_claimed + 1);
      REQUIRE(r.order_exponent == r.t + 1);
      REQUIRE(r.violates_claimed == (r.order_exponent > r.bound_claimed));
      REQUIRE(r.t == r.k + r.d);
      REQUIRE(r.t_min <= r.t);
      REQUIRE(r.residue == r.v % 4);
    }
  }

  TEST_CASE("audit range selection") {
    CHECK(audit_rows({9, 30, false, std::nullopt}).size() == 11);
    CHECK(audit_candidates({10, 30, false, std::nullopt}).front() == 11);
    const auto single = audit_rows({13, 13, true, 1u});
    REQUIRE(single.size() == 1);
    CHECK(single[0].v == 13);

    const auto primes = audit_candidates({9, 100, true, std::nullopt});
    const std::vector<std::uint64_t> expected = {13, 17, 29, 37, 41, 53, 61, 73, 89, 97};
    CHECK(primes == expected);
    const auto primes3 = audit_candidates({9, 50, true, 3u});
    CHECK(primes3 == std::vector<std::uint64_t>{11, 19, 23, 31, 43, 47});
    CHECK(audit_candidates({9, 30, false, 3u}).size() == 5);

    CHECK_THROWS_AS(audit_candidates({100, 9, false, std::nullopt}), DomainError);
    CHECK_THROWS_AS(audit_candidates({7, 9, false, std::nullopt}), DomainError);
    CHECK_THROWS_AS(audit_candidates({9, 19, false, 2u}), DomainError);
    // Iteration terminates at the top of the 64-bit range.
    CHECK(audit_candidates({~0ull - 10, ~0ull, false, std::nullopt}).size() == 6);
  }

  TEST_CASE("audit summary and violations") {
    std::vector<std::uint64_t> seen;
    const auto summary = audit_range({9, 100, false, std::nullopt},
                                     [&](const AuditRow& r) { seen.push_back(r.v); });
    CHECK(summary.rows == seen.size());
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(summary.violations >= 1);
    std::size_t flagged = 0;
    unsigned gap = 0;
    for (const auto& r : audit_rows({9, 100, false, std::nullopt})) {
      flagged += r.violates_claimed;
      gap = std::max(gap, r.t - r.t_min);
    }
    CHECK(summary.violations == flagged);
    CHECK(summary.max_gap == gap);
  }

  TEST_CASE("audit output does not depend on worker count") {
    const AuditRange range{9, 20'000, false, std::nullopt};
    const auto one = audit_rows(range, 1);
    const auto four = audit_rows(range, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      REQUIRE(one[i].v == four[i].v);
      REQUIRE(one[i].t == four[i].t);
      REQUIRE(one[i].t_min == four[i].t_min);
    }
  }
}
