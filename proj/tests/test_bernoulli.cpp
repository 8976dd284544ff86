#include <vector>

#include "doctest.h"
#include "hsum/bernoulli.hpp"
#include "hsum/numtheory.hpp"

using namespace hsum;

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST_CASE("exact values") {
  CHECK(bernoulli_exact(0) == Rational(1, 1));
  CHECK(bernoulli_exact(1) == Rational(-1, 2));
  CHECK(bernoulli_exact(2) == Rational(1, 6));
  CHECK(bernoulli_exact(12) == Rational(-691, 2730));
  CHECK(bernoulli_exact(22) == Rational(854513, 138));
  CHECK(bernoulli_exact(13).is_zero());
  CHECK_THROWS_AS(bernoulli_exact(301), CapExceeded);
  CHECK(bernoulli_exact(400, 400).denominator() == von_staudt_clausen_denominator(400));
}

TEST_CASE("recurrence identity holds for every n <= 300") {
  for (unsigned long n = 1; n <= 300; ++n) {
    Rational sum;
    for (unsigned long i = 0; i <= n; ++i) {
      sum += Rational(binomial(n + 1, i), 1) * bernoulli_exact(i);
    }
    REQUIRE(sum.is_zero());
  }
}

TEST_CASE("von Staudt-Clausen denominators for even k <= 60") {
  CHECK(von_staudt_clausen_denominator(12) == 2730);
  for (unsigned long k = 2; k <= 60; k += 2) {
    REQUIRE(bernoulli_exact(k).denominator() == von_staudt_clausen_denominator(k));
  }
}

TEST_CASE("bernoulli_mod_prime examples") {
  CHECK(bernoulli_mod_prime(2, 5).residue().value() == 1);
  CHECK(bernoulli_mod_prime(0, 7).residue().value() == 1);
  const auto b22 = bernoulli_mod_prime(22, 7);
  CHECK(b22.provenance == BernoulliProvenance::kummer);
  CHECK(b22.residue().value() == 6);
  CHECK(reduce_rational(bernoulli_exact(22), 7).value() == 6);
  CHECK(bernoulli_mod_prime(1, 7).residue() == reduce_rational(Rational(-1, 2), 7));
  CHECK(bernoulli_mod_prime(9, 7).residue().value() == 0);
  CHECK_THROWS_AS(bernoulli_mod_prime(6, 7), PoleAtIndex);
  CHECK_THROWS_AS(bernoulli_mod_prime(2, 3), PoleAtIndex);
  CHECK_THROWS_AS(bernoulli_mod_prime(2, 9), InvalidArgument);
}

TEST_CASE("series route agrees with the exact route") {
  for (std::uint64_t p : odd_primes_between(3, 100)) {
    for (unsigned long k = 0; k + 3 <= p && k <= 60; k += 2) {
      const auto got = bernoulli_series_mod_prime(k, p);
      REQUIRE(got == reduce_rational(bernoulli_exact(k), big(p)));
    }
  }
}

TEST_CASE("Kummer route agrees with the exact route") {
  for (std::uint64_t p : odd_primes_between(3, 50)) {
    for (unsigned long k = (p - 3) + 2; k <= 200; k += 2) {
      if (k % (p - 1) == 0) continue;
      const auto got = bernoulli_mod_prime(k, p);
      REQUIRE(got.provenance == BernoulliProvenance::kummer);
      REQUIRE(got.residue() == reduce_rational(bernoulli_exact(k), big(p)));
    }
  }
}

TEST_CASE("B_k/k quotient matches exact values, including p | k") {
  for (std::uint64_t p : odd_primes_between(5, 31)) {
    for (unsigned long k = 2; k <= 200; k += 2) {
      if (k % (p - 1) == 0) continue;
      const Rational exact = bernoulli_exact(k) / Rational(static_cast<long>(k));
      if (mpz_divisible_ui_p(exact.denominator().get_mpz_t(), p)) {
        // Kummer says B_k/k is p-integral here; the exact route would contradict it.
        FAIL("B_" << k << "/" << k << " not p-integral at p=" << p);
      }
      REQUIRE(bernoulli_quotient_mod_prime(k, p) == reduce_rational(exact, big(p)));
    }
  }
}

TEST_CASE("composite moduli via CRT") {
  const std::vector<std::uint64_t> p35{5, 7};
  CHECK(bernoulli_mod(2, p35).residue().value() == 6);
  const std::vector<std::uint64_t> p15{3, 5};
  CHECK(bernoulli_mod(0, p15).residue().value() == 1);
  try {
    bernoulli_mod(4, p15);
    FAIL("expected PoleAtIndex");
  } catch (const PoleAtIndex& e) {
    CHECK(e.prime() == 5);
  }
  const std::vector<std::uint64_t> p143{11, 13};
  CHECK(bernoulli_mod(118, p143).residue() == reduce_rational(bernoulli_exact(118), 143));
}
