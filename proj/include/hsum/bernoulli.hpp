#pragma once

// Bernoulli numbers, B_1 = -1/2 convention.
//
//   recurrence  exact rationals from sum_{i=0}^{n} C(n+1, i) B_i = 0 (the oracle)
//   series      B_k mod p for k <= p - 3, from the inverse of (e^x - 1)/x over F_p
//   kummer      B_k mod p for larger k via B_k/k == B_k0/k0, k0 = k mod (p - 1)
//   crt         squarefree composite moduli, one prime at a time

#include <cstdint>
#include <span>
#include <variant>

#include "hsum/modarith.hpp"

namespace hsum {

inline constexpr unsigned long kDefaultBernoulliCap = 300;

enum class BernoulliProvenance { recurrence, series, kummer, crt };

const char* to_string(BernoulliProvenance provenance);

struct BernoulliValue {
  unsigned long index;
  std::variant<Rational, Residue> payload;
  BernoulliProvenance provenance;

  bool is_exact() const { return std::holds_alternative<Rational>(payload); }
  const Rational& exact() const { return std::get<Rational>(payload); }
  const Residue& residue() const { return std::get<Residue>(payload); }
};

/// Exact B_k from a memoized prefix shared by all callers. Throws CapExceeded for k > cap.
Rational bernoulli_exact(unsigned long k, unsigned long cap = kDefaultBernoulliCap);

/// B_k mod an odd prime p. Odd k >= 3 yields 0; throws PoleAtIndex when k > 0 and (p - 1) | k.
BernoulliValue bernoulli_mod_prime(unsigned long k, std::uint64_t p);

/// Series route only; requires k <= p - 3 (or k <= 1).
Residue bernoulli_series_mod_prime(unsigned long k, std::uint64_t p);

/// Kummer route only; requires even k > 0 with (p - 1) not dividing k.
Residue bernoulli_kummer_mod_prime(unsigned long k, std::uint64_t p);

/// B_k / k mod p for even k > 0, (p - 1) not dividing k. Defined even when p | k.
Residue bernoulli_quotient_mod_prime(unsigned long k, std::uint64_t p);

/// B_k mod the product of distinct odd primes, combined by CRT.
BernoulliValue bernoulli_mod(unsigned long k, std::span<const std::uint64_t> primes);

/// Product of the primes r with (r - 1) | k, for even k >= 2 (von Staudt-Clausen).
BigInt von_staudt_clausen_denominator(unsigned long k);

}  // namespace hsum
