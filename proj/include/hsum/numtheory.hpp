#pragma once

#include <cstdint>
#include <vector>

namespace hsum {

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Ascending prime factorization by trial division; empty for n <= 1.
std::vector<PrimeFactor> factorize(std::uint64_t n);

std::vector<std::uint64_t> distinct_primes(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// Odd primes in [lo, hi].
std::vector<std::uint64_t> odd_primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace hsum

namespace hsum {

/// base^exponent, throwing CapExceeded when the result would exceed 2^62.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// Exponent of p in n (p^alpha || n).
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace hsum
