#include "hsum/numtheory.hpp"

#include <string>

#include "hsum/errors.hpp"

namespace hsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  std::vector<PrimeFactor> out;
  if (n <= 1) return out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& f : factorize(n)) out.push_back(f.prime);
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& f : factorize(n)) r *= f.prime;
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return false;
  }
  return n >= 1;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> odd_primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = (lo < 3 ? 3 : lo | 1); n <= hi; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace hsum

namespace hsum {

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (unsigned e = 0; e < exponent; ++e) {
    if (r > kLimit / base) {
      throw CapExceeded(std::to_string(base) + "^" + std::to_string(exponent) +
                        " exceeds the 2^62 size limit");
    }
    r *= base;
  }
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace hsum
