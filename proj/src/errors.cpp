#include "hsum/errors.hpp"

#include <utility>

namespace hsum {

NotInvertible::NotInvertible(BigInt value, BigInt modulus, BigInt gcd)
    : std::domain_error(value.get_str() + " is not invertible mod " + modulus.get_str() +
                        " (gcd " + gcd.get_str() + ")"),
      value_(std::move(value)),
      modulus_(std::move(modulus)),
      gcd_(std::move(gcd)) {}

NonCoprimeModuli::NonCoprimeModuli(BigInt first, BigInt second)
    : std::domain_error("moduli " + first.get_str() + " and " + second.get_str() +
                        " are not coprime"),
      first_(std::move(first)),
      second_(std::move(second)) {}

PoleAtIndex::PoleAtIndex(unsigned long k, BigInt prime)
    : std::domain_error("B_" + std::to_string(k) + " has a pole mod " + prime.get_str() +
                        " since (p - 1) | k"),
      index_(k),
      prime_(std::move(prime)) {}

}  // namespace hsum
