#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hsum {

using BigInt = mpz_class;

/// Bad user-supplied parameters (not a prime, mismatched signature, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size limit was hit before any work was attempted.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between residues of different moduli. Always a programming error.
class ModulusMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(BigInt value, BigInt modulus, BigInt gcd);

  const BigInt& value() const noexcept { return value_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  const BigInt& gcd() const noexcept { return gcd_; }

 private:
  BigInt value_;
  BigInt modulus_;
  BigInt gcd_;
};

class NonCoprimeModuli : public std::domain_error {
 public:
  NonCoprimeModuli(BigInt first, BigInt second);

  const BigInt& first() const noexcept { return first_; }
  const BigInt& second() const noexcept { return second_; }

 private:
  BigInt first_;
  BigInt second_;
};

/// B_k mod p is undefined when (p - 1) | k, k > 0.
class PoleAtIndex : public std::domain_error {
 public:
  PoleAtIndex(unsigned long k, BigInt prime);

  unsigned long index() const noexcept { return index_; }
  const BigInt& prime() const noexcept { return prime_; }

 private:
  unsigned long index_;
  BigInt prime_;
};

/// The fast evaluator does not handle EXACTLY_ONE_* parity filters.
class UnsupportedFilter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not (oracle vs fast path, two Bernoulli routes).
class RouteMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsum
