#pragma once

// Exact modular arithmetic over odd prime powers and their products.
//
// Residue and Rational are immutable value types backed by GMP. A fixed-width
// ring (FixedRing, moduli < 2^63) and an arbitrary-precision ring (BigRing)
// expose the same element interface so that hot loops can be written once and
// instantiated for either; the two must agree bit-for-bit.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hsum/errors.hpp"

namespace hsum {

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);
  explicit Rational(mpq_class q);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& get() const noexcept { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

/// An integer class modulo m >= 2, stored as its least nonnegative representative.
class Residue {
 public:
  /// Negative values are normalized into [0, m).
  Residue(const BigInt& value, BigInt modulus);

  const BigInt& value() const noexcept { return value_; }
  const BigInt& modulus() const noexcept { return modulus_; }

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  BigInt value_;
  BigInt modulus_;
};

/// p^alpha for an odd prime p, with the power materialized once.
class PrimePower {
 public:
  PrimePower(BigInt p, unsigned alpha);

  const BigInt& prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return alpha_; }
  const BigInt& value() const noexcept { return value_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  BigInt p_;
  unsigned alpha_;
  BigInt value_;
};

Residue mod_pow(const Residue& base, const BigInt& exponent);
Residue mod_inverse(const Residue& a);
Residue reduce_rational(const Rational& r, const BigInt& modulus);
Residue crt_combine(std::span<const Residue> parts);

/// Arithmetic modulo m < 2^63 with 128-bit intermediate products.
class FixedRing {
 public:
  using Elem = std::uint64_t;
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

  explicit FixedRing(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return m_; }
  BigInt modulus_big() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return m_ == 1 ? 0 : 1; }
  Elem from_uint(std::uint64_t x) const noexcept { return x % m_; }
  Elem from_int(std::int64_t x) const noexcept;
  Elem from_big(const BigInt& x) const;

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (m_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : m_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % m_);
  }
  Elem pow(Elem base, std::uint64_t exponent) const noexcept;
  Elem inverse(Elem a) const;

  /// Inverts every element in place with a single extended gcd.
  void batch_inverse(std::span<Elem> xs) const;

  Residue to_residue(Elem a) const;

 private:
  std::uint64_t m_;
};

/// Arithmetic modulo an arbitrary-precision m.
class BigRing {
 public:
  using Elem = BigInt;

  explicit BigRing(BigInt modulus);

  const BigInt& modulus_big() const noexcept { return m_; }

  Elem zero() const { return 0; }
  Elem one() const { return m_ == 1 ? BigInt(0) : BigInt(1); }
  Elem from_uint(std::uint64_t x) const;
  Elem from_int(std::int64_t x) const;
  Elem from_big(const BigInt& x) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& base, std::uint64_t exponent) const;
  Elem inverse(const Elem& a) const;
  void batch_inverse(std::span<Elem> xs) const;

  Residue to_residue(const Elem& a) const;

 private:
  BigInt m_;
};

/// Calls fn(ring) with a FixedRing when the modulus fits, otherwise a BigRing.
template <typename Fn>
decltype(auto) with_ring(const BigInt& modulus, Fn&& fn) {
  if (sgn(modulus) > 0 && mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 63) {
    return fn(FixedRing(mpz_get_ui(modulus.get_mpz_t())));
  }
  return fn(BigRing(modulus));
}

}  // namespace hsum
