#include "hsum/modarith.hpp"

#include <utility>

#include "hsum/numtheory.hpp"

namespace hsum {

namespace {

BigInt normalize(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("residue arithmetic mixes moduli " + a.modulus().get_str() + " and " +
                          b.modulus().get_str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (sgn(denominator) == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidArgument("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(const BigInt& value, BigInt modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw InvalidArgument("modulus must be >= 2, got " + modulus_.get_str());
  value_ = normalize(value, modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

std::string Residue::to_string() const { return value_.get_str() + " mod " + modulus_.get_str(); }

// ---------------------------------------------------------------------------
// PrimePower

PrimePower::PrimePower(BigInt p, unsigned alpha) : p_(std::move(p)), alpha_(alpha) {
  if (alpha_ < 1) throw InvalidArgument("prime power exponent must be >= 1");
  if (p_ < 3 || !mpz_fits_ulong_p(p_.get_mpz_t()) || !is_prime(mpz_get_ui(p_.get_mpz_t()))) {
    throw InvalidArgument(p_.get_str() + " is not an odd prime");
  }
  mpz_pow_ui(value_.get_mpz_t(), p_.get_mpz_t(), alpha_);
}

// ---------------------------------------------------------------------------
// Operations

Residue mod_pow(const Residue& base, const BigInt& exponent) {
  if (sgn(exponent) < 0) throw InvalidArgument("mod_pow with negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.value().get_mpz_t(), exponent.get_mpz_t(),
           base.modulus().get_mpz_t());
  return Residue(r, base.modulus());
}

Residue mod_inverse(const Residue& a) {
  BigInt g, s;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.value().get_mpz_t(),
             a.modulus().get_mpz_t());
  if (g != 1) throw NotInvertible(a.value(), a.modulus(), g);
  return Residue(s, a.modulus());
}

Residue reduce_rational(const Rational& r, const BigInt& modulus) {
  Residue den(r.denominator(), modulus);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), den.value().get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw NotInvertible(r.denominator(), modulus, g);
  return Residue(r.numerator(), modulus) * mod_inverse(den);
}

Residue crt_combine(std::span<const Residue> parts) {
  if (parts.empty()) throw InvalidArgument("crt_combine needs at least one residue");
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), parts[a].modulus().get_mpz_t(), parts[b].modulus().get_mpz_t());
      if (g != 1) throw NonCoprimeModuli(parts[a].modulus(), parts[b].modulus());
    }
  }
  // Garner-style incremental lift: x = x + M * ((r - x) / M mod m).
  BigInt x = parts[0].value();
  BigInt M = parts[0].modulus();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const BigInt& m = parts[i].modulus();
    Residue diff(parts[i].value() - x, m);
    Residue t = diff * mod_inverse(Residue(M, m));
    x += M * t.value();
    M *= m;
  }
  return Residue(x, M);
}

// ---------------------------------------------------------------------------
// FixedRing

FixedRing::FixedRing(std::uint64_t modulus) : m_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw InvalidArgument("FixedRing modulus out of range: " + std::to_string(modulus));
  }
}

BigInt FixedRing::modulus_big() const { return BigInt(static_cast<unsigned long>(m_)); }

FixedRing::Elem FixedRing::from_int(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(m_);
  return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
}

FixedRing::Elem FixedRing::from_big(const BigInt& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), m_);
}

FixedRing::Elem FixedRing::pow(Elem base, std::uint64_t exponent) const noexcept {
  Elem result = one();
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

FixedRing::Elem FixedRing::inverse(Elem a) const {
  __int128 old_r = a, r = m_;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw NotInvertible(BigInt(static_cast<unsigned long>(a)), modulus_big(),
                        BigInt(static_cast<unsigned long>(old_r)));
  }
  __int128 mm = m_;
  old_s %= mm;
  if (old_s < 0) old_s += mm;
  return static_cast<Elem>(old_s);
}

void FixedRing::batch_inverse(std::span<Elem> xs) const {
  if (xs.empty()) return;
  std::vector<Elem> prefix(xs.size());
  Elem acc = one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc = mul(acc, xs[i]);
  }
  Elem inv;
  try {
    inv = inverse(acc);
  } catch (const NotInvertible&) {
    for (Elem x : xs) inverse(x);  // throws for the first offender
    throw;
  }
  for (std::size_t i = xs.size(); i-- > 0;) {
    Elem x = xs[i];
    xs[i] = mul(inv, prefix[i]);
    inv = mul(inv, x);
  }
}

Residue FixedRing::to_residue(Elem a) const {
  return Residue(BigInt(static_cast<unsigned long>(a)), modulus_big());
}

// ---------------------------------------------------------------------------
// BigRing

BigRing::BigRing(BigInt modulus) : m_(std::move(modulus)) {
  if (m_ < 2) throw InvalidArgument("BigRing modulus must be >= 2");
}

BigRing::Elem BigRing::from_uint(std::uint64_t x) const {
  return normalize(BigInt(static_cast<unsigned long>(x)), m_);
}

BigRing::Elem BigRing::from_int(std::int64_t x) const {
  return normalize(BigInt(static_cast<long>(x)), m_);
}

BigRing::Elem BigRing::from_big(const BigInt& x) const { return normalize(x, m_); }

BigRing::Elem BigRing::add(const Elem& a, const Elem& b) const {
  BigInt s = a + b;
  if (s >= m_) s -= m_;
  return s;
}

BigRing::Elem BigRing::sub(const Elem& a, const Elem& b) const {
  BigInt s = a - b;
  if (sgn(s) < 0) s += m_;
  return s;
}

BigRing::Elem BigRing::neg(const Elem& a) const { return sgn(a) == 0 ? BigInt(0) : BigInt(m_ - a); }

BigRing::Elem BigRing::mul(const Elem& a, const Elem& b) const {
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
  return r;
}

BigRing::Elem BigRing::pow(const Elem& base, std::uint64_t exponent) const {
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), exponent, m_.get_mpz_t());
  return r;
}

BigRing::Elem BigRing::inverse(const Elem& a) const { return mod_inverse(Residue(a, m_)).value(); }

void BigRing::batch_inverse(std::span<Elem> xs) const {
  if (xs.empty()) return;
  std::vector<Elem> prefix(xs.size());
  Elem acc = one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc = mul(acc, xs[i]);
  }
  Elem inv;
  try {
    inv = inverse(acc);
  } catch (const NotInvertible&) {
    for (const Elem& x : xs) inverse(x);
    throw;
  }
  for (std::size_t i = xs.size(); i-- > 0;) {
    Elem x = xs[i];
    xs[i] = mul(inv, prefix[i]);
    inv = mul(inv, x);
  }
}

Residue BigRing::to_residue(const Elem& a) const { return Residue(a, m_); }

}  // namespace hsum
