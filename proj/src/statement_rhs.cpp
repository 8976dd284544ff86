#include "hsum/statement_rhs.hpp"

#include "hsum/numtheory.hpp"

namespace hsum {

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

Rational frac(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

Rational pow_rational(std::uint64_t base, unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return Rational(r, 1);
}

long signed_valuation(const BigInt& x, std::uint64_t p) {
  BigInt t = abs(x);
  long v = 0;
  while (sgn(t) != 0 && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

// (1 - 1/q^3)
Rational cube_factor(std::uint64_t q) {
  const long c = static_cast<long>(q * q * q);
  return frac(c - 1, c);
}

// The factor shared by eq3 and thm1-3: (1 - 1/q^3) p^(alpha-1) q^(beta-1).
Rational two_prime_factor(const StatementParams& s) {
  return cube_factor(*s.q) * pow_rational(*s.p, static_cast<unsigned>(*s.alpha - 1)) *
         pow_rational(*s.q, static_cast<unsigned>(*s.beta - 1));
}

Residue remark1_composite(const StatementParams& s, const RhsOptions& options) {
  const std::uint64_t p = *s.p, q = *s.q;
  const BigInt n = big(p * q);
  const std::uint64_t phi = (p - 1) * (q - 1);
  const unsigned long k = phi - 2;
  Rational scale = s.statement == StatementId::remark1_pq_alt ? frac(-3, 2) : frac(21, 8);
  if (s.variant == kRemarkNegated) scale = -scale;
  const long phi1 = static_cast<long>(phi - 1);
  const Rational cube = frac(1) + frac(1, phi1 * phi1 * phi1);

  // (1 + 3/k) B_k = (k + 3) * (B_k / k); the quotient stays defined when a prime divides k.
  const Rational outer = scale * cube * frac(static_cast<long>(k + 3));
  std::vector<Residue> parts;
  for (std::uint64_t r : {p, q}) {
    parts.push_back(reduce_rational(outer, big(r)) * bernoulli_quotient_mod_prime(k, r));
  }
  const Residue rhs = crt_combine(parts);

  // Second route for B_k itself and for the whole right side, from the exact recurrence.
  if (k <= options.bernoulli_cap) {
    const std::vector<std::uint64_t> primes{p, q};
    const Rational exact = bernoulli_exact(k, options.bernoulli_cap);
    const Residue modular = bernoulli_mod(k, primes).residue();
    if (!(modular == reduce_rational(exact, n))) {
      throw RouteMismatch("B_" + std::to_string(k) + " mod " + n.get_str() +
                          ": Kummer/CRT and exact routes disagree");
    }
    const Residue exact_rhs =
        reduce_rational(scale * cube * (frac(1) + frac(3, static_cast<long>(k))) * exact, n);
    if (!(exact_rhs == rhs)) {
      throw RouteMismatch("remark1 right side mod " + n.get_str() +
                          ": quotient and exact routes disagree");
    }
  }
  return rhs;
}

Rational conjecture_coefficient(const StatementParams& s) {
  const std::uint64_t n = *s.n, p = *s.p;
  Rational c = s.statement == StatementId::conjecture_alt
                   ? frac(static_cast<long>(n), static_cast<long>(2 * p))
                   : frac(-7 * static_cast<long>(n), static_cast<long>(8 * p));
  for (std::uint64_t q : distinct_primes(n)) {
    if (q == p) continue;
    c *= frac(static_cast<long>(q) - 2, static_cast<long>(q));
    c *= cube_factor(q);
  }
  return c;
}

}  // namespace

Residue scaled_bernoulli(const Rational& coefficient, unsigned long k, std::uint64_t p,
                         unsigned alpha, const RhsOptions& options) {
  const BigInt modulus = big(checked_pow(p, alpha));
  if (coefficient.is_zero()) return Residue(0, modulus);
  const long v = signed_valuation(coefficient.numerator(), p) -
                 signed_valuation(coefficient.denominator(), p);
  if (v < 0) {
    throw InvalidArgument("coefficient " + coefficient.to_string() + " is not " +
                          std::to_string(p) + "-integral");
  }
  if (v >= static_cast<long>(alpha)) return Residue(0, modulus);
  const Rational pv = pow_rational(p, static_cast<unsigned>(v));
  const Rational unit = coefficient / pv;
  const unsigned precision = alpha - static_cast<unsigned>(v);
  BigInt tail;
  if (precision == 1) {
    const Residue b = bernoulli_mod_prime(k, p).residue();
    tail = (reduce_rational(unit, big(p)) * b).value();
  } else {
    tail = reduce_rational(unit * bernoulli_exact(k, options.bernoulli_cap),
                           big(checked_pow(p, precision)))
               .value();
  }
  return Residue(pv.numerator() * tail, modulus);
}

std::optional<Residue> statement_rhs(const StatementParams& s, const RhsOptions& options) {
  s.validate();
  const auto alpha = [&] { return static_cast<unsigned>(*s.alpha); };
  const auto r = [&] { return static_cast<unsigned>(*s.r); };
  switch (s.statement) {
    case StatementId::eq1:
      return scaled_bernoulli(frac(-2), *s.p - 3, *s.p, 1, options);
    case StatementId::eq2:
      return scaled_bernoulli(frac(-2) * pow_rational(*s.p, r() - 1), *s.p - 3, *s.p, r(), options);
    case StatementId::xia_cai: {
      const long p = static_cast<long>(*s.p);
      const bool corrected = s.variant == kXiaCaiCorrected;
      const long denom = s.variant == kXiaCaiPrinted ? p - 4 : corrected ? p - 2 : 2 * p - 4;
      const Rational value =
          frac(corrected ? 12 : -12, p - 3) * bernoulli_exact(*s.p - 3, options.bernoulli_cap) -
          frac(3, denom) * bernoulli_exact(2 * *s.p - 4, options.bernoulli_cap);
      return reduce_rational(value, big(*s.p * *s.p));
    }
    case StatementId::zhao_tuple: {
      const unsigned arity = s.variant == kZhaoArity2 ? 2 : 4;
      const long factorial = arity == 2 ? 2 : 24;
      const Rational c = frac(-factorial, arity + 1) * pow_rational(*s.p, r());
      return scaled_bernoulli(c, *s.p - arity - 1, *s.p, r() + 1, options);
    }
    case StatementId::eq3: {
      const Rational c = frac(2) * frac(2 - static_cast<long>(*s.q)) * two_prime_factor(s);
      return scaled_bernoulli(c, *s.p - 3, *s.p, alpha(), options);
    }
    case StatementId::thm1: {
      const Rational c = frac(static_cast<long>(*s.q) - 2) * two_prime_factor(s);
      return scaled_bernoulli(c, *s.p - 3, *s.p, alpha(), options);
    }
    case StatementId::thm2: {
      const Rational c = frac(1, 2) * frac(static_cast<long>(*s.q) - 2) * two_prime_factor(s);
      return scaled_bernoulli(c, *s.p - 3, *s.p, alpha(), options);
    }
    case StatementId::thm3: {
      const Rational c = frac(7, 8) * frac(2 - static_cast<long>(*s.q)) * two_prime_factor(s);
      return scaled_bernoulli(c, *s.p - 3, *s.p, alpha(), options);
    }
    case StatementId::lemma1:
      return std::nullopt;
    case StatementId::lemma2:
      return Residue(0, big(s.two_prime_target()));
    case StatementId::remark1_pq_alt:
    case StatementId::remark1_pq_odd:
      return remark1_composite(s, options);
    case StatementId::remark1_pr_alt:
      return scaled_bernoulli(frac(1, 2) * pow_rational(*s.p, r() - 1), *s.p - 3, *s.p, r(), options);
    case StatementId::remark1_pr_odd:
      return scaled_bernoulli(frac(-7, 8) * pow_rational(*s.p, r() - 1), *s.p - 3, *s.p, r(), options);
    case StatementId::conjecture_alt:
    case StatementId::conjecture_odd:
      return scaled_bernoulli(conjecture_coefficient(s), *s.p - 3, *s.p, valuation(*s.n, *s.p),
                              options);
  }
  throw InvalidArgument("unknown statement");
}

}  // namespace hsum
