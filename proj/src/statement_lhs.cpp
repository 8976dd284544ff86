#include "hsum/statement_lhs.hpp"

#include <algorithm>

namespace hsum {

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

BigInt modulus_value(std::span<const PrimeFactor> factors) {
  BigInt m = 1;
  for (const auto& f : factors) m *= big(checked_pow(f.prime, f.exponent));
  return m;
}

Residue evaluate_prime_power(const TripleSumSpec& spec, const PrimeFactor& pf,
                             const LhsOptions& options, bool& used_fast) {
  const PrimePower pp(big(pf.prime), pf.exponent);
  const bool fast_ok = options.use_fast && fast_path_supports(spec.parity) &&
                       spec.radical % pf.prime == 0 && spec.n % pf.prime == 0;
  if (!fast_ok) {
    used_fast = false;
    return triple_sum_bruteforce(spec, pp.value(), options.eval).residue;
  }
  std::vector<std::uint64_t> cofactors;
  for (auto r : distinct_primes(spec.radical)) {
    if (r != pf.prime) cofactors.push_back(r);
  }
  Residue fast = triple_sum_fast(spec, pp, cofactors, options.eval).residue;
  if (options.oracle_check && spec.n <= options.oracle_max_n) {
    const Residue oracle = triple_sum_bruteforce(spec, pp.value(), options.eval).residue;
    if (!(oracle == fast)) {
      throw RouteMismatch("fast path " + fast.to_string() + " != oracle " + oracle.to_string() +
                          " for n=" + std::to_string(spec.n) + " radical=" +
                          std::to_string(spec.radical) + " " + to_string(spec.sign) + "/" +
                          to_string(spec.parity));
    }
  }
  return fast;
}

TripleSumSpec make_spec(std::uint64_t n, std::uint64_t radical, SignVariant sign,
                        ParityFilter parity = ParityFilter::all) {
  return TripleSumSpec{n, radical, sign, parity};
}

}  // namespace

SumEvaluation evaluate_sum(const TripleSumSpec& spec, std::span<const PrimeFactor> modulus_factors,
                           const LhsOptions& options) {
  if (modulus_factors.empty()) throw InvalidArgument("evaluate_sum needs a modulus");
  bool all_fast = true;
  std::vector<Residue> parts;
  for (const auto& pf : modulus_factors) {
    bool used_fast = true;
    parts.push_back(evaluate_prime_power(spec, pf, options, used_fast));
    all_fast = all_fast && used_fast;
  }
  return {crt_combine(parts), all_fast ? SumMethod::fast : SumMethod::bruteforce};
}

std::vector<PrimeFactor> statement_modulus(const StatementParams& s) {
  const auto e = [](std::optional<std::uint64_t> v) { return static_cast<unsigned>(*v); };
  switch (s.statement) {
    case StatementId::eq1: return {{*s.p, 1}};
    case StatementId::xia_cai: return {{*s.p, 2}};
    case StatementId::eq2:
    case StatementId::remark1_pr_alt:
    case StatementId::remark1_pr_odd: return {{*s.p, e(s.r)}};
    case StatementId::zhao_tuple: return {{*s.p, e(s.r) + 1}};
    case StatementId::eq3:
    case StatementId::thm1:
    case StatementId::thm2:
    case StatementId::thm3: return {{*s.p, e(s.alpha)}};
    case StatementId::lemma1:
      if (s.variant == kLemma1ModPQ) return {{*s.p, e(s.alpha)}, {*s.q, e(s.beta)}};
      return {{*s.p, e(s.alpha)}};
    case StatementId::lemma2: return {{*s.p, e(s.alpha)}, {*s.q, e(s.beta)}};
    case StatementId::remark1_pq_alt:
    case StatementId::remark1_pq_odd: return {{*s.p, 1}, {*s.q, 1}};
    case StatementId::conjecture_alt:
    case StatementId::conjecture_odd: return {{*s.p, valuation(*s.n, *s.p)}};
  }
  return {};
}

LhsValue statement_lhs(const StatementParams& s, const LhsOptions& options) {
  s.validate();
  const auto factors = statement_modulus(s);
  const BigInt modulus = modulus_value(factors);
  const auto sum = [&](const TripleSumSpec& spec) { return evaluate_sum(spec, factors, options); };

  switch (s.statement) {
    case StatementId::eq1:
    case StatementId::xia_cai: {
      const auto z = sum(make_spec(*s.p, *s.p, SignVariant::plain));
      return {z.value, std::nullopt, std::nullopt, z.method};
    }
    case StatementId::eq2: {
      const auto z = sum(make_spec(checked_pow(*s.p, static_cast<unsigned>(*s.r)), *s.p,
                                   SignVariant::plain));
      return {z.value, std::nullopt, std::nullopt, z.method};
    }
    case StatementId::zhao_tuple: {
      const unsigned arity = s.variant == kZhaoArity2 ? 2 : 4;
      const auto t = tuple_sum_bruteforce(checked_pow(*s.p, static_cast<unsigned>(*s.r)), arity,
                                          *s.p, modulus, options.eval);
      return {t.residue, std::nullopt, std::nullopt, SumMethod::bruteforce};
    }
    case StatementId::eq3: {
      const auto z = sum(make_spec(s.two_prime_target(), *s.p * *s.q, SignVariant::plain));
      return {z.value, std::nullopt, std::nullopt, z.method};
    }
    case StatementId::thm1:
    case StatementId::thm2:
    case StatementId::thm3: {
      const std::uint64_t target = s.two_prime_target(), rad = *s.p * *s.q;
      const auto z = sum(make_spec(target, rad, SignVariant::plain));
      TripleSumSpec spec;
      Rational ratio;
      if (s.statement == StatementId::thm1) {
        spec = make_spec(2 * target, rad, SignVariant::alt_first);
        ratio = Rational(-1, 2);
      } else if (s.statement == StatementId::thm2) {
        spec = make_spec(target, rad, SignVariant::alt_first);
        ratio = Rational(-1, 4);
      } else {
        spec = make_spec(target, rad, SignVariant::plain, ParityFilter::all_odd);
        ratio = Rational(7, 16);
      }
      const auto lhs = sum(spec);
      const Residue link = reduce_rational(ratio, modulus) * z.value;
      const SumMethod method =
          (lhs.method == SumMethod::fast && z.method == SumMethod::fast) ? SumMethod::fast
                                                                          : SumMethod::bruteforce;
      return {lhs.value, link, std::nullopt, method};
    }
    case StatementId::lemma1: {
      const std::uint64_t target = s.two_prime_target(), rad = *s.p * *s.q;
      const auto big_sum = sum(make_spec(*s.m * target, rad, SignVariant::plain));
      const auto z = sum(make_spec(target, rad, SignVariant::plain));
      const Residue scaled = Residue(big(*s.m), modulus) * z.value;
      const SumMethod method =
          (big_sum.method == SumMethod::fast && z.method == SumMethod::fast) ? SumMethod::fast
                                                                              : SumMethod::bruteforce;
      return {big_sum.value, std::nullopt, scaled, method};
    }
    case StatementId::lemma2: {
      const auto z = sum(make_spec(s.two_prime_target(), *s.p * *s.q, SignVariant::plain));
      return {z.value, std::nullopt, std::nullopt, z.method};
    }
    case StatementId::remark1_pq_alt:
    case StatementId::remark1_pq_odd: {
      const bool alt = s.statement == StatementId::remark1_pq_alt;
      const std::uint64_t n = *s.p * *s.q;
      const auto v = sum(make_spec(n, n, alt ? SignVariant::alt_first : SignVariant::plain,
                                   alt ? ParityFilter::all : ParityFilter::all_odd));
      return {v.value, std::nullopt, std::nullopt, v.method};
    }
    case StatementId::remark1_pr_alt:
    case StatementId::remark1_pr_odd: {
      const bool alt = s.statement == StatementId::remark1_pr_alt;
      const std::uint64_t n = checked_pow(*s.p, static_cast<unsigned>(*s.r));
      const auto v = sum(make_spec(n, *s.p, alt ? SignVariant::alt_first : SignVariant::plain,
                                   alt ? ParityFilter::all : ParityFilter::all_odd));
      return {v.value, std::nullopt, std::nullopt, v.method};
    }
    case StatementId::conjecture_alt:
    case StatementId::conjecture_odd: {
      const bool alt = s.statement == StatementId::conjecture_alt;
      const auto v = sum(make_spec(*s.n, radical(*s.n),
                                   alt ? SignVariant::alt_first : SignVariant::plain,
                                   alt ? ParityFilter::all : ParityFilter::all_odd));
      return {v.value, std::nullopt, std::nullopt, v.method};
    }
  }
  throw InvalidArgument("unknown statement");
}

}  // namespace hsum
