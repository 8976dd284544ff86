#include "hsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "hsum/parallel.hpp"

namespace hsum {

namespace {

using Clock = std::chrono::steady_clock;

auto sort_key(const StatementParams& s) {
  const auto v = [](const std::optional<std::uint64_t>& x) { return x.value_or(0); };
  return std::make_tuple(static_cast<int>(s.statement), v(s.n), v(s.p), v(s.q), v(s.alpha),
                         v(s.beta), v(s.r), v(s.m), s.variant);
}

bool wanted(const GridConfig& config, StatementId id) {
  if (config.statements.empty()) {
    return id != StatementId::conjecture_alt && id != StatementId::conjecture_odd;
  }
  return std::find(config.statements.begin(), config.statements.end(), id) !=
         config.statements.end();
}

StatementParams with(StatementId id) {
  StatementParams s;
  s.statement = id;
  return s;
}

// (p, q, alpha, beta) with p != q from the grid primes and p^alpha q^beta <= max_size.
std::vector<StatementParams> two_prime_points(const GridConfig& config, StatementId id) {
  std::vector<StatementParams> out;
  for (auto p : config.primes) {
    for (auto q : config.primes) {
      if (p == q) continue;
      for (unsigned a = 1; a <= config.max_exponent; ++a) {
        for (unsigned b = 1; b <= config.max_exponent; ++b) {
          const double size = std::pow(static_cast<double>(p), a) * std::pow(static_cast<double>(q), b);
          if (size > static_cast<double>(config.max_size)) continue;
          auto s = with(id);
          s.p = p;
          s.q = q;
          s.alpha = a;
          s.beta = b;
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

}  // namespace

CongruenceReport verify(const StatementParams& input, const VerifyOptions& options) {
  StatementParams params = input;
  if ((params.statement == StatementId::conjecture_alt ||
       params.statement == StatementId::conjecture_odd) &&
      params.n && *params.n % 2 == 0) {
    params.variant = std::string(kVacuous);
  }
  params.validate();
  const auto start = Clock::now();
  LhsValue lhs = statement_lhs(params, options.lhs);
  std::optional<Residue> rhs = statement_rhs(params, options.rhs);
  if (!rhs) rhs = lhs.sum_rhs;
  if (!rhs) throw InvalidArgument("statement has no right-hand side");
  const bool pass = lhs.lhs == *rhs && (!lhs.intermediate || *lhs.intermediate == lhs.lhs);
  const BigInt modulus = lhs.lhs.modulus();
  return CongruenceReport{params,    modulus,   lhs.lhs, *rhs, lhs.intermediate,
                          pass,      lhs.method, Clock::now() - start};
}

std::vector<CongruenceReport> verify_all(const std::vector<StatementParams>& params,
                                         const VerifyOptions& options, unsigned threads) {
  return parallel_map(params, threads,
                      [&](const StatementParams& s) { return verify(s, options); });
}

std::vector<StatementParams> grid_params(const GridConfig& config) {
  std::vector<StatementParams> out;
  const auto add_all = [&](const std::vector<StatementParams>& xs) {
    out.insert(out.end(), xs.begin(), xs.end());
  };

  if (wanted(config, StatementId::eq1)) {
    for (auto p : odd_primes_between(3, config.eq1_max_prime)) {
      auto s = with(StatementId::eq1);
      s.p = p;
      out.push_back(s);
    }
  }
  if (wanted(config, StatementId::eq2)) {
    for (auto p : config.primes) {
      for (std::uint64_t r = 1, pr = p; pr <= config.eq2_max_power; ++r, pr *= p) {
        auto s = with(StatementId::eq2);
        s.p = p;
        s.r = r;
        out.push_back(s);
      }
    }
  }
  if (wanted(config, StatementId::xia_cai)) {
    for (auto p : odd_primes_between(7, config.xia_cai_max_prime)) {
      for (auto v : statement_variants(StatementId::xia_cai)) {
        auto s = with(StatementId::xia_cai);
        s.p = p;
        s.variant = std::string(v);
        out.push_back(s);
      }
    }
  }
  if (wanted(config, StatementId::zhao_tuple)) {
    for (unsigned arity : {2u, 4u}) {
      const std::uint64_t limit = arity == 2 ? config.zhao2_max_power : config.zhao4_max_power;
      for (auto p : odd_primes_between(arity + 1, limit)) {
        for (std::uint64_t r = 1, pr = p; pr <= limit; ++r, pr *= p) {
          if (2 * r < arity) continue;
          auto s = with(StatementId::zhao_tuple);
          s.p = p;
          s.r = r;
          s.variant = std::string(arity == 2 ? kZhaoArity2 : kZhaoArity4);
          out.push_back(s);
        }
      }
    }
  }
  for (auto id : {StatementId::eq3, StatementId::thm1, StatementId::thm2, StatementId::thm3}) {
    if (wanted(config, id)) add_all(two_prime_points(config, id));
  }
  if (wanted(config, StatementId::lemma1)) {
    for (auto base : two_prime_points(config, StatementId::lemma1)) {
      for (auto m : config.lemma1_multipliers) {
        if (std::gcd(m, *base.p * *base.q) != 1) continue;
        for (auto v : statement_variants(StatementId::lemma1)) {
          auto s = base;
          s.m = m;
          s.variant = std::string(v);
          out.push_back(s);
        }
      }
    }
  }
  if (wanted(config, StatementId::lemma2)) {
    for (auto s : two_prime_points(config, StatementId::lemma2)) {
      if (lemma2_criterion(*s.p, *s.q)) out.push_back(s);
    }
  }
  for (auto id : {StatementId::remark1_pq_alt, StatementId::remark1_pq_odd}) {
    if (!wanted(config, id)) continue;
    for (auto p : config.primes) {
      for (auto q : config.primes) {
        // p = 3 puts B_{phi-2} at a pole.
        if (p < 5 || q <= p) continue;
        for (auto v : statement_variants(id)) {
          auto s = with(id);
          s.p = p;
          s.q = q;
          s.variant = std::string(v);
          out.push_back(s);
        }
      }
    }
  }
  for (auto id : {StatementId::remark1_pr_alt, StatementId::remark1_pr_odd}) {
    if (!wanted(config, id)) continue;
    for (auto p : config.primes) {
      if (p < 5) continue;
      for (unsigned r = 1; r <= config.max_exponent; ++r) {
        auto s = with(id);
        s.p = p;
        s.r = r;
        out.push_back(s);
      }
    }
  }
  if (wanted(config, StatementId::conjecture_alt) || wanted(config, StatementId::conjecture_odd)) {
    throw InvalidArgument("conjecture statements are scanned with conjecture_params");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  return out;
}

std::vector<StatementParams> conjecture_params(std::uint64_t n_max, const ConjectureFilters& filters) {
  std::vector<StatementParams> out;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const bool even = n % 2 == 0;
    if (filters.parity == ConjectureFilters::Parity::odd && even) continue;
    if (filters.parity == ConjectureFilters::Parity::even && !even) continue;
    const auto primes = distinct_primes(n);
    if (primes.size() < filters.min_distinct_primes) continue;
    for (auto p : primes) {
      if (p == 2) continue;
      for (auto id : {StatementId::conjecture_alt, StatementId::conjecture_odd}) {
        auto s = with(id);
        s.n = n;
        s.p = p;
        if (even) s.variant = std::string(kVacuous);
        out.push_back(s);
      }
    }
  }
  return out;
}

std::vector<CongruenceReport> conjecture_scan(std::uint64_t n_max, const ConjectureFilters& filters,
                                              const VerifyOptions& options, unsigned threads) {
  return verify_all(conjecture_params(n_max, filters), options, threads);
}

}  // namespace hsum
