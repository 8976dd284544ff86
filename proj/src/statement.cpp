#include "hsum/statement.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hsum/errors.hpp"
#include "hsum/numtheory.hpp"

namespace hsum {

namespace {

constexpr std::array<std::pair<StatementId, std::string_view>, 16> kNames{{
    {StatementId::eq1, "eq1"},
    {StatementId::eq2, "eq2"},
    {StatementId::xia_cai, "xia_cai"},
    {StatementId::zhao_tuple, "zhao_tuple"},
    {StatementId::eq3, "eq3"},
    {StatementId::lemma1, "lemma1"},
    {StatementId::lemma2, "lemma2"},
    {StatementId::thm1, "thm1"},
    {StatementId::thm2, "thm2"},
    {StatementId::thm3, "thm3"},
    {StatementId::remark1_pq_alt, "remark1_pq_alt"},
    {StatementId::remark1_pq_odd, "remark1_pq_odd"},
    {StatementId::remark1_pr_alt, "remark1_pr_alt"},
    {StatementId::remark1_pr_odd, "remark1_pr_odd"},
    {StatementId::conjecture_alt, "conjecture_alt"},
    {StatementId::conjecture_odd, "conjecture_odd"},
}};

enum Field : unsigned { P = 1, Q = 2, ALPHA = 4, BETA = 8, R = 16, M = 32, N = 64 };

unsigned signature(StatementId id) {
  switch (id) {
    case StatementId::eq1:
    case StatementId::xia_cai: return P;
    case StatementId::eq2:
    case StatementId::zhao_tuple:
    case StatementId::remark1_pr_alt:
    case StatementId::remark1_pr_odd: return P | R;
    case StatementId::eq3:
    case StatementId::lemma2:
    case StatementId::thm1:
    case StatementId::thm2:
    case StatementId::thm3: return P | Q | ALPHA | BETA;
    case StatementId::lemma1: return P | Q | ALPHA | BETA | M;
    case StatementId::remark1_pq_alt:
    case StatementId::remark1_pq_odd: return P | Q;
    case StatementId::conjecture_alt:
    case StatementId::conjecture_odd: return P | N;
  }
  return 0;
}

void require_odd_prime(const char* name, std::uint64_t v) {
  if (v < 3 || !is_prime(v)) {
    throw InvalidArgument(std::string(name) + "=" + std::to_string(v) + " is not an odd prime");
  }
}

}  // namespace

std::string_view to_string(StatementId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<StatementId> parse_statement(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<StatementId>& all_statements() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> out;
    for (const auto& [k, name] : kNames) out.push_back(k);
    return out;
  }();
  return ids;
}

std::vector<std::string_view> statement_variants(StatementId id) {
  switch (id) {
    case StatementId::xia_cai: return {kXiaCaiPrinted, kXiaCaiDoubled, kXiaCaiCorrected};
    case StatementId::remark1_pq_alt:
    case StatementId::remark1_pq_odd: return {kRemarkPrinted, kRemarkNegated};
    case StatementId::zhao_tuple: return {kZhaoArity2, kZhaoArity4};
    case StatementId::lemma1: return {kLemma1ModP, kLemma1ModPQ};
    default: return {};
  }
}

bool lemma2_criterion(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t qq = q * q + q + 1, pp = p * p + p + 1;
  return p == qq || q == pp || (qq % p == 0 && pp % q == 0);
}

void StatementParams::validate() const {
  const unsigned want = signature(statement);
  const std::array<std::pair<const std::optional<std::uint64_t>*, std::pair<Field, const char*>>, 7>
      fields{{{&p, {P, "p"}},
              {&q, {Q, "q"}},
              {&alpha, {ALPHA, "alpha"}},
              {&beta, {BETA, "beta"}},
              {&r, {R, "r"}},
              {&m, {M, "m"}},
              {&n, {N, "n"}}}};
  const std::string id(to_string(statement));
  for (const auto& [value, meta] : fields) {
    const bool wanted = (want & meta.first) != 0;
    if (wanted && !value->has_value()) {
      throw InvalidArgument(id + " requires --" + meta.second);
    }
    if (!wanted && value->has_value()) {
      throw InvalidArgument(id + " does not take --" + meta.second);
    }
  }

  const auto variants = statement_variants(statement);
  if (statement == StatementId::conjecture_alt || statement == StatementId::conjecture_odd) {
    if (!variant.empty() && variant != kVacuous) {
      throw InvalidArgument(id + " does not take variant '" + variant + "'");
    }
  } else if (variants.empty()) {
    if (!variant.empty()) throw InvalidArgument(id + " does not take a variant");
  } else if (std::find(variants.begin(), variants.end(), variant) == variants.end()) {
    throw InvalidArgument(id + " needs a variant, got '" + variant + "'");
  }

  if (p) require_odd_prime("p", *p);
  if (q) {
    require_odd_prime("q", *q);
    if (*q == *p) throw InvalidArgument("p and q must be distinct");
  }
  for (const auto* e : {&alpha, &beta, &r}) {
    if (e->has_value() && (**e < 1 || **e > 64)) throw InvalidArgument("exponents must be in [1, 64]");
  }
  if (m) {
    if (*m < 1 || std::gcd(*m, *p * *q) != 1) {
      throw InvalidArgument("lemma1 multiplier must be positive and coprime to pq");
    }
  }

  switch (statement) {
    case StatementId::xia_cai:
      if (*p <= 5) throw InvalidArgument("xia_cai needs p > 5");
      break;
    case StatementId::zhao_tuple: {
      const unsigned arity = variant == kZhaoArity2 ? 2 : 4;
      if (*p <= arity) throw InvalidArgument("zhao_tuple needs p > arity");
      if (2 * *r < arity) throw InvalidArgument("zhao_tuple needs r >= arity/2");
      break;
    }
    case StatementId::lemma2:
      if (!lemma2_criterion(*p, *q)) {
        throw InvalidArgument("lemma2 divisibility is only asserted when the criterion holds for (" +
                              std::to_string(*p) + ", " + std::to_string(*q) + ")");
      }
      break;
    case StatementId::conjecture_alt:
    case StatementId::conjecture_odd:
      if (*n < 2) throw InvalidArgument("conjecture needs n > 1");
      if (*n % *p != 0) throw InvalidArgument("p must divide n");
      if (variant == kVacuous && *n % 2 != 0) {
        throw InvalidArgument("the 'vacuous' tag applies only to even n");
      }
      break;
    default:
      break;
  }
}

std::uint64_t StatementParams::two_prime_target() const {
  return ipow(*p, static_cast<unsigned>(*alpha)) * ipow(*q, static_cast<unsigned>(*beta));
}

}  // namespace hsum
