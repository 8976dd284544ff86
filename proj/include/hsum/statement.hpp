#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsum {

enum class StatementId {
  eq1,
  eq2,
  xia_cai,
  zhao_tuple,
  eq3,
  lemma1,
  lemma2,
  thm1,
  thm2,
  thm3,
  remark1_pq_alt,
  remark1_pq_odd,
  remark1_pr_alt,
  remark1_pr_odd,
  conjecture_alt,
  conjecture_odd,
};

std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement(std::string_view name);
const std::vector<StatementId>& all_statements();

// Variant tags.
inline constexpr std::string_view kXiaCaiPrinted = "p-4";
inline constexpr std::string_view kXiaCaiDoubled = "2p-4";
inline constexpr std::string_view kXiaCaiCorrected = "corrected";  // +12 B/(p-3) - 3 B/(p-2)
inline constexpr std::string_view kRemarkPrinted = "printed";
inline constexpr std::string_view kRemarkNegated = "negated";
inline constexpr std::string_view kZhaoArity2 = "arity2";
inline constexpr std::string_view kZhaoArity4 = "arity4";
inline constexpr std::string_view kLemma1ModP = "mod_p_alpha";
inline constexpr std::string_view kLemma1ModPQ = "mod_p_alpha_q_beta";
inline constexpr std::string_view kVacuous = "vacuous";

/// Parameters of one checkable statement. Only the fields in the statement's
/// signature may be set; validate() enforces this.
struct StatementParams {
  StatementId statement = StatementId::eq1;
  std::optional<std::uint64_t> p, q, alpha, beta, r, m, n;
  std::string variant;

  void validate() const;

  /// p^alpha q^beta for the two-prime statements.
  std::uint64_t two_prime_target() const;

  friend bool operator==(const StatementParams&, const StatementParams&) = default;
};

/// Variants a statement accepts; empty when it takes none.
std::vector<std::string_view> statement_variants(StatementId id);

bool lemma2_criterion(std::uint64_t p, std::uint64_t q);

}  // namespace hsum
