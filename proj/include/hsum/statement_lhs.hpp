#pragma once

// Left-hand sides: everything that is a harmonic sum. Nothing here may touch
// Bernoulli numbers.

#include <optional>
#include <vector>

#include "hsum/harmonic.hpp"
#include "hsum/numtheory.hpp"
#include "hsum/statement.hpp"

namespace hsum {

struct LhsOptions {
  EvalOptions eval{};
  bool use_fast = true;
  bool oracle_check = false;          // duplicate fast evaluations with the brute-force oracle
  std::uint64_t oracle_max_n = 3000;  // ...for sums up to this size
};

struct SumEvaluation {
  Residue value;
  SumMethod method;
};

/// Evaluates spec modulo prod p^e over modulus_factors: fast path per prime
/// power where supported, brute force otherwise, then CRT.
SumEvaluation evaluate_sum(const TripleSumSpec& spec, std::span<const PrimeFactor> modulus_factors,
                           const LhsOptions& options);

struct LhsValue {
  Residue lhs;
  std::optional<Residue> intermediate;  // thm1-3: the -Z/2, -Z/4, 7Z/16 link of the chain
  std::optional<Residue> sum_rhs;       // lemma1: m Z(N), a sum rather than a closed form
  SumMethod method;
};

/// The modulus each statement is checked against, as prime powers.
std::vector<PrimeFactor> statement_modulus(const StatementParams& params);

LhsValue statement_lhs(const StatementParams& params, const LhsOptions& options);

}  // namespace hsum
