#pragma once

// Right-hand sides: closed forms in Bernoulli numbers. Nothing here may
// evaluate a harmonic sum.

#include <optional>

#include "hsum/bernoulli.hpp"
#include "hsum/statement.hpp"

namespace hsum {

struct RhsOptions {
  unsigned long bernoulli_cap = kDefaultBernoulliCap;
};

/// coefficient * B_k mod p^alpha. The coefficient may carry powers of p;
/// only as much of B_k is computed as the remaining precision needs.
Residue scaled_bernoulli(const Rational& coefficient, unsigned long k, std::uint64_t p,
                         unsigned alpha, const RhsOptions& options = {});

/// nullopt for lemma1, whose right side is itself a sum.
std::optional<Residue> statement_rhs(const StatementParams& params, const RhsOptions& options = {});

}  // namespace hsum
