#pragma once

// Registry of checkable statements. Each check computes its left side from
// harmonic sums and its right side from Bernoulli numbers, independently, and
// reports both residues.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hsum/statement.hpp"
#include "hsum/statement_lhs.hpp"
#include "hsum/statement_rhs.hpp"

namespace hsum {

struct VerifyOptions {
  LhsOptions lhs{};
  RhsOptions rhs{};
};

struct CongruenceReport {
  StatementParams params;
  BigInt modulus;
  Residue lhs;
  Residue rhs;
  std::optional<Residue> intermediate;
  bool pass;
  SumMethod method;
  std::chrono::nanoseconds elapsed;
};

CongruenceReport verify(const StatementParams& params, const VerifyOptions& options = {});

/// Verifies every item on a worker pool; reports come back in input order.
std::vector<CongruenceReport> verify_all(const std::vector<StatementParams>& params,
                                         const VerifyOptions& options, unsigned threads);

struct GridConfig {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  unsigned max_exponent = 2;
  std::uint64_t max_size = 100'000;      // p^alpha q^beta for the two-prime statements
  std::uint64_t eq1_max_prime = 199;
  std::uint64_t eq2_max_power = 1'000'000;
  std::uint64_t xia_cai_max_prime = 151;  // B_{2p-4} within the exact cap
  std::uint64_t zhao2_max_power = 2'000;
  std::uint64_t zhao4_max_power = 300;
  std::vector<std::uint64_t> lemma1_multipliers{1, 2, 4, 7, 8};
  std::vector<StatementId> statements;  // empty = every statement except the conjecture
};

/// Parameter sets for a grid scan, sorted by statement then parameters.
std::vector<StatementParams> grid_params(const GridConfig& config);

struct ConjectureFilters {
  unsigned min_distinct_primes = 1;
  enum class Parity { odd, even, all } parity = Parity::odd;
};

/// Parameter sets for every n in [2, n_max] passing the filters and every odd p | n.
std::vector<StatementParams> conjecture_params(std::uint64_t n_max, const ConjectureFilters& filters);

std::vector<CongruenceReport> conjecture_scan(std::uint64_t n_max, const ConjectureFilters& filters,
                                              const VerifyOptions& options, unsigned threads);

}  // namespace hsum
