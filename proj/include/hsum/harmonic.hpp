#pragma once

// Sums of 1/(ijk) over ordered triples i + j + k = n whose parts are coprime
// to a squarefree radical, optionally weighted by (-1)^i and restricted by
// parity.

#include <chrono>
#include <cstdint>
#include <span>
#include <string>

#include "hsum/modarith.hpp"

namespace hsum {

enum class SignVariant { plain, alt_first };

enum class ParityFilter { all, all_odd, all_even, exactly_one_even, exactly_one_odd };

enum class SumMethod { bruteforce, fast, exact };

const char* to_string(SignVariant v);
const char* to_string(ParityFilter f);
const char* to_string(SumMethod m);

struct TripleSumSpec {
  std::uint64_t n = 3;
  std::uint64_t radical = 1;  // membership in the domain means gcd(part, radical) = 1
  SignVariant sign = SignVariant::plain;
  ParityFilter parity = ParityFilter::all;

  /// Throws InvalidArgument unless n >= 3 and radical is squarefree.
  void validate() const;
  bool admits(std::uint64_t i, std::uint64_t j, std::uint64_t k) const;
};

struct SumResult {
  Residue residue;
  std::uint64_t term_count;
  SumMethod method;
  std::chrono::nanoseconds elapsed;
};

struct ExactSumResult {
  Rational value;
  std::uint64_t term_count;
  std::chrono::nanoseconds elapsed;
};

struct SumCaps {
  std::uint64_t bruteforce_max_n = 20'000;
  std::uint64_t exact_max_n = 5'000;
  std::uint64_t tuple4_max_n = 400;
  std::uint64_t fast_max_n = 100'000'000;
};

enum class RingChoice { automatic, force_big };

struct EvalOptions {
  unsigned threads = 1;  // brute force only; partitions the outer index
  RingChoice ring = RingChoice::automatic;
  SumCaps caps{};
};

/// O(n^2) direct enumeration; the oracle for every other path.
SumResult triple_sum_bruteforce(const TripleSumSpec& spec, const BigInt& modulus,
                                const EvalOptions& options = {});

/// Exact rational value of the sum.
ExactSumResult triple_sum_exact(const TripleSumSpec& spec, const SumCaps& caps = {});

/// Sum of 1/(i_1 ... i_arity) over compositions of n into arity parts coprime to radical.
SumResult tuple_sum_bruteforce(std::uint64_t n, unsigned arity, std::uint64_t radical,
                               const BigInt& modulus, const EvalOptions& options = {});

bool fast_path_supports(ParityFilter filter);

/// O(n * 2^omega(radical)) evaluation modulo p^alpha. Requires p | n and
/// radical = p * product(cofactor_primes).
SumResult triple_sum_fast(const TripleSumSpec& spec, const PrimePower& pp,
                          std::span<const std::uint64_t> cofactor_primes,
                          const EvalOptions& options = {});

}  // namespace hsum
