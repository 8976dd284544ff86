#include "hsum/harmonic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "hsum/numtheory.hpp"

namespace hsum {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<char> admissible_table(std::uint64_t n, std::uint64_t radical) {
  std::vector<char> adm(n + 1, 0);
  for (std::uint64_t x = 1; x <= n; ++x) adm[x] = std::gcd(x, radical) == 1;
  return adm;
}

// Inverses of every admissible x in [1, limit]; zero elsewhere.
template <typename Ring>
std::vector<typename Ring::Elem> inverse_table(const Ring& ring, const std::vector<char>& adm,
                                               std::uint64_t limit) {
  std::vector<typename Ring::Elem> values;
  std::vector<std::uint64_t> where;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    if (!adm[x]) continue;
    values.push_back(ring.from_uint(x));
    where.push_back(x);
  }
  ring.batch_inverse(values);
  std::vector<typename Ring::Elem> inv(limit + 1, ring.zero());
  for (std::size_t t = 0; t < where.size(); ++t) inv[where[t]] = std::move(values[t]);
  return inv;
}

template <typename Ring>
struct Partial {
  typename Ring::Elem sum;
  std::uint64_t count = 0;
};

template <typename Ring>
Partial<Ring> bruteforce_range(const Ring& ring, const TripleSumSpec& spec,
                               const std::vector<char>& adm,
                               const std::vector<typename Ring::Elem>& inv, std::uint64_t i_begin,
                               std::uint64_t i_end) {
  const std::uint64_t n = spec.n;
  Partial<Ring> out{ring.zero(), 0};
  for (std::uint64_t i = i_begin; i < i_end; ++i) {
    if (!adm[i]) continue;
    auto inner = ring.zero();
    for (std::uint64_t j = 1; i + j < n; ++j) {
      const std::uint64_t k = n - i - j;
      if (!adm[j] || !adm[k] || !spec.admits(i, j, k)) continue;
      inner = ring.add(inner, ring.mul(inv[j], inv[k]));
      ++out.count;
    }
    auto term = ring.mul(inv[i], inner);
    if (spec.sign == SignVariant::alt_first && (i & 1)) term = ring.neg(term);
    out.sum = ring.add(out.sum, term);
  }
  return out;
}

template <typename Ring>
SumResult bruteforce_with(const Ring& ring, const TripleSumSpec& spec, unsigned threads) {
  const auto start = Clock::now();
  const std::uint64_t n = spec.n;
  const auto adm = admissible_table(n, spec.radical);
  const auto inv = inverse_table(ring, adm, n - 2);

  const std::uint64_t first = 1, last = n - 1;  // i ranges over [1, n - 2]
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(last - first)));
  std::vector<Partial<Ring>> partials(threads, Partial<Ring>{ring.zero(), 0});
  if (threads == 1) {
    partials[0] = bruteforce_range(ring, spec, adm, inv, first, last);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t span = (last - first + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(last, first + t * span);
      const std::uint64_t hi = std::min(last, lo + span);
      workers.emplace_back([&, t, lo, hi] {
        partials[t] = bruteforce_range(ring, spec, adm, inv, lo, hi);
      });
    }
    for (auto& w : workers) w.join();
  }
  auto total = ring.zero();
  std::uint64_t count = 0;
  for (const auto& part : partials) {
    total = ring.add(total, part.sum);
    count += part.count;
  }
  return {ring.to_residue(total), count, SumMethod::bruteforce, Clock::now() - start};
}

template <typename Fn>
decltype(auto) dispatch_ring(const BigInt& modulus, RingChoice choice, Fn&& fn) {
  if (choice == RingChoice::force_big) return fn(BigRing(modulus));
  return with_ring(modulus, std::forward<Fn>(fn));
}

// Parity each part must have under an ALL_ODD / ALL_EVEN filter; -1 when unconstrained.
int required_parity(ParityFilter filter) {
  switch (filter) {
    case ParityFilter::all_odd: return 1;
    case ParityFilter::all_even: return 0;
    default: return -1;
  }
}

template <typename Ring>
SumResult fast_with(const Ring& ring, const TripleSumSpec& spec,
                    std::span<const std::uint64_t> primes) {
  const auto start = Clock::now();
  const std::uint64_t n = spec.n;
  const int parity = required_parity(spec.parity);
  const auto adm = admissible_table(n, spec.radical);
  // s = n - i is a p-unit but may share a cofactor prime, so invert every p-unit.
  const auto inv = inverse_table(ring, admissible_table(n, primes[0]), n - 1);

  // One accumulator block per subset T of the radical's primes, indexed by
  // j mod prod(T); the inclusion-exclusion over T removes every j with
  // n - i - j sharing a prime with the radical.
  struct Subset {
    std::uint64_t modulus;
    bool negative;
    std::size_t offset;
  };
  std::vector<Subset> subsets;
  std::size_t slots = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t d = 1;
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (mask >> b & 1) d *= primes[b];
    }
    subsets.push_back({d, (std::popcount(mask) & 1) != 0, slots});
    slots += d;
  }
  std::vector<typename Ring::Elem> class_sum(slots, ring.zero());
  std::vector<std::int64_t> class_count(slots, 0);

  const auto two = ring.from_uint(2);
  auto total = ring.zero();
  std::uint64_t count = 0;
  for (std::uint64_t s = 1; s < n; ++s) {
    // s = j + k for the outer index i = n - s; class_* hold every admissible j < s.
    const std::uint64_t i = n - s;
    const bool outer_ok = adm[i] && (parity < 0 || (static_cast<int>(i & 1) == parity && (s & 1) == 0));
    if (outer_ok) {
      auto h = ring.zero();
      std::int64_t c = 0;
      for (const auto& t : subsets) {
        const std::size_t slot = t.offset + s % t.modulus;
        if (t.negative) {
          h = ring.sub(h, class_sum[slot]);
          c -= class_count[slot];
        } else {
          h = ring.add(h, class_sum[slot]);
          c += class_count[slot];
        }
      }
      // sum_{j+k=s} 1/(jk) = (2/s) sum_j 1/j over the symmetric domain.
      auto term = ring.mul(ring.mul(inv[i], inv[s]), ring.mul(two, h));
      if (spec.sign == SignVariant::alt_first && (i & 1)) term = ring.neg(term);
      total = ring.add(total, term);
      count += static_cast<std::uint64_t>(c);
    }
    if (adm[s] && (parity < 0 || static_cast<int>(s & 1) == parity)) {
      for (const auto& t : subsets) {
        const std::size_t slot = t.offset + s % t.modulus;
        class_sum[slot] = ring.add(class_sum[slot], inv[s]);
        ++class_count[slot];
      }
    }
  }
  return {ring.to_residue(total), count, SumMethod::fast, Clock::now() - start};
}

template <typename Ring>
SumResult tuple_with(const Ring& ring, std::uint64_t n, unsigned arity, std::uint64_t radical) {
  const auto start = Clock::now();
  const auto adm = admissible_table(n, radical);
  const auto inv = inverse_table(ring, adm, n);
  auto total = ring.zero();
  std::uint64_t count = 0;
  if (arity == 2) {
    for (std::uint64_t a = 1; a < n; ++a) {
      if (!adm[a] || !adm[n - a]) continue;
      total = ring.add(total, ring.mul(inv[a], inv[n - a]));
      ++count;
    }
  } else {
    for (std::uint64_t a = 1; a + 3 <= n; ++a) {
      if (!adm[a]) continue;
      auto sa = ring.zero();
      for (std::uint64_t b = 1; a + b + 2 <= n; ++b) {
        if (!adm[b]) continue;
        auto sb = ring.zero();
        for (std::uint64_t c = 1; a + b + c < n; ++c) {
          const std::uint64_t d = n - a - b - c;
          if (!adm[c] || !adm[d]) continue;
          sb = ring.add(sb, ring.mul(inv[c], inv[d]));
          ++count;
        }
        sa = ring.add(sa, ring.mul(inv[b], sb));
      }
      total = ring.add(total, ring.mul(inv[a], sa));
    }
  }
  return {ring.to_residue(total), count, SumMethod::bruteforce, Clock::now() - start};
}

}  // namespace

const char* to_string(SignVariant v) {
  return v == SignVariant::plain ? "plain" : "alt_first";
}

const char* to_string(ParityFilter f) {
  switch (f) {
    case ParityFilter::all: return "all";
    case ParityFilter::all_odd: return "all_odd";
    case ParityFilter::all_even: return "all_even";
    case ParityFilter::exactly_one_even: return "exactly_one_even";
    case ParityFilter::exactly_one_odd: return "exactly_one_odd";
  }
  return "?";
}

const char* to_string(SumMethod m) {
  switch (m) {
    case SumMethod::bruteforce: return "bruteforce";
    case SumMethod::fast: return "fast";
    case SumMethod::exact: return "exact";
  }
  return "?";
}

void TripleSumSpec::validate() const {
  if (n < 3) throw InvalidArgument("triple sum needs n >= 3, got " + std::to_string(n));
  if (radical < 1 || !is_squarefree(radical)) {
    throw InvalidArgument("radical must be squarefree, got " + std::to_string(radical));
  }
}

bool TripleSumSpec::admits(std::uint64_t i, std::uint64_t j, std::uint64_t k) const {
  const unsigned odd = static_cast<unsigned>((i & 1) + (j & 1) + (k & 1));
  switch (parity) {
    case ParityFilter::all: return true;
    case ParityFilter::all_odd: return odd == 3;
    case ParityFilter::all_even: return odd == 0;
    case ParityFilter::exactly_one_even: return odd == 2;
    case ParityFilter::exactly_one_odd: return odd == 1;
  }
  return false;
}

SumResult triple_sum_bruteforce(const TripleSumSpec& spec, const BigInt& modulus,
                                const EvalOptions& options) {
  spec.validate();
  if (spec.n > options.caps.bruteforce_max_n) {
    throw CapExceeded("brute-force triple sum n=" + std::to_string(spec.n) + " exceeds cap " +
                      std::to_string(options.caps.bruteforce_max_n));
  }
  return dispatch_ring(modulus, options.ring, [&](const auto& ring) {
    return bruteforce_with(ring, spec, options.threads);
  });
}

ExactSumResult triple_sum_exact(const TripleSumSpec& spec, const SumCaps& caps) {
  spec.validate();
  const std::uint64_t n = spec.n;
  if (n > caps.exact_max_n) {
    throw CapExceeded("exact triple sum n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.exact_max_n));
  }
  const auto start = Clock::now();
  const auto adm = admissible_table(n, spec.radical);
  // Scale every 1/x by L = lcm of the admissible parts so the sum is one integer over L^3.
  BigInt lcm = 1;
  for (std::uint64_t x = 1; x + 2 <= n; ++x) {
    if (adm[x]) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), x);
  }
  std::vector<BigInt> scaled(n + 1);
  for (std::uint64_t x = 1; x + 2 <= n; ++x) {
    if (adm[x]) mpz_divexact_ui(scaled[x].get_mpz_t(), lcm.get_mpz_t(), x);
  }
  BigInt numerator = 0, inner, prod;
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i + 2 <= n; ++i) {
    if (!adm[i]) continue;
    inner = 0;
    for (std::uint64_t j = 1; i + j < n; ++j) {
      const std::uint64_t k = n - i - j;
      if (!adm[j] || !adm[k] || !spec.admits(i, j, k)) continue;
      mpz_addmul(inner.get_mpz_t(), scaled[j].get_mpz_t(), scaled[k].get_mpz_t());
      ++count;
    }
    prod = scaled[i] * inner;
    if (spec.sign == SignVariant::alt_first && (i & 1)) {
      numerator -= prod;
    } else {
      numerator += prod;
    }
  }
  BigInt denominator = lcm * lcm * lcm;
  return {Rational(numerator, denominator), count, Clock::now() - start};
}

SumResult tuple_sum_bruteforce(std::uint64_t n, unsigned arity, std::uint64_t radical,
                               const BigInt& modulus, const EvalOptions& options) {
  if (arity != 2 && arity != 4) throw InvalidArgument("tuple arity must be 2 or 4");
  if (n < arity) throw InvalidArgument("tuple sum needs n >= arity");
  if (radical < 1 || !is_squarefree(radical)) throw InvalidArgument("radical must be squarefree");
  if (arity == 4 && n > options.caps.tuple4_max_n) {
    throw CapExceeded("arity-4 tuple sum n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(options.caps.tuple4_max_n));
  }
  if (arity == 2 && n > options.caps.fast_max_n) {
    throw CapExceeded("arity-2 tuple sum n=" + std::to_string(n) + " exceeds cap");
  }
  return dispatch_ring(modulus, options.ring,
                       [&](const auto& ring) { return tuple_with(ring, n, arity, radical); });
}

bool fast_path_supports(ParityFilter filter) {
  return filter == ParityFilter::all || filter == ParityFilter::all_odd ||
         filter == ParityFilter::all_even;
}

SumResult triple_sum_fast(const TripleSumSpec& spec, const PrimePower& pp,
                          std::span<const std::uint64_t> cofactor_primes,
                          const EvalOptions& options) {
  spec.validate();
  if (!fast_path_supports(spec.parity)) {
    throw UnsupportedFilter(std::string("fast path does not support parity filter ") +
                            to_string(spec.parity));
  }
  if (spec.n > options.caps.fast_max_n) {
    throw CapExceeded("fast triple sum n=" + std::to_string(spec.n) + " exceeds cap " +
                      std::to_string(options.caps.fast_max_n));
  }
  const std::uint64_t p = mpz_get_ui(pp.prime().get_mpz_t());
  std::vector<std::uint64_t> primes{p};
  std::uint64_t product = p;
  for (std::uint64_t r : cofactor_primes) {
    if (!is_prime(r) || std::find(primes.begin(), primes.end(), r) != primes.end()) {
      throw InvalidArgument("cofactor primes must be distinct primes other than p");
    }
    primes.push_back(r);
    product *= r;
  }
  if (product != spec.radical) {
    throw InvalidArgument("radical " + std::to_string(spec.radical) + " != p * cofactors = " +
                          std::to_string(product));
  }
  if (spec.n % p != 0) {
    throw InvalidArgument("fast path needs p | n (p=" + std::to_string(p) +
                          ", n=" + std::to_string(spec.n) + ")");
  }
  return dispatch_ring(pp.value(), options.ring,
                       [&](const auto& ring) { return fast_with(ring, spec, primes); });
}

}  // namespace hsum
