#include "hsum/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hsum/numtheory.hpp"

namespace hsum {

namespace {

// Memoized exact prefix B_0..B_n.
struct ExactTable {
  std::mutex mutex;
  std::vector<mpq_class> values{mpq_class(1)};
};

ExactTable& exact_table() {
  static ExactTable table;
  return table;
}

void extend_exact(std::vector<mpq_class>& b, unsigned long k) {
  while (b.size() <= k) {
    const unsigned long n = b.size();  // computing B_n from sum_{i<n} C(n+1, i) B_i
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(n+1, 0)
    for (unsigned long i = 0; i < n; ++i) {
      if (i >= 3 && (i & 1)) {
        // B_i = 0; still advance the binomial.
      } else {
        sum += mpq_class(binom) * b[i];
      }
      binom = binom * (n + 1 - i) / (i + 1);
    }
    mpq_class bn = -sum / mpq_class(static_cast<long>(n + 1));
    bn.canonicalize();
    b.push_back(bn);
  }
}

// Inverse power series of (e^x - 1)/x mod p, extended on demand.
struct SeriesCache {
  std::vector<std::uint64_t> inverse_coeffs;  // c_n with sum c_n x^n = x/(e^x - 1)
};

struct SeriesTable {
  std::mutex mutex;
  std::map<std::uint64_t, std::shared_ptr<SeriesCache>> by_prime;
};

SeriesTable& series_table() {
  static SeriesTable table;
  return table;
}

std::uint64_t series_coefficient(std::uint64_t p, unsigned long n) {
  auto& table = series_table();
  std::lock_guard lock(table.mutex);
  auto& slot = table.by_prime[p];
  if (!slot) slot = std::make_shared<SeriesCache>();
  auto& c = slot->inverse_coeffs;
  if (c.size() > n) return c[n];

  const FixedRing f(p);
  // a_i = 1/(i+1)!, invertible while i + 1 < p.
  std::vector<std::uint64_t> a(n + 1);
  std::uint64_t fact = 1;
  for (unsigned long i = 0; i <= n; ++i) {
    fact = f.mul(fact, f.from_uint(i + 1));
    a[i] = fact;
  }
  f.batch_inverse(a);

  if (c.empty()) c.push_back(1);
  while (c.size() <= n) {
    const unsigned long m = c.size();
    std::uint64_t acc = 0;
    for (unsigned long i = 1; i <= m; ++i) acc = f.add(acc, f.mul(a[i], c[m - i]));
    c.push_back(f.neg(acc));
  }
  return c[n];
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

}  // namespace

const char* to_string(BernoulliProvenance provenance) {
  switch (provenance) {
    case BernoulliProvenance::recurrence: return "recurrence";
    case BernoulliProvenance::series: return "series";
    case BernoulliProvenance::kummer: return "kummer";
    case BernoulliProvenance::crt: return "crt";
  }
  return "?";
}

Rational bernoulli_exact(unsigned long k, unsigned long cap) {
  if (k > cap) {
    throw CapExceeded("exact Bernoulli index " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  }
  auto& table = exact_table();
  std::lock_guard lock(table.mutex);
  extend_exact(table.values, k);
  return Rational(table.values[k]);
}

Residue bernoulli_series_mod_prime(unsigned long k, std::uint64_t p) {
  require_odd_prime(p);
  if (k > 1 && k + 3 > p) {
    throw InvalidArgument("series route needs k <= p - 3 (k=" + std::to_string(k) +
                          ", p=" + std::to_string(p) + ")");
  }
  if (k == 1) return reduce_rational(Rational(-1, 2), BigInt(static_cast<unsigned long>(p)));
  const FixedRing f(p);
  std::uint64_t kfact = 1;
  for (unsigned long i = 2; i <= k; ++i) kfact = f.mul(kfact, f.from_uint(i));
  return f.to_residue(f.mul(kfact, series_coefficient(p, k)));
}

Residue bernoulli_kummer_mod_prime(unsigned long k, std::uint64_t p) {
  require_odd_prime(p);
  if (k == 0 || (k & 1)) throw InvalidArgument("Kummer route needs even k > 0");
  if (k % (p - 1) == 0) throw PoleAtIndex(k, BigInt(static_cast<unsigned long>(p)));
  const unsigned long k0 = k % (p - 1);
  const FixedRing f(p);
  const std::uint64_t b0 = f.from_big(bernoulli_series_mod_prime(k0, p).value());
  const std::uint64_t scale = f.mul(f.from_uint(k), f.inverse(f.from_uint(k0)));
  return f.to_residue(f.mul(scale, b0));
}

Residue bernoulli_quotient_mod_prime(unsigned long k, std::uint64_t p) {
  require_odd_prime(p);
  if (k == 0 || (k & 1)) throw InvalidArgument("B_k/k needs even k > 0");
  if (k % (p - 1) == 0) throw PoleAtIndex(k, BigInt(static_cast<unsigned long>(p)));
  const unsigned long k0 = k % (p - 1);
  const FixedRing f(p);
  const std::uint64_t b0 = f.from_big(bernoulli_series_mod_prime(k0, p).value());
  return f.to_residue(f.mul(b0, f.inverse(f.from_uint(k0))));
}

BernoulliValue bernoulli_mod_prime(unsigned long k, std::uint64_t p) {
  require_odd_prime(p);
  const BigInt modulus(static_cast<unsigned long>(p));
  if (k >= 3 && (k & 1)) return {k, Residue(0, modulus), BernoulliProvenance::series};
  if (k > 0 && k % (p - 1) == 0) throw PoleAtIndex(k, modulus);
  if (k <= 1 || k + 3 <= p) {
    return {k, bernoulli_series_mod_prime(k, p), BernoulliProvenance::series};
  }
  return {k, bernoulli_kummer_mod_prime(k, p), BernoulliProvenance::kummer};
}

BernoulliValue bernoulli_mod(unsigned long k, std::span<const std::uint64_t> primes) {
  if (primes.empty()) throw InvalidArgument("bernoulli_mod needs at least one prime");
  // Report the largest offending prime when several have a pole.
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.rbegin(), sorted.rend());
  for (std::uint64_t p : sorted) {
    require_odd_prime(p);
    if (k > 0 && k % (p - 1) == 0) throw PoleAtIndex(k, BigInt(static_cast<unsigned long>(p)));
  }
  std::vector<Residue> parts;
  parts.reserve(primes.size());
  for (std::uint64_t p : primes) parts.push_back(bernoulli_mod_prime(k, p).residue());
  return {k, crt_combine(parts), BernoulliProvenance::crt};
}

BigInt von_staudt_clausen_denominator(unsigned long k) {
  if (k == 0 || (k & 1)) throw InvalidArgument("von Staudt-Clausen applies to even k >= 2");
  BigInt d = 1;
  for (unsigned long r = 2; r <= k + 1; ++r) {
    if (k % (r - 1) == 0 && is_prime(r)) d *= static_cast<unsigned long>(r);
  }
  return d;
}

}  // namespace hsum
