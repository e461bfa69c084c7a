#include "artlab/lemma2.hpp"

#include <cmath>
#include <string>

#include "artlab/errors.hpp"
#include "artlab/parallel.hpp"

namespace artlab {

PairWitness PairWitness::make(std::uint64_t m, std::uint64_t e, Residue x, Residue y, std::optional<Residue> u,
                              std::optional<Residue> v) {
  auto fail = [&](const std::string& why) {
    throw InvalidInput("invalid pair witness (m=" + std::to_string(m) + ", e=" + std::to_string(e) +
                       ", x=" + std::to_string(x) + ", y=" + std::to_string(y) + "): " + why);
  };
  if (m == 0 || e == 0) fail("m and e must be positive");
  if (x >= m || y >= m) fail("residues out of range");
  if (gcd_u64(x, m) != 1 && m != 1) fail("x is not a unit");
  if (gcd_u64(y, m) != 1 && m != 1) fail("y is not a unit");
  if (x == 1 % m || y == 1 % m) fail("x and y must differ from 1");
  if ((x + y) % m != 2 % m) fail("x + y != 2");
  if (u && pow_mod(*u, e, m) != x) fail("u^e != x");
  if (v && pow_mod(*v, e, m) != y) fail("v^e != y");
  PairWitness w;
  w.m_ = m;
  w.e_ = e;
  w.x_ = x;
  w.y_ = y;
  w.u_ = u;
  w.v_ = v;
  return w;
}

namespace {

Residue smallest_root(Residue x, std::uint64_t e, std::uint64_t m) {
  for (Residue u = 1; u < m; ++u) {
    if (gcd_u64(u, m) == 1 && pow_mod(u, e, m) == x) return u;
  }
  throw InvalidInput("no e-th root of " + std::to_string(x) + " mod " + std::to_string(m));
}

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw InvalidInput(std::string(what) + " must be >= 1");
}

}  // namespace

std::optional<PairWitness> exists_pair(std::uint64_t m, std::uint64_t e) {
  require_positive(m, "exists_pair: m");
  require_positive(e, "exists_pair: e");
  const UnitSet powers = power_subgroup(m, e);
  const Residue one = 1 % m;
  for (Residue x : powers.elements) {
    if (x == one) continue;
    const Residue y = (2 % m + m - x) % m;
    if (y != one && powers.contains(y)) {
      return PairWitness::make(m, e, x, y, smallest_root(x, e, m), smallest_root(y, e, m));
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> find_pair(std::uint64_t m, std::uint64_t e) {
  require_positive(m, "find_pair: m");
  require_positive(e, "find_pair: e");
  if (m <= 2) return std::nullopt;
  const Factorization f = factorize(m);
  for (Residue x = 2; x < m; ++x) {
    if (!is_eth_power_unit(x, e, f)) continue;
    const Residue y = (m + 2 - x) % m;
    if (y != 1 && is_eth_power_unit(y, e, f)) return PairWitness::make(m, e, x, y);
  }
  return std::nullopt;
}

Lemma2Report failure_scan(std::uint64_t e, std::uint64_t max_m, const ScanOptions& options) {
  require_positive(e, "failure_scan: e");
  require_positive(max_m, "failure_scan: max_m");
  const unsigned threads = max_m < options.parallel_threshold ? 1u : std::max(1u, options.threads);
  struct Chunk {
    std::vector<std::uint64_t> failures;
    std::map<std::uint64_t, PairWitness> witnesses;
  };
  std::vector<Chunk> chunks(threads);
  for_each_chunk(max_m, threads, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t m = begin + 1; m <= end; ++m) {
      auto w = find_pair(m, e);
      if (!w) {
        chunks[c].failures.push_back(m);
      } else if (options.keep_witnesses) {
        chunks[c].witnesses.emplace(m, *w);
      }
    }
  });
  Lemma2Report report;
  report.e = e;
  report.scanned_max = max_m;
  for (auto& c : chunks) {
    report.failures.insert(report.failures.end(), c.failures.begin(), c.failures.end());
    report.witnesses.merge(c.witnesses);
  }
  return report;
}

PrimePowerResult prime_power_witness(std::uint64_t p, unsigned n, std::uint64_t e) {
  if (!is_prime(p)) throw InvalidInput("prime_power_witness: " + std::to_string(p) + " is not prime");
  if (n < 2) throw InvalidInput("prime_power_witness: exponent n must be >= 2");
  require_positive(e, "prime_power_witness: e");
  PrimePowerResult r;
  r.p = p;
  r.n = n;
  r.e = e;
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxModulus) throw InvalidInput("prime_power_witness: p^n exceeds 2^48");
  }
  r.modulus = static_cast<std::uint64_t>(q);
  const std::uint64_t mod = r.modulus;
  std::uint64_t u = e;
  while (u % p == 0) {
    u /= p;
    ++r.k;
  }

  if (r.k + 1 <= n) {
    r.candidate_defined = true;
    const std::uint64_t shift = pow_mod(p, n - r.k - 1, mod);  // p^(n-k-1)
    const std::uint64_t step = mul_mod(e % mod, shift, mod);
    r.candidate_x = (1 + step) % mod;
    r.candidate_y = (1 + mod - step) % mod;
    r.identity_x_holds = pow_mod((1 + shift) % mod, e, mod) == r.candidate_x;
    r.identity_y_holds = pow_mod((1 + mod - shift) % mod, e, mod) == r.candidate_y;
    const Factorization f = factorize(mod);
    const bool units = gcd_u64(r.candidate_x, mod) == 1 && gcd_u64(r.candidate_y, mod) == 1;
    const bool powers = units && is_eth_power_unit(r.candidate_x, e, f) && is_eth_power_unit(r.candidate_y, e, f);
    const bool nontrivial = r.candidate_x != 1 && r.candidate_y != 1;
    r.candidate_valid = powers && nontrivial;
    if (r.candidate_valid) {
      std::optional<Residue> ru, rv;
      if (r.identity_x_holds) ru = (1 + shift) % mod;
      if (r.identity_y_holds) rv = (1 + mod - shift) % mod;
      r.witness = PairWitness::make(mod, e, r.candidate_x, r.candidate_y, ru, rv);
      return r;
    }
  }
  r.fallback_used = true;
  r.witness = exists_pair(mod, e);
  return r;
}

std::uint64_t count_fermat_points(std::uint64_t e, std::uint64_t p) {
  require_positive(e, "count_fermat_points: e");
  if (p > kMaxFermatPrime) {
    throw ResourceLimit("count_fermat_points: p=" + std::to_string(p) + " exceeds " +
                        std::to_string(kMaxFermatPrime));
  }
  if (!is_prime(p)) throw InvalidInput("count_fermat_points: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> hits(p, 0);
  for (std::uint64_t z = 0; z < p; ++z) ++hits[pow_mod(z, e, p)];
  std::uint64_t total = 0;
  const std::uint64_t two = 2 % p;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (hits[a]) total += hits[a] * hits[(two + p - a) % p];
  }
  return total;
}

WeilThreshold weil_threshold_prime(std::uint64_t e, std::uint64_t bound) {
  require_positive(e, "weil_threshold_prime: e");
  if (bound < 2) throw InvalidInput("weil_threshold_prime: bound must be >= 2");
  if (bound > kMaxFermatPrime) {
    throw ResourceLimit("weil_threshold_prime: bound exceeds " + std::to_string(kMaxFermatPrime));
  }
  WeilThreshold w;
  w.e = e;
  w.bound = bound;
  const std::uint64_t limit = e * e + 2 * e;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (is_prime(p) && count_fermat_points(e, p) <= limit) w.primes.push_back(p);
  }
  if (!w.primes.empty()) w.largest = w.primes.back();

  if (e >= 3) {
    // Affine points >= p + 1 - 2g sqrt(p) - e with g = (e-1)(e-2)/2, valid for p not dividing 2e.
    // The bound is increasing once sqrt(p) > g.
    const double g = static_cast<double>((e - 1) * (e - 2)) / 2.0;
    for (std::uint64_t p = 2 * e + 1;; ++p) {
      if (!is_prime(p)) continue;
      const double root = std::sqrt(static_cast<double>(p));
      const double lower = static_cast<double>(p) + 1.0 - 2.0 * g * root - static_cast<double>(e);
      if (root > g && lower > static_cast<double>(limit)) {
        w.weil_cutoff = p;
        break;
      }
    }
  }
  return w;
}

}  // namespace artlab
