#include "artlab/modarith.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "artlab/errors.hpp"

namespace artlab {

bool UnitSet::contains(Residue r) const {
  return std::binary_search(elements.begin(), elements.end(), r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit n.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw InvalidInput("factorize: modulus must be positive");
  if (m > kMaxModulus) {
    throw InvalidInput("factorize: " + std::to_string(m) + " exceeds the supported bound 2^48");
  }
  Factorization f;
  f.m = m;
  auto take = [&](std::uint64_t p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) f.factors.push_back({p, k});
  };
  take(2);
  take(3);
  take(5);
  // Wheel mod 30 over the remaining candidates.
  static constexpr std::uint64_t kWheel[8] = {7, 11, 13, 17, 19, 23, 29, 31};
  for (std::uint64_t base = 0; base * base <= m; base += 30) {
    for (std::uint64_t w : kWheel) {
      std::uint64_t p = base + w;
      if (p * p > m) break;
      take(p);
    }
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, k] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

namespace {

std::uint64_t prime_power_value(const PrimePower& pk) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < pk.k; ++i) q *= pk.p;
  return q;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n <= 1) return out;
  for (const auto& pk : factorize(n).factors) out.push_back(pk.p);
  return out;
}

// Smallest primitive root mod an odd prime power.
std::uint64_t primitive_root(const PrimePower& pk) {
  const std::uint64_t q = prime_power_value(pk);
  const std::uint64_t phi = q / pk.p * (pk.p - 1);
  const auto qs = distinct_primes(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % pk.p == 0) continue;
    bool primitive = std::all_of(qs.begin(), qs.end(),
                                 [&](std::uint64_t r) { return pow_mod(g, phi / r, q) != 1; });
    if (primitive) return g;
  }
  return 1;  // q == 2 only
}

}  // namespace

std::uint64_t multiplicative_order(Residue a, std::uint64_t m) {
  if (m == 1) return 1;
  const auto f = factorize(m);
  std::uint64_t order = euler_phi(f);
  for (std::uint64_t r : distinct_primes(order)) {
    while (order % r == 0 && pow_mod(a, order / r, m) == 1) order /= r;
  }
  return order;
}

std::vector<Residue> unit_group_generators(std::uint64_t m) {
  const auto f = factorize(m);
  std::vector<Residue> gens;
  auto lift = [&](std::size_t index, Residue local) {
    std::vector<std::pair<Residue, std::uint64_t>> parts;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      parts.emplace_back(i == index ? local : 1, prime_power_value(f.factors[i]));
    }
    return crt_combine(parts).first;
  };
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& pk = f.factors[i];
    const std::uint64_t q = prime_power_value(pk);
    if (pk.p == 2) {
      if (pk.k == 2) gens.push_back(lift(i, 3));
      if (pk.k >= 3) {
        gens.push_back(lift(i, q - 1));
        gens.push_back(lift(i, 5));
      }
    } else {
      gens.push_back(lift(i, primitive_root(pk)));
    }
  }
  return gens;
}

UnitSet power_subgroup(std::uint64_t m, std::uint64_t e) {
  if (m == 0) throw InvalidInput("power_subgroup: modulus must be positive");
  UnitSet out{m, {}};
  if (m == 1) {
    out.elements.push_back(0);
    return out;
  }
  std::vector<bool> seen(m, false);
  for (std::uint64_t u = 1; u < m; ++u) {
    if (gcd_u64(u, m) == 1) seen[pow_mod(u, e, m)] = true;
  }
  for (std::uint64_t r = 0; r < m; ++r) {
    if (seen[r]) out.elements.push_back(r);
  }
  return out;
}

bool is_eth_power_unit(Residue x, std::uint64_t e, const Factorization& f) {
  if (f.m == 1) return true;
  if (gcd_u64(x % f.m, f.m) != 1) return false;
  for (const auto& pk : f.factors) {
    const std::uint64_t q = prime_power_value(pk);
    const std::uint64_t local = x % q;
    if (pk.p == 2) {
      if (pk.k == 1 || e % 2 == 1) continue;
      // (Z/2^k)^* = {+-1} x <5>; even powers land in <5^(2^v)> = 1 + 2^(v+2) Z.
      unsigned v = static_cast<unsigned>(__builtin_ctzll(e));
      unsigned bits = std::min(v + 2, pk.k);
      if (local % (std::uint64_t{1} << bits) != 1 % q) return false;
    } else {
      const std::uint64_t phi = q / pk.p * (pk.p - 1);
      const std::uint64_t g = gcd_u64(e, phi);
      if (pow_mod(local, phi / g, q) != 1) return false;
    }
  }
  return true;
}

std::pair<Residue, std::uint64_t> crt_combine(
    const std::vector<std::pair<Residue, std::uint64_t>>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].second == 0) throw InvalidInput("crt_combine: modulus must be positive");
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (gcd_u64(parts[i].second, parts[j].second) != 1) {
        throw InvalidInput("crt_combine: moduli " + std::to_string(parts[i].second) + " and " +
                           std::to_string(parts[j].second) + " are not coprime");
      }
    }
  }
  unsigned __int128 x = 0;
  unsigned __int128 mod = 1;
  for (const auto& [r, m] : parts) {
    if (mod * m > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw InvalidInput("crt_combine: product of moduli overflows 64 bits");
    }
    // x + mod * t = r (mod m)  =>  t = (r - x) * mod^-1 (mod m)
    const std::uint64_t mm = m;
    const std::uint64_t mod_m = static_cast<std::uint64_t>(mod % mm);
    std::uint64_t inv = 0;
    if (mm > 1) {
      // Extended Euclid on (mod_m, mm).
      std::int64_t old_r = static_cast<std::int64_t>(mod_m), cur_r = static_cast<std::int64_t>(mm);
      std::int64_t old_s = 1, cur_s = 0;
      while (cur_r != 0) {
        std::int64_t quot = old_r / cur_r;
        std::tie(old_r, cur_r) = std::pair{cur_r, old_r - quot * cur_r};
        std::tie(old_s, cur_s) = std::pair{cur_s, old_s - quot * cur_s};
      }
      inv = reduce(old_s, mm);
    }
    const std::uint64_t x_m = static_cast<std::uint64_t>(x % mm);
    const std::uint64_t diff = (r % mm + mm - x_m) % mm;
    const std::uint64_t t = mm > 1 ? mul_mod(diff, inv, mm) : 0;
    x += mod * t;
    mod *= mm;
  }
  return {static_cast<Residue>(x), static_cast<std::uint64_t>(mod)};
}

int jacobi_symbol(std::int64_t a, std::uint64_t m) {
  if (m % 2 == 0) throw InvalidInput("jacobi_symbol: modulus must be odd, got " + std::to_string(m));
  std::uint64_t x = reduce(a, m);
  std::uint64_t n = m;
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace artlab
