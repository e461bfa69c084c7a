#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// arithmetic; each is the obvious quadratic (or worse) definition.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t phi_by_gcd(std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t c = 0;
  for (std::uint64_t u = 1; u < m; ++u) c += std::gcd(u, m) == 1;
  return c;
}

inline std::uint64_t slow_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (b % m) % m;
  return r;
}

/// Multiplicative closure of `gens` inside Z/m, starting from 1.
inline std::set<std::uint64_t> mult_closure(const std::vector<std::uint64_t>& gens, std::uint64_t m) {
  std::set<std::uint64_t> seen{1 % m};
  std::vector<std::uint64_t> stack{1 % m};
  while (!stack.empty()) {
    std::uint64_t x = stack.back();
    stack.pop_back();
    for (auto g : gens) {
      std::uint64_t y = x * g % m;
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

inline std::set<std::uint64_t> units(std::uint64_t m) {
  std::set<std::uint64_t> s;
  if (m == 1) return {0};
  for (std::uint64_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) s.insert(u);
  return s;
}

/// Legendre symbol by listing squares.
inline int legendre_by_squares(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const std::int64_t r = ((a % m) + m) % m;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < m; ++x)
    if (x * x % m == r) return 1;
  return -1;
}

/// Double loop over F_p^2.
inline std::uint64_t fermat_count_quadratic(std::uint64_t e, std::uint64_t p) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      c += (slow_pow(x, e, p) + slow_pow(y, e, p)) % p == 2 % p;
  return c;
}

/// Every (x, y) pair of nontrivial e-th power units with x + y = 2, scanning
/// all pairs of units. Returns the lexicographically smallest, if any.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> unit_pair_double_loop(std::uint64_t m,
                                                                                   std::uint64_t e) {
  std::set<std::uint64_t> powers;
  for (auto u : units(m)) powers.insert(slow_pow(u, e, m));
  for (auto x : powers)
    for (auto y : powers)
      if (x != 1 % m && y != 1 % m && (x + y) % m == 2 % m) return std::pair{x, y};
  return std::nullopt;
}

}  // namespace oracle
