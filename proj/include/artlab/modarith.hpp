#pragma once

/**
 * @file modarith.hpp
 * @brief Exact residue arithmetic on native 64-bit integers.
 *
 * Factorization by trial division, generators of (Z/m)^*, e-th power
 * subgroups, CRT and the Jacobi symbol. Every modulus handled here is at
 * most 2^48, so products fit in 128-bit intermediates.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace artlab {

using Residue = std::uint64_t;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 48;

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t m = 1;
  std::vector<PrimePower> factors;  // p strictly increasing
};

/// Sorted subset of (Z/modulus)^*. For modulus 1 the sole element is 0.
struct UnitSet {
  std::uint64_t modulus = 1;
  std::vector<Residue> elements;

  bool contains(Residue r) const;
  std::size_t size() const { return elements.size(); }
};

constexpr std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Reduce a signed value into [0, m).
inline std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

bool is_prime(std::uint64_t n);

/// Throws InvalidInput for m == 0 or m > 2^48.
Factorization factorize(std::uint64_t m);

std::uint64_t euler_phi(const Factorization& f);

/// Multiplicative order of a unit a mod m (a coprime to m).
std::uint64_t multiplicative_order(Residue a, std::uint64_t m);

/// Generators of (Z/m)^*: one primitive root per odd prime power (the
/// smallest), {2^k-1, 5} for 2^k with k >= 3, {3} for 4, nothing for 2.
/// Per-prime-power generators are lifted by CRT (other components set to 1)
/// and listed in increasing prime order.
std::vector<Residue> unit_group_generators(std::uint64_t m);

/// {u^e mod m : gcd(u, m) = 1}, sorted.
UnitSet power_subgroup(std::uint64_t m, std::uint64_t e);

/// Membership test for ((Z/m)^*)^e without enumerating the subgroup.
/// Factorization must be of m.
bool is_eth_power_unit(Residue x, std::uint64_t e, const Factorization& f);

/// Solve x = r_i (mod m_i) for pairwise coprime m_i. Returns (x, prod m_i).
std::pair<Residue, std::uint64_t> crt_combine(
    const std::vector<std::pair<Residue, std::uint64_t>>& parts);

/// Jacobi symbol (a/m) for odd m >= 1.
int jacobi_symbol(std::int64_t a, std::uint64_t m);

}  // namespace artlab
