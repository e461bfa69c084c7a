#pragma once

/**
 * @file lemma2.hpp
 * @brief Unit pairs x + y = 2 among nontrivial e-th power units mod m.
 *
 * Existence of such a pair for a modulus m is what rules out almost rational
 * points of order m under a Galois image containing the e-th power
 * homotheties. The failure set of a scan is the empirical list of moduli for
 * which no pair exists.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "artlab/modarith.hpp"

namespace artlab {

/// Always valid: x, y units mod m, neither equal to 1, x + y = 2 (mod m), and
/// any attached root satisfies root^e = value (mod m).
class PairWitness {
 public:
  /// Throws InvalidInput if any invariant fails.
  static PairWitness make(std::uint64_t m, std::uint64_t e, Residue x, Residue y,
                          std::optional<Residue> u = std::nullopt, std::optional<Residue> v = std::nullopt);

  std::uint64_t m() const { return m_; }
  std::uint64_t e() const { return e_; }
  Residue x() const { return x_; }
  Residue y() const { return y_; }
  std::optional<Residue> u() const { return u_; }
  std::optional<Residue> v() const { return v_; }

  bool operator==(const PairWitness&) const = default;

 private:
  PairWitness() = default;
  std::uint64_t m_ = 0, e_ = 0;
  Residue x_ = 0, y_ = 0;
  std::optional<Residue> u_, v_;
};

/// Lexicographically smallest witness with e-th roots attached, or nothing.
std::optional<PairWitness> exists_pair(std::uint64_t m, std::uint64_t e);

/// Same answer as exists_pair, without computing roots. Used by scans.
std::optional<PairWitness> find_pair(std::uint64_t m, std::uint64_t e);

struct Lemma2Report {
  std::uint64_t e = 1;
  std::uint64_t scanned_max = 0;
  std::vector<std::uint64_t> failures;
  std::map<std::uint64_t, PairWitness> witnesses;  // only when requested
};

struct ScanOptions {
  unsigned threads = 1;
  bool keep_witnesses = false;
  /// Ranges below this stay single-threaded.
  std::uint64_t parallel_threshold = 10'000;
};

Lemma2Report failure_scan(std::uint64_t e, std::uint64_t max_m, const ScanOptions& options = {});

/// Outcome of the explicit prime-power construction x = 1 + e p^(n-k-1),
/// y = 1 - e p^(n-k-1), with e = u p^k and gcd(u, p) = 1.
struct PrimePowerResult {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t e = 0;
  std::uint64_t modulus = 0;
  unsigned k = 0;
  bool candidate_defined = false;  // n - k - 1 >= 0
  Residue candidate_x = 0;
  Residue candidate_y = 0;
  bool candidate_valid = false;    // passes every PairWitness invariant
  bool identity_x_holds = false;   // x == (1 + p^(n-k-1))^e
  bool identity_y_holds = false;   // y == (1 - p^(n-k-1))^e
  bool fallback_used = false;
  std::optional<PairWitness> witness;
};

PrimePowerResult prime_power_witness(std::uint64_t p, unsigned n, std::uint64_t e);

inline constexpr std::uint64_t kMaxFermatPrime = 1'000'000;

/// #{(x, y) in F_p^2 : x^e + y^e = 2}, by bucketing the values of z -> z^e.
std::uint64_t count_fermat_points(std::uint64_t e, std::uint64_t p);

struct WeilThreshold {
  std::uint64_t e = 1;
  std::uint64_t bound = 2;
  std::optional<std::uint64_t> largest;
  std::vector<std::uint64_t> primes;  // every prime <= bound with count <= e^2 + 2e
  /// For e >= 3: first prime beyond which the Hasse-Weil lower bound for the
  /// smooth Fermat curve already exceeds e^2 + 2e. Informational.
  std::optional<std::uint64_t> weil_cutoff;
};

WeilThreshold weil_threshold_prime(std::uint64_t e, std::uint64_t bound);

}  // namespace artlab
