#pragma once

/**
 * @file modcurve.hpp
 * @brief Prime-level invariants of X_0(N) and group-level models of the
 * Eisenstein torsion C + Sigma in J_0(N).
 *
 * For n odd the model is Z/n + mu_n with Galois acting through (Z/n)^* as
 * identity on the cuspidal block and the cyclotomic character on the Shimura
 * block. For n even the two 2-torsion subgroups are identified, giving the
 * quotient of that sum by <(n/2, n/2)>.
 */

#include <array>
#include <cstdint>
#include <vector>

#include "artlab/galmod.hpp"

namespace artlab {

/// Prime levels with X_0(N) hyperelliptic (Ogg).
inline constexpr std::array<std::uint64_t, 8> kOggLevels = {23, 29, 31, 37, 41, 47, 59, 71};

struct LevelInvariants {
  std::uint64_t N = 0;
  std::uint64_t n = 1;
  std::uint64_t genus = 0;
  bool hyperelliptic = false;
  bool plus_quotient_genus_zero = false;
  std::uint64_t N_mod_9 = 0;
  bool three_divides_n = false;
};

/// Numerator of (N - 1) / 12. Throws InvalidInput for non-prime N.
std::uint64_t eisenstein_number(std::uint64_t N);

/// Genus of X_0(N) for prime N.
std::uint64_t genus_x0(std::uint64_t N);

LevelInvariants level_invariants(std::uint64_t N);

struct EisensteinModel {
  std::uint64_t N = 0;
  std::uint64_t n = 1;
  bool n_odd = true;
  GaloisModule module;
  ModulePoint cuspidal_generator;  // image of the generator of C
  ModulePoint shimura_generator;   // image of the generator of Sigma
  std::vector<ModulePoint> expected;  // <C, Sigma[3]>, sorted
};

/// Requires N prime and N >= 23.
EisensteinModel eisenstein_model(std::uint64_t N, Limits limits = {});

ARTReport theorem3_check(std::uint64_t N, Limits limits = {}, unsigned threads = 1);

struct SurveyRecord {
  LevelInvariants level;
  ARTReport report;
  /// For levels whose Atkin-Lehner quotient has genus zero: 3 does not divide n.
  bool side_condition_ok = true;

  bool passed() const { return report.verdict == Verdict::kPass && side_condition_ok; }
};

struct SurveySummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Every prime N in [from, to]; requires from >= 23. Ordered by N.
std::vector<SurveyRecord> survey(std::uint64_t from, std::uint64_t to, Limits limits = {}, unsigned threads = 1);

SurveySummary summarize(const std::vector<SurveyRecord>& records);

}  // namespace artlab
