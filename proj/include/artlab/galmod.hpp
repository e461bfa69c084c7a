#pragma once

/**
 * @file galmod.hpp
 * @brief Finite abelian groups with an explicit Galois image.
 *
 * A module is the group Z/d_1 + ... + Z/d_k together with a list of
 * generator matrices acting on column vectors of coordinates. Entry A(i,j)
 * is a homomorphism Z/d_j -> Z/d_i, which is well defined exactly when
 * d_i / gcd(d_i, d_j) divides A(i,j). Entries are stored reduced mod d_i.
 *
 * Points are addressed either by coordinates or by a mixed-radix index in
 * which the first coordinate is most significant, so index order and
 * lexicographic coordinate order coincide.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace artlab {

struct Limits {
  std::size_t max_closure = 1'000'000;
  std::uint64_t max_points = 10'000'000;
};

struct ModulePoint {
  std::vector<std::int64_t> coords;

  auto operator<=>(const ModulePoint&) const = default;
};

/// Row-major k x k integer matrix; row i column j acts Z/d_j -> Z/d_i.
struct Automorphism {
  std::size_t rank = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
  auto operator<=>(const Automorphism&) const = default;
};

/// Unvalidated module as read from a description file.
struct ModuleDescription {
  std::string name;
  std::vector<std::int64_t> factors;
  std::vector<std::vector<std::vector<std::int64_t>>> galois;
};

class GaloisModule {
 public:
  /// Checks every invariant: factor bounds, matrix shape, the divisibility
  /// condition on each entry, invertibility of each generator and the
  /// closure cap. Throws InvalidInput or ResourceLimit.
  static GaloisModule validate(const ModuleDescription& raw, Limits limits = {});

  const std::string& name() const { return name_; }
  std::size_t rank() const { return factors_.size(); }
  std::span<const std::int64_t> factors() const { return factors_; }
  std::uint64_t point_count() const { return point_count_; }
  const Limits& limits() const { return limits_; }
  const std::vector<Automorphism>& generators() const { return generators_; }

  /// Full image generated by the generators, sorted by entries. Computed once
  /// on first use; throws ResourceLimit if it outgrows limits().max_closure.
  const std::vector<Automorphism>& closure() const;

  Automorphism identity() const;
  Automorphism compose(const Automorphism& a, const Automorphism& b) const;  // a after b
  ModulePoint apply(const Automorphism& a, const ModulePoint& p) const;

  ModulePoint zero() const;
  ModulePoint add(const ModulePoint& p, const ModulePoint& q) const;
  ModulePoint sub(const ModulePoint& p, const ModulePoint& q) const;
  ModulePoint negate(const ModulePoint& p) const;
  ModulePoint scale(std::int64_t c, const ModulePoint& p) const;
  std::uint64_t order(const ModulePoint& p) const;

  /// Throws InvalidInput if p has the wrong rank or out-of-range coordinates.
  void check_point(const ModulePoint& p) const;
  /// Reduce arbitrary integer coordinates into range.
  ModulePoint make_point(std::vector<std::int64_t> coords) const;

  std::uint64_t index_of(const ModulePoint& p) const;
  ModulePoint point_at(std::uint64_t index) const;

  GaloisModule with_name(std::string name) const;

 private:
  struct ClosureCache {
    std::once_flag once;
    std::vector<Automorphism> elements;
  };

  GaloisModule() = default;

  std::string name_;
  std::vector<std::int64_t> factors_;
  std::vector<Automorphism> generators_;
  std::uint64_t point_count_ = 1;
  Limits limits_;
  std::shared_ptr<ClosureCache> closure_ = std::make_shared<ClosureCache>();
};

enum class Verdict { kPass, kFail, kNotChecked };

const char* to_string(Verdict v);

struct ARTReport {
  std::string name;
  std::uint64_t total_points = 0;
  std::vector<ModulePoint> ar_points;  // sorted
  std::optional<std::vector<ModulePoint>> expected;
  Verdict verdict = Verdict::kNotChecked;
  double elapsed_ms = 0.0;
};

struct EnumerationOptions {
  unsigned threads = 1;
  std::optional<std::vector<ModulePoint>> expected;
};

std::vector<Automorphism> galois_closure(const GaloisModule& module);
ModulePoint apply_automorphism(const GaloisModule& module, const Automorphism& a,
                               const ModulePoint& p);

/// Difference-set form: D = {s(p) - p}, and p is almost rational iff the only
/// element of D whose negative also lies in D is 0.
bool is_almost_rational(const GaloisModule& module, const ModulePoint& p);

/// Literal two-quantifier form over all pairs (s, t). Reference oracle for
/// is_almost_rational.
bool is_almost_rational_naive(const GaloisModule& module, const ModulePoint& p);

/// Enumerates every point. Throws ResourceLimit above limits().max_points.
ARTReport almost_rational_set(const GaloisModule& module, const EnumerationOptions& options = {});

/// mu_n: Z/n with (Z/n)^* acting by multiplication, one generator per
/// element of unit_group_generators(n).
GaloisModule cyclotomic_module(std::int64_t n, Limits limits = {});
/// Z/n with trivial action.
GaloisModule constant_module(std::int64_t n, Limits limits = {});
/// (Z/m)^dim with the scalars u^e for u in unit_group_generators(m).
GaloisModule homothety_module(std::int64_t m, std::int64_t e, std::int64_t dim,
                              Limits limits = {});

/// Block-diagonal sum. Generator i of the result acts as left[i] on the first
/// block and right[i] on the second; the lists must have equal length.
GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b,
                        std::span<const Automorphism> left, std::span<const Automorphism> right);
/// Independent actions: a's generators paired with the identity, then the
/// identity paired with b's generators.
GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b);

/// Quotient presentation in invariant-factor coordinates.
struct Quotient {
  GaloisModule module;
  /// Rows map old coordinates to new coordinates (before reduction).
  std::vector<std::vector<std::int64_t>> projection;

  ModulePoint project(const ModulePoint& p) const;
};

/// Quotient by the subgroup generated by `sub`. Throws InvalidInput naming a
/// generator that does not preserve the subgroup.
Quotient quotient_by(const GaloisModule& module, const std::vector<ModulePoint>& sub);

/// Sorted list of the points in the subgroup generated by `gens`.
std::vector<ModulePoint> subgroup_generated(const GaloisModule& module,
                                            const std::vector<ModulePoint>& gens);

/// Points fixed by every generator (hence by the whole image).
std::vector<ModulePoint> fixed_points(const GaloisModule& module);

struct UnipotentViolation {
  Automorphism sigma;
  ModulePoint point;
};

struct Lemma4Audit {
  std::vector<Automorphism> unipotent;  // every s in the closure with (s - 1)^2 = 0
  std::size_t ar_points_checked = 0;
  std::vector<UnipotentViolation> violations;

  bool passed() const { return violations.empty(); }
};

bool is_two_step_unipotent(const GaloisModule& module, const Automorphism& a);
Lemma4Audit lemma4_audit(const GaloisModule& module, unsigned threads = 1);

/// True iff some s in `subgroup` fixes 2p but moves p, which certifies that p
/// is not almost rational.
bool halving_exclusion(const GaloisModule& module, const ModulePoint& p,
                       std::span<const Automorphism> subgroup);

}  // namespace artlab
