#include "artlab/galmod.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "artlab/errors.hpp"
#include "artlab/modarith.hpp"
#include "artlab/parallel.hpp"

namespace artlab {

namespace {

constexpr std::int64_t kMaxFactor = std::int64_t{1} << 31;

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct AutomorphismHash {
  std::size_t operator()(const Automorphism& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : a.entries) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::string matrix_label(std::size_t g) { return "generator " + std::to_string(g + 1); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kNotChecked:
      break;
  }
  return "not-checked";
}

GaloisModule GaloisModule::validate(const ModuleDescription& raw, Limits limits) {
  if (raw.factors.empty()) throw InvalidInput("module '" + raw.name + "': factors must be nonempty");
  GaloisModule m;
  m.name_ = raw.name;
  m.limits_ = limits;
  const std::size_t k = raw.factors.size();
  unsigned __int128 count = 1;
  for (std::int64_t d : raw.factors) {
    if (d < 1) throw InvalidInput("module '" + raw.name + "': factor " + std::to_string(d) + " must be >= 1");
    if (d > kMaxFactor) {
      throw InvalidInput("module '" + raw.name + "': factor " + std::to_string(d) + " exceeds 2^31");
    }
    count *= static_cast<unsigned>(d);
    if (count > (static_cast<unsigned __int128>(1) << 62)) {
      throw ResourceLimit("module '" + raw.name + "': group order overflows");
    }
  }
  m.factors_ = raw.factors;
  m.point_count_ = static_cast<std::uint64_t>(count);

  for (std::size_t g = 0; g < raw.galois.size(); ++g) {
    const auto& rows = raw.galois[g];
    if (rows.size() != k) {
      throw InvalidInput(matrix_label(g) + " has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(k));
    }
    Automorphism a{k, std::vector<std::int64_t>(k * k)};
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != k) {
        throw InvalidInput(matrix_label(g) + " row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " + std::to_string(k));
      }
      const std::int64_t di = m.factors_[i];
      for (std::size_t j = 0; j < k; ++j) {
        const std::int64_t dj = m.factors_[j];
        const std::int64_t need = di / std::gcd(di, dj);
        if (rows[i][j] % need != 0) {
          throw InvalidInput(matrix_label(g) + " entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")=" + std::to_string(rows[i][j]) +
                             " is not divisible by d_i/gcd(d_i,d_j)=" + std::to_string(need));
        }
        a.entries[i * k + j] = mod_floor(rows[i][j], di);
      }
    }
    m.generators_.push_back(std::move(a));
  }

  const auto& elements = m.closure();
  const Automorphism id = m.identity();
  for (std::size_t g = 0; g < m.generators_.size(); ++g) {
    // In a finite monoid an element is invertible iff some power is the identity.
    Automorphism power = m.generators_[g];
    bool invertible = false;
    for (std::size_t step = 0; step <= elements.size(); ++step) {
      if (power == id) {
        invertible = true;
        break;
      }
      power = m.compose(m.generators_[g], power);
    }
    if (!invertible) throw InvalidInput(matrix_label(g) + " is not invertible on the group");
  }
  return m;
}

const std::vector<Automorphism>& GaloisModule::closure() const {
  std::call_once(closure_->once, [this] {
    std::unordered_set<Automorphism, AutomorphismHash> seen;
    std::deque<Automorphism> queue;
    Automorphism id = identity();
    seen.insert(id);
    queue.push_back(std::move(id));
    while (!queue.empty()) {
      Automorphism x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators_) {
        Automorphism y = compose(g, x);
        if (seen.insert(y).second) {
          if (seen.size() > limits_.max_closure) {
            throw ResourceLimit("module '" + name_ + "': Galois closure exceeds " +
                                std::to_string(limits_.max_closure) + " automorphisms");
          }
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<Automorphism> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    closure_->elements = std::move(out);
  });
  return closure_->elements;
}

Automorphism GaloisModule::identity() const {
  const std::size_t k = rank();
  Automorphism a{k, std::vector<std::int64_t>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) a.entries[i * k + i] = factors_[i] == 1 ? 0 : 1;
  return a;
}

Automorphism GaloisModule::compose(const Automorphism& a, const Automorphism& b) const {
  const std::size_t k = rank();
  Automorphism c{k, std::vector<std::int64_t>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t di = factors_[i];
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = (acc + a.at(i, l) * b.at(l, j)) % di;
      c.entries[i * k + j] = acc;
    }
  }
  return c;
}

ModulePoint GaloisModule::apply(const Automorphism& a, const ModulePoint& p) const {
  const std::size_t k = rank();
  ModulePoint out{std::vector<std::int64_t>(k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t di = factors_[i];
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc = (acc + a.at(i, j) * p.coords[j]) % di;
    out.coords[i] = acc;
  }
  return out;
}

ModulePoint GaloisModule::zero() const { return ModulePoint{std::vector<std::int64_t>(rank(), 0)}; }

ModulePoint GaloisModule::add(const ModulePoint& p, const ModulePoint& q) const {
  ModulePoint out = p;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = (p.coords[i] + q.coords[i]) % factors_[i];
  return out;
}

ModulePoint GaloisModule::sub(const ModulePoint& p, const ModulePoint& q) const {
  ModulePoint out = p;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = mod_floor(p.coords[i] - q.coords[i], factors_[i]);
  }
  return out;
}

ModulePoint GaloisModule::negate(const ModulePoint& p) const { return sub(zero(), p); }

ModulePoint GaloisModule::scale(std::int64_t c, const ModulePoint& p) const {
  ModulePoint out = p;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t d = factors_[i];
    out.coords[i] = mod_floor(mod_floor(c, d) * p.coords[i], d);
  }
  return out;
}

std::uint64_t GaloisModule::order(const ModulePoint& p) const {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto d = static_cast<std::uint64_t>(factors_[i]);
    const std::uint64_t oi = d / std::gcd(d, static_cast<std::uint64_t>(p.coords[i]));
    result = std::lcm(result, oi);
  }
  return result;
}

void GaloisModule::check_point(const ModulePoint& p) const {
  if (p.coords.size() != rank()) {
    throw InvalidInput("point has " + std::to_string(p.coords.size()) + " coordinates, module rank is " +
                       std::to_string(rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (p.coords[i] < 0 || p.coords[i] >= factors_[i]) {
      throw InvalidInput("point coordinate " + std::to_string(i + 1) + "=" + std::to_string(p.coords[i]) +
                         " is outside [0, " + std::to_string(factors_[i]) + ")");
    }
  }
}

ModulePoint GaloisModule::make_point(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw InvalidInput("point has " + std::to_string(coords.size()) + " coordinates, module rank is " +
                       std::to_string(rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return ModulePoint{std::move(coords)};
}

std::uint64_t GaloisModule::index_of(const ModulePoint& p) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx = idx * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(p.coords[i]);
  }
  return idx;
}

ModulePoint GaloisModule::point_at(std::uint64_t index) const {
  ModulePoint p{std::vector<std::int64_t>(rank(), 0)};
  for (std::size_t i = rank(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(factors_[i]);
    p.coords[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return p;
}

GaloisModule GaloisModule::with_name(std::string name) const {
  GaloisModule copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Automorphism> galois_closure(const GaloisModule& module) { return module.closure(); }

ModulePoint apply_automorphism(const GaloisModule& module, const Automorphism& a, const ModulePoint& p) {
  return module.apply(a, p);
}

namespace {

// Scratch-buffer form of the difference-set predicate.
bool almost_rational_with(const GaloisModule& module, const std::vector<Automorphism>& closure,
                          const ModulePoint& p, std::vector<std::uint64_t>& diffs) {
  diffs.clear();
  for (const auto& s : closure) diffs.push_back(module.index_of(module.sub(module.apply(s, p), p)));
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  for (std::uint64_t d : diffs) {
    if (d == 0) continue;
    const std::uint64_t neg = module.index_of(module.negate(module.point_at(d)));
    if (std::binary_search(diffs.begin(), diffs.end(), neg)) return false;
  }
  return true;
}

}  // namespace

bool is_almost_rational(const GaloisModule& module, const ModulePoint& p) {
  module.check_point(p);
  std::vector<std::uint64_t> diffs;
  return almost_rational_with(module, module.closure(), p, diffs);
}

bool is_almost_rational_naive(const GaloisModule& module, const ModulePoint& p) {
  module.check_point(p);
  const auto& closure = module.closure();
  for (const auto& s : closure) {
    const ModulePoint sp = module.apply(s, p);
    const ModulePoint lhs = module.sub(sp, p);
    for (const auto& t : closure) {
      const ModulePoint tp = module.apply(t, p);
      if (lhs == module.sub(p, tp) && !(sp == p && tp == p)) return false;
    }
  }
  return true;
}

ARTReport almost_rational_set(const GaloisModule& module, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (module.point_count() > module.limits().max_points) {
    throw ResourceLimit("module '" + module.name() + "' has " + std::to_string(module.point_count()) +
                        " points, above the cap of " + std::to_string(module.limits().max_points));
  }
  const auto& closure = module.closure();
  const std::uint64_t count = module.point_count();
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<ModulePoint>> chunks(threads);
  for_each_chunk(count, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> diffs;
    diffs.reserve(closure.size());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ModulePoint p = module.point_at(idx);
      if (almost_rational_with(module, closure, p, diffs)) chunks[chunk].push_back(std::move(p));
    }
  });

  ARTReport report;
  report.name = module.name();
  report.total_points = count;
  for (auto& c : chunks) {
    for (auto& p : c) report.ar_points.push_back(std::move(p));
  }
  if (options.expected) {
    auto expected = *options.expected;
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    report.verdict = expected == report.ar_points ? Verdict::kPass : Verdict::kFail;
    report.expected = std::move(expected);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::vector<std::vector<std::int64_t>> scalar_matrix(std::int64_t c, std::size_t dim) {
  std::vector<std::vector<std::int64_t>> rows(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = c;
  return rows;
}

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

}  // namespace

GaloisModule cyclotomic_module(std::int64_t n, Limits limits) {
  require_positive(n, "cyclotomic_module: n");
  ModuleDescription raw{"mu_" + std::to_string(n), {n}, {}};
  for (Residue g : unit_group_generators(static_cast<std::uint64_t>(n))) {
    raw.galois.push_back(scalar_matrix(static_cast<std::int64_t>(g), 1));
  }
  return GaloisModule::validate(raw, limits);
}

GaloisModule constant_module(std::int64_t n, Limits limits) {
  require_positive(n, "constant_module: n");
  return GaloisModule::validate({"Z/" + std::to_string(n), {n}, {}}, limits);
}

GaloisModule homothety_module(std::int64_t m, std::int64_t e, std::int64_t dim, Limits limits) {
  require_positive(m, "homothety_module: m");
  require_positive(e, "homothety_module: e");
  require_positive(dim, "homothety_module: dim");
  const auto mu = static_cast<std::uint64_t>(m);
  ModuleDescription raw{"hom_" + std::to_string(m) + "_e" + std::to_string(e) + "_dim" + std::to_string(dim),
                        std::vector<std::int64_t>(static_cast<std::size_t>(dim), m),
                        {}};
  for (Residue u : unit_group_generators(mu)) {
    const auto scalar = static_cast<std::int64_t>(pow_mod(u, static_cast<std::uint64_t>(e), mu));
    raw.galois.push_back(scalar_matrix(scalar, static_cast<std::size_t>(dim)));
  }
  return GaloisModule::validate(raw, limits);
}

GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b, std::span<const Automorphism> left,
                        std::span<const Automorphism> right) {
  if (left.size() != right.size()) {
    throw InvalidInput("direct_sum: generator pairing lengths differ (" + std::to_string(left.size()) +
                       " vs " + std::to_string(right.size()) + ")");
  }
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  ModuleDescription raw;
  raw.name = a.name() + "+" + b.name();
  raw.factors.assign(a.factors().begin(), a.factors().end());
  raw.factors.insert(raw.factors.end(), b.factors().begin(), b.factors().end());
  for (std::size_t g = 0; g < left.size(); ++g) {
    if (left[g].rank != ka || right[g].rank != kb) {
      throw InvalidInput("direct_sum: pairing " + std::to_string(g + 1) + " has the wrong matrix size");
    }
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < ka; ++i)
      for (std::size_t j = 0; j < ka; ++j) rows[i][j] = left[g].at(i, j);
    for (std::size_t i = 0; i < kb; ++i)
      for (std::size_t j = 0; j < kb; ++j) rows[ka + i][ka + j] = right[g].at(i, j);
    raw.galois.push_back(std::move(rows));
  }
  Limits limits = a.limits();
  limits.max_closure = std::min(a.limits().max_closure, b.limits().max_closure);
  limits.max_points = std::min(a.limits().max_points, b.limits().max_points);
  return GaloisModule::validate(raw, limits);
}

GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b) {
  std::vector<Automorphism> left, right;
  for (const auto& g : a.generators()) {
    left.push_back(g);
    right.push_back(b.identity());
  }
  for (const auto& g : b.generators()) {
    left.push_back(a.identity());
    right.push_back(g);
  }
  return direct_sum(a, b, left, right);
}

std::vector<ModulePoint> subgroup_generated(const GaloisModule& module, const std::vector<ModulePoint>& gens) {
  for (const auto& g : gens) module.check_point(g);
  std::unordered_set<std::uint64_t> seen{module.index_of(module.zero())};
  std::deque<ModulePoint> queue{module.zero()};
  while (!queue.empty()) {
    ModulePoint x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModulePoint y = module.add(x, g);
      if (seen.insert(module.index_of(y)).second) queue.push_back(std::move(y));
    }
  }
  std::vector<std::uint64_t> idx(seen.begin(), seen.end());
  std::sort(idx.begin(), idx.end());
  std::vector<ModulePoint> out;
  out.reserve(idx.size());
  for (std::uint64_t i : idx) out.push_back(module.point_at(i));
  return out;
}

std::vector<ModulePoint> fixed_points(const GaloisModule& module) {
  if (module.point_count() > module.limits().max_points) {
    throw ResourceLimit("module '" + module.name() + "' exceeds the point cap");
  }
  std::vector<ModulePoint> out;
  for (std::uint64_t idx = 0; idx < module.point_count(); ++idx) {
    ModulePoint p = module.point_at(idx);
    const bool fixed = std::all_of(module.generators().begin(), module.generators().end(),
                                   [&](const Automorphism& g) { return module.apply(g, p) == p; });
    if (fixed) out.push_back(std::move(p));
  }
  return out;
}

bool is_two_step_unipotent(const GaloisModule& module, const Automorphism& a) {
  Automorphism shifted = a;
  const std::size_t k = module.rank();
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = module.factors()[i];
    shifted.entries[i * k + i] = mod_floor(shifted.entries[i * k + i] - 1, d);
  }
  const Automorphism square = module.compose(shifted, shifted);
  return std::all_of(square.entries.begin(), square.entries.end(), [](std::int64_t x) { return x == 0; });
}

Lemma4Audit lemma4_audit(const GaloisModule& module, unsigned threads) {
  Lemma4Audit audit;
  for (const auto& s : module.closure()) {
    if (is_two_step_unipotent(module, s)) audit.unipotent.push_back(s);
  }
  const ARTReport ar = almost_rational_set(module, {threads, std::nullopt});
  audit.ar_points_checked = ar.ar_points.size();
  for (const auto& s : audit.unipotent) {
    for (const auto& p : ar.ar_points) {
      if (!(module.apply(s, p) == p)) audit.violations.push_back({s, p});
    }
  }
  return audit;
}

bool halving_exclusion(const GaloisModule& module, const ModulePoint& p, std::span<const Automorphism> subgroup) {
  module.check_point(p);
  const ModulePoint twice = module.scale(2, p);
  return std::any_of(subgroup.begin(), subgroup.end(), [&](const Automorphism& s) {
    return module.apply(s, twice) == twice && !(module.apply(s, p) == p);
  });
}

}  // namespace artlab
