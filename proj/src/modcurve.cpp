#include "artlab/modcurve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "artlab/errors.hpp"
#include "artlab/modarith.hpp"
#include "artlab/parallel.hpp"

namespace artlab {

namespace {

void require_prime(std::uint64_t N, const char* what) {
  if (!is_prime(N)) throw InvalidInput(std::string(what) + ": " + std::to_string(N) + " is not prime");
}

void require_model_level(std::uint64_t N) {
  require_prime(N, "eisenstein_model");
  if (N < 23) throw InvalidInput("eisenstein_model: level " + std::to_string(N) + " is below 23");
}

bool in_ogg_list(std::uint64_t N) { return std::find(kOggLevels.begin(), kOggLevels.end(), N) != kOggLevels.end(); }

}  // namespace

std::uint64_t eisenstein_number(std::uint64_t N) {
  require_prime(N, "eisenstein_number");
  return (N - 1) / std::gcd(N - 1, std::uint64_t{12});
}

std::uint64_t genus_x0(std::uint64_t N) {
  require_prime(N, "genus_x0");
  // Elliptic points of order 2 and 3, two cusps, index N + 1.
  std::int64_t nu2 = 0, nu3 = 0;
  if (N == 2) {
    nu2 = 1;
  } else if (N == 3) {
    nu3 = 1;
  } else {
    nu2 = 1 + jacobi_symbol(-1, N);
    nu3 = 1 + jacobi_symbol(-3, N);
  }
  const std::int64_t twelve_g = 12 + static_cast<std::int64_t>(N + 1) - 3 * nu2 - 4 * nu3 - 12;
  return static_cast<std::uint64_t>(twelve_g / 12);
}

LevelInvariants level_invariants(std::uint64_t N) {
  require_prime(N, "level_invariants");
  LevelInvariants inv;
  inv.N = N;
  inv.n = eisenstein_number(N);
  inv.genus = genus_x0(N);
  inv.hyperelliptic = in_ogg_list(N);
  // N = 37: the hyperelliptic involution is not w_N.
  inv.plus_quotient_genus_zero = inv.hyperelliptic && N != 37;
  inv.N_mod_9 = N % 9;
  inv.three_divides_n = inv.n % 3 == 0;
  return inv;
}

EisensteinModel eisenstein_model(std::uint64_t N, Limits limits) {
  require_model_level(N);
  EisensteinModel model{N, eisenstein_number(N), true, constant_module(1, limits), {}, {}, {}};
  const auto n = static_cast<std::int64_t>(model.n);
  model.n_odd = n % 2 == 1;

  const GaloisModule cusp = constant_module(n, limits);
  const GaloisModule shimura = cyclotomic_module(n, limits);
  std::vector<Automorphism> left(shimura.generators().size(), cusp.identity());
  GaloisModule sum = direct_sum(cusp, shimura, left, shimura.generators());

  const ModulePoint c_gen = sum.make_point({1, 0});
  const ModulePoint s_gen = sum.make_point({0, 1});
  const ModulePoint s3_gen = sum.make_point({0, n % 3 == 0 ? n / 3 : 0});
  const std::string label = "X0(" + std::to_string(N) + ")";

  if (model.n_odd) {
    model.module = sum.with_name(label);
    model.cuspidal_generator = c_gen;
    model.shimura_generator = s_gen;
    model.expected = subgroup_generated(model.module, {c_gen, s3_gen});
  } else {
    const Quotient fused = quotient_by(sum, {sum.make_point({n / 2, n / 2})});
    model.module = fused.module.with_name(label);
    model.cuspidal_generator = fused.project(c_gen);
    model.shimura_generator = fused.project(s_gen);
    model.expected = subgroup_generated(model.module, {model.cuspidal_generator, fused.project(s3_gen)});
  }
  return model;
}

ARTReport theorem3_check(std::uint64_t N, Limits limits, unsigned threads) {
  const EisensteinModel model = eisenstein_model(N, limits);
  return almost_rational_set(model.module, {threads, model.expected});
}

std::vector<SurveyRecord> survey(std::uint64_t from, std::uint64_t to, Limits limits, unsigned threads) {
  if (from < 23) throw InvalidInput("survey: lower bound " + std::to_string(from) + " is below 23");
  std::vector<std::uint64_t> levels;
  for (std::uint64_t N = from; N <= to; ++N) {
    if (is_prime(N)) levels.push_back(N);
  }
  std::vector<SurveyRecord> records(levels.size());
  for_each_chunk(levels.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      SurveyRecord& rec = records[i];
      rec.level = level_invariants(levels[i]);
      rec.report = theorem3_check(levels[i], limits, 1);
      rec.side_condition_ok = !rec.level.plus_quotient_genus_zero || !rec.level.three_divides_n;
    }
  });
  return records;
}

SurveySummary summarize(const std::vector<SurveyRecord>& records) {
  SurveySummary s;
  for (const auto& r : records) (r.passed() ? s.passed : s.failed)++;
  return s;
}

}  // namespace artlab
