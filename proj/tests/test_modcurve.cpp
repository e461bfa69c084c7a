#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "artlab/errors.hpp"
#include "artlab/modcurve.hpp"
#include "oracles.hpp"

using namespace artlab;

namespace {

// 1 + (N+1)/12 - nu2/4 - nu3/3 - 1, with nu counted by solving x^2 + 1 = 0
// and x^2 + x + 1 = 0 mod N directly.
std::uint64_t genus_by_counting(std::uint64_t N) {
  std::int64_t nu2 = 0, nu3 = 0;
  for (std::uint64_t x = 0; x < N; ++x) {
    nu2 += (x * x + 1) % N == 0;
    nu3 += (x * x + x + 1) % N == 0;
  }
  const std::int64_t twelve_g = static_cast<std::int64_t>(N + 1) - 3 * nu2 - 4 * nu3;
  return static_cast<std::uint64_t>(twelve_g / 12);
}

}  // namespace

TEST_CASE("eisenstein number") {
  CHECK(eisenstein_number(23) == 11);
  CHECK(eisenstein_number(37) == 3);
  CHECK(eisenstein_number(73) == 6);
  CHECK(eisenstein_number(2) == 1);
  CHECK_THROWS_AS(eisenstein_number(24), InvalidInput);
}

TEST_CASE("genus of X0(N)") {
  CHECK(genus_x0(23) == 2);
  CHECK(genus_x0(41) == 3);
  CHECK(genus_x0(71) == 6);
  CHECK(genus_x0(2) == 0);
  CHECK(genus_x0(3) == 0);
  CHECK(genus_x0(11) == 1);
  CHECK_THROWS_AS(genus_x0(1), InvalidInput);
  for (std::uint64_t N = 5; N <= 2000; ++N) {
    if (oracle::prime(N)) REQUIRE_MESSAGE(genus_x0(N) == genus_by_counting(N), "N=" << N);
  }
}

TEST_CASE("level invariants") {
  const auto l37 = level_invariants(37);
  CHECK(l37.n == 3);
  CHECK(l37.genus == 2);
  CHECK(l37.hyperelliptic);
  CHECK_FALSE(l37.plus_quotient_genus_zero);
  CHECK(l37.N_mod_9 == 1);
  CHECK(l37.three_divides_n);

  const auto l23 = level_invariants(23);
  CHECK(l23.n == 11);
  CHECK(l23.genus == 2);
  CHECK(l23.hyperelliptic);
  CHECK(l23.plus_quotient_genus_zero);
  CHECK(l23.N_mod_9 == 5);
  CHECK_FALSE(l23.three_divides_n);

  const auto l53 = level_invariants(53);
  CHECK(l53.n == 13);
  CHECK(l53.genus == 4);
  CHECK_FALSE(l53.hyperelliptic);

  CHECK_THROWS_AS(level_invariants(24), InvalidInput);
}

TEST_CASE("Ogg table is consistent with the genus formula") {
  std::vector<std::uint64_t> genera;
  for (auto N : kOggLevels) {
    const auto inv = level_invariants(N);
    CHECK(inv.genus >= 2);
    CHECK(inv.plus_quotient_genus_zero == (N != 37));
    genera.push_back(inv.genus);
  }
  CHECK(genera == std::vector<std::uint64_t>{2, 2, 2, 2, 3, 4, 5, 6});
  for (std::uint64_t N = 2; N <= 500; ++N) {
    if (!oracle::prime(N)) continue;
    const auto inv = level_invariants(N);
    if (inv.plus_quotient_genus_zero) CHECK(inv.hyperelliptic);
  }
}

TEST_CASE("eisenstein models") {
  const auto m23 = eisenstein_model(23);
  CHECK(m23.n_odd);
  CHECK(m23.module.point_count() == 121);
  CHECK(m23.module.closure().size() == 10);

  const auto m73 = eisenstein_model(73);
  CHECK_FALSE(m73.n_odd);
  CHECK(m73.module.point_count() == 18);

  const auto m41 = eisenstein_model(41);
  CHECK(m41.module.point_count() == 50);

  CHECK_THROWS_AS(eisenstein_model(19), InvalidInput);
  CHECK_THROWS_AS(eisenstein_model(25), InvalidInput);
}

TEST_CASE("model sizes and fusion of 2-torsion") {
  for (std::uint64_t N = 23; N <= 400; ++N) {
    if (!oracle::prime(N)) continue;
    const auto model = eisenstein_model(N);
    const std::uint64_t n = model.n;
    CHECK(model.module.point_count() == (n % 2 ? n * n : n * n / 2));
    const auto c = subgroup_generated(model.module, {model.cuspidal_generator});
    const auto s = subgroup_generated(model.module, {model.shimura_generator});
    CHECK(c.size() == n);
    CHECK(s.size() == n);
    std::vector<ModulePoint> both;
    std::set_intersection(c.begin(), c.end(), s.begin(), s.end(), std::back_inserter(both));
    CHECK(both.size() == (n % 2 ? 1u : 2u));
    // expected subgroup is Galois-stable
    for (const auto& g : model.module.generators())
      for (const auto& p : model.expected)
        CHECK(std::binary_search(model.expected.begin(), model.expected.end(), model.module.apply(g, p)));
  }
}

TEST_CASE("theorem 3 spot values") {
  const auto r23 = theorem3_check(23);
  CHECK(r23.ar_points.size() == 11);
  CHECK(r23.verdict == Verdict::kPass);
  const auto r37 = theorem3_check(37);
  CHECK(r37.ar_points.size() == 9);
  CHECK(r37.total_points == 9);
  CHECK(r37.verdict == Verdict::kPass);
  const auto r41 = theorem3_check(41);
  CHECK(r41.ar_points.size() == 10);
  CHECK(r41.verdict == Verdict::kPass);
  const auto r73 = theorem3_check(73);
  CHECK(r73.ar_points.size() == 18);
  CHECK(r73.verdict == Verdict::kPass);
}

TEST_CASE("survey") {
  const auto records = survey(23, 100);
  CHECK(records.size() == 17);
  CHECK(std::is_sorted(records.begin(), records.end(),
                       [](const auto& a, const auto& b) { return a.level.N < b.level.N; }));
  CHECK(summarize(records).passed == 17);
  CHECK(survey(23, 23).size() == 1);
  CHECK(survey(23, 22).empty());
  CHECK_THROWS_AS(survey(11, 30), InvalidInput);
  for (const auto& r : records) {
    if (r.level.plus_quotient_genus_zero) CHECK_FALSE(r.level.three_divides_n);
  }
  const auto parallel = survey(23, 200, {}, 8);
  const auto serial = survey(23, 200, {}, 1);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(parallel[i].report.ar_points == serial[i].report.ar_points);
}
