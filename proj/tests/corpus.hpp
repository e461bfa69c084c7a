#pragma once

// Deterministic corpus of random valid Galois modules plus every named
// constructor, shared by the property suite and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "artlab/errors.hpp"
#include "artlab/galmod.hpp"
#include "artlab/modcurve.hpp"

namespace corpus {

inline constexpr artlab::Limits kCorpusLimits{1000, 10000};

inline std::int64_t random_unit(std::mt19937_64& rng, std::int64_t d) {
  if (d <= 2) return 1;
  while (true) {
    const std::int64_t u = std::uniform_int_distribution<std::int64_t>(1, d - 1)(rng);
    if (std::gcd(u, d) == 1) return u;
  }
}

// Random matrix satisfying the divisibility condition entrywise. Styles:
// 0 dense random, 1 unipotent upper triangular, 2 diagonal units,
// 3 unit diagonal with random off-diagonal part, 4 swap of two equal factors.
inline artlab::ModuleDescription random_description(std::mt19937_64& rng, int serial) {
  const int k = std::uniform_int_distribution<int>(1, 3)(rng);
  static const std::vector<std::int64_t> small = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 1};
  std::vector<std::int64_t> factors;
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    std::int64_t d;
    do {
      if (k == 1) {
        d = std::uniform_int_distribution<std::int64_t>(1, 150)(rng);
      } else if (i > 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        d = factors.back();  // repeated factor, so swaps are possible
      } else {
        d = small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
      }
    } while (count * d > 10000);
    factors.push_back(d);
    count *= d;
  }
  std::shuffle(factors.begin(), factors.end(), rng);

  artlab::ModuleDescription raw;
  raw.name = "random_" + std::to_string(serial);
  raw.factors = factors;
  const int gens = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int g = 0; g < gens; ++g) {
    const int style = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k, 0));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    if (style == 4) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (factors[a] == factors[b]) std::swap(perm[a], perm[b]);
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const std::int64_t di = factors[i], dj = factors[j];
        const std::int64_t step = di / std::gcd(di, dj);
        const std::int64_t choices = di / step;  // multiples of step below di
        const std::int64_t value = step * std::uniform_int_distribution<std::int64_t>(0, choices - 1)(rng);
        switch (style) {
          case 0:
            rows[i][j] = value;
            break;
          case 1:
            rows[i][j] = i == j ? 1 : (i < j ? value : 0);
            break;
          case 2:
            rows[i][j] = i == j ? random_unit(rng, di) : 0;
            break;
          case 3:
            rows[i][j] = i == j ? random_unit(rng, di) : value;
            break;
          default:
            rows[i][j] = perm[i] == j ? 1 : 0;
            break;
        }
      }
    }
    raw.galois.push_back(std::move(rows));
  }
  return raw;
}

/// Valid modules only. At most one in ten has a trivial Galois image.
inline std::vector<artlab::GaloisModule> random_modules(std::size_t want, std::uint64_t seed = 20261019) {
  std::mt19937_64 rng(seed);
  std::vector<artlab::GaloisModule> out;
  std::size_t trivial = 0;
  int serial = 0;
  while (out.size() < want) {
    auto raw = random_description(rng, serial++);
    try {
      auto m = artlab::GaloisModule::validate(raw, kCorpusLimits);
      if (m.closure().size() == 1) {
        if (10 * (trivial + 1) > want) continue;
        ++trivial;
      }
      out.push_back(std::move(m));
    } catch (const artlab::InvalidInput&) {
      // non-invertible draw
    } catch (const artlab::ResourceLimit&) {
    }
  }
  return out;
}

inline std::vector<artlab::GaloisModule> named_modules() {
  using namespace artlab;
  std::vector<GaloisModule> out;
  for (std::int64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 16, 24, 30, 36}) {
    out.push_back(cyclotomic_module(n, corpus::kCorpusLimits));
    out.push_back(constant_module(n, corpus::kCorpusLimits));
  }
  for (std::int64_t m : {2, 5, 8, 9, 16, 21}) {
    for (std::int64_t e : {1, 2, 3}) out.push_back(homothety_module(m, e, m <= 9 ? 2 : 1, kCorpusLimits));
  }
  out.push_back(direct_sum(constant_module(6, kCorpusLimits), cyclotomic_module(6, kCorpusLimits)));
  out.push_back(direct_sum(cyclotomic_module(5, kCorpusLimits), cyclotomic_module(7, kCorpusLimits)));
  for (std::uint64_t N : {23, 37, 41, 73, 97, 109}) out.push_back(eisenstein_model(N, kCorpusLimits).module);
  out.push_back(GaloisModule::validate({"unipotent_9x9", {9, 9}, {{{1, 3}, {0, 1}}}}, kCorpusLimits));
  out.push_back(GaloisModule::validate({"heisenberg_5", {5, 5}, {{{1, 1}, {0, 1}}, {{2, 0}, {0, 1}}}}, kCorpusLimits));
  return out;
}

}  // namespace corpus
