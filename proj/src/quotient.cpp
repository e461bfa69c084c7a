// Quotients of finite abelian groups via Smith normal form of the relation
// lattice, with the Galois action carried into the new basis.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "artlab/errors.hpp"
#include "artlab/galmod.hpp"

namespace artlab {

namespace {

using Wide = __int128;
using WideMatrix = std::vector<std::vector<Wide>>;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide floor_mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

std::string point_text(const ModulePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.coords[i]);
  }
  return s + ")";
}

// Row reduction of R (rows x cols) to diagonal form D = U R V. Only the row
// transform U and its inverse are tracked, since column operations do not
// change the quotient coordinates.
struct SmithForm {
  std::vector<Wide> diagonal;
  WideMatrix u;
  WideMatrix u_inv;
};

SmithForm smith_normal_form(WideMatrix r) {
  const std::size_t rows = r.size();
  const std::size_t cols = rows ? r[0].size() : 0;
  SmithForm out;
  out.u.assign(rows, std::vector<Wide>(rows, 0));
  out.u_inv.assign(rows, std::vector<Wide>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) out.u[i][i] = out.u_inv[i][i] = 1;

  // U <- E U and U^-1 <- U^-1 E^-1 for each elementary row operation E.
  auto row_add = [&](std::size_t dst, std::size_t src, Wide c) {  // row dst += c * row src
    for (std::size_t j = 0; j < cols; ++j) r[dst][j] += c * r[src][j];
    for (std::size_t j = 0; j < rows; ++j) out.u[dst][j] += c * out.u[src][j];
    for (std::size_t i = 0; i < rows; ++i) out.u_inv[i][src] -= c * out.u_inv[i][dst];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(r[a], r[b]);
    std::swap(out.u[a], out.u[b]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(out.u_inv[i][a], out.u_inv[i][b]);
  };
  auto row_negate = [&](std::size_t a) {
    for (auto& x : r[a]) x = -x;
    for (auto& x : out.u[a]) x = -x;
    for (std::size_t i = 0; i < rows; ++i) out.u_inv[i][a] = -out.u_inv[i][a];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, Wide c) {
    for (std::size_t i = 0; i < rows; ++i) r[i][dst] += c * r[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(r[i][a], r[i][b]);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (r[i][j] != 0 && (pi == rows || wide_abs(r[i][j]) < wide_abs(r[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      row_swap(t, pi);
      col_swap(t, pj);
      if (r[t][t] < 0) row_negate(t);
      const Wide pivot = r[t][t];

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (r[i][t] != 0) {
          const Wide q = r[i][t] / pivot;
          row_add(i, t, -q);
          if (r[i][t] != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (r[t][j] != 0) {
          const Wide q = r[t][j] / pivot;
          col_add(j, t, -q);
          if (r[t][j] != 0) clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility: pivot must divide every remaining entry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (r[i][j] % pivot != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_add(t, bad, 1);
    }
  }
  out.diagonal.assign(rows, 0);
  for (std::size_t t = 0; t < rows && t < cols; ++t) out.diagonal[t] = wide_abs(r[t][t]);
  return out;
}

}  // namespace

ModulePoint Quotient::project(const ModulePoint& p) const {
  std::vector<std::int64_t> coords(projection.size(), 0);
  for (std::size_t i = 0; i < projection.size(); ++i) {
    const std::int64_t d = module.factors()[i];
    Wide acc = 0;
    for (std::size_t j = 0; j < p.coords.size(); ++j) acc += static_cast<Wide>(projection[i][j]) * p.coords[j];
    coords[i] = static_cast<std::int64_t>(floor_mod(acc, d));
  }
  return ModulePoint{std::move(coords)};
}

Quotient quotient_by(const GaloisModule& module, const std::vector<ModulePoint>& sub) {
  const auto members = subgroup_generated(module, sub);
  std::unordered_set<std::uint64_t> in_sub;
  for (const auto& h : members) in_sub.insert(module.index_of(h));
  for (std::size_t g = 0; g < module.generators().size(); ++g) {
    for (const auto& h : sub) {
      const ModulePoint image = module.apply(module.generators()[g], h);
      if (!in_sub.count(module.index_of(image))) {
        throw InvalidInput("quotient_by: subgroup is not Galois-stable: generator " + std::to_string(g + 1) +
                           " maps " + point_text(h) + " to " + point_text(image) + " outside the subgroup");
      }
    }
  }

  const std::size_t k = module.rank();
  WideMatrix relations(k, std::vector<Wide>(k + sub.size(), 0));
  for (std::size_t i = 0; i < k; ++i) relations[i][i] = module.factors()[i];
  for (std::size_t j = 0; j < sub.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) relations[i][k + j] = sub[j].coords[i];
  }
  const SmithForm snf = smith_normal_form(std::move(relations));

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.diagonal[i] != 1) kept.push_back(i);
  }

  ModuleDescription raw;
  raw.name = module.name() + "/<";
  for (std::size_t j = 0; j < sub.size(); ++j) raw.name += (j ? "," : "") + point_text(sub[j]);
  raw.name += ">";

  Quotient q{constant_module(1), {}};
  if (kept.empty()) {
    raw.factors = {1};
    for (std::size_t g = 0; g < module.generators().size(); ++g) raw.galois.push_back({{0}});
    q.projection.push_back(std::vector<std::int64_t>(k, 0));
    q.module = GaloisModule::validate(raw, module.limits());
    return q;
  }

  for (std::size_t i : kept) raw.factors.push_back(static_cast<std::int64_t>(snf.diagonal[i]));
  for (const auto& a : module.generators()) {
    // A' = U A U^-1, restricted to the kept coordinates.
    WideMatrix ua(k, std::vector<Wide>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < k; ++j) ua[i][j] += snf.u[i][l] * a.at(l, j);
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i : kept) {
      const Wide d = snf.diagonal[i];
      std::vector<std::int64_t> row;
      for (std::size_t j : kept) {
        Wide acc = 0;
        for (std::size_t l = 0; l < k; ++l) acc += floor_mod(ua[i][l], d) * snf.u_inv[l][j];
        row.push_back(static_cast<std::int64_t>(floor_mod(acc, d)));
      }
      rows.push_back(std::move(row));
    }
    raw.galois.push_back(std::move(rows));
  }
  for (std::size_t i : kept) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < k; ++j) row.push_back(static_cast<std::int64_t>(floor_mod(snf.u[i][j], snf.diagonal[i])));
    q.projection.push_back(std::move(row));
  }
  q.module = GaloisModule::validate(raw, module.limits());
  return q;
}

}  // namespace artlab
