#include "artlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace artlab {

namespace {

std::string point_text(const ModulePoint& p) {
  if (p.coords.size() == 1) return std::to_string(p.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.coords[i]);
  }
  return s + ")";
}

std::string join_points(const std::vector<ModulePoint>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += point_text(pts[i]);
  }
  return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

Json optional_residue(const std::optional<Residue>& r) { return r ? Json(*r) : Json(nullptr); }

std::string line(const Json& j) { return j.dump() + "\n"; }

// Two-column key/value block.
class Table {
 public:
  Table& row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    return *this;
  }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string ms_text(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

}  // namespace

Json to_json(const ModulePoint& p) { return Json(p.coords); }

Json to_json(const ARTReport& r, bool timing) {
  Json j;
  j["name"] = r.name;
  j["points"] = r.total_points;
  j["ar_points"] = Json::array();
  for (const auto& p : r.ar_points) j["ar_points"].push_back(to_json(p));
  if (r.expected) {
    j["expected"] = Json::array();
    for (const auto& p : *r.expected) j["expected"].push_back(to_json(p));
  } else {
    j["expected"] = nullptr;
  }
  j["verdict"] = to_string(r.verdict);
  j["ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
  return j;
}

Json to_json(const Lemma2Report& r) {
  Json j;
  j["e"] = r.e;
  j["max"] = r.scanned_max;
  j["failures"] = r.failures;
  if (!r.witnesses.empty()) {
    Json w = Json::array();
    for (const auto& [m, pw] : r.witnesses) w.push_back(to_json(pw));
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const LevelInvariants& inv) {
  Json j;
  j["N"] = inv.N;
  j["n"] = inv.n;
  j["genus"] = inv.genus;
  j["hyperelliptic"] = inv.hyperelliptic;
  j["plus_genus_zero"] = inv.plus_quotient_genus_zero;
  j["N_mod_9"] = inv.N_mod_9;
  j["three_div_n"] = inv.three_divides_n;
  return j;
}

Json to_json(const SurveyRecord& rec, bool timing) {
  Json j = to_json(rec.level);
  j["side_ok"] = rec.side_condition_ok;
  j["verdict"] = rec.passed() ? "pass" : "fail";
  j["report"] = to_json(rec.report, timing);
  return j;
}

Json to_json(const Lemma4Audit& audit) {
  Json j;
  j["unipotent"] = audit.unipotent.size();
  j["ar_checked"] = audit.ar_points_checked;
  j["violations"] = Json::array();
  for (const auto& v : audit.violations) {
    j["violations"].push_back(Json{{"sigma", v.sigma.entries}, {"point", v.point.coords}});
  }
  j["verdict"] = audit.passed() ? "pass" : "fail";
  return j;
}

Json to_json(const PairWitness& w) {
  Json j;
  j["m"] = w.m();
  j["e"] = w.e();
  j["x"] = w.x();
  j["y"] = w.y();
  j["u"] = optional_residue(w.u());
  j["v"] = optional_residue(w.v());
  return j;
}

Json to_json(const PrimePowerResult& r) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["e"] = r.e;
  j["modulus"] = r.modulus;
  j["k"] = r.k;
  j["candidate_x"] = r.candidate_defined ? Json(r.candidate_x) : Json(nullptr);
  j["candidate_y"] = r.candidate_defined ? Json(r.candidate_y) : Json(nullptr);
  j["candidate_valid"] = r.candidate_valid;
  j["identity_x"] = r.identity_x_holds;
  j["identity_y"] = r.identity_y_holds;
  j["fallback"] = r.fallback_used;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const WeilThreshold& w) {
  Json j;
  j["e"] = w.e;
  j["bound"] = w.bound;
  j["largest"] = w.largest ? Json(*w.largest) : Json(nullptr);
  j["primes"] = w.primes;
  j["weil_cutoff"] = w.weil_cutoff ? Json(*w.weil_cutoff) : Json(nullptr);
  return j;
}

std::string emit_report(const ARTReport& r, const OutputOptions& opt) {
  if (opt.json) return line(to_json(r, opt.timing));
  Table t;
  t.row("module", r.name).row("points", std::to_string(r.total_points));
  t.row("ar count", std::to_string(r.ar_points.size())).row("ar points", join_points(r.ar_points));
  if (r.expected) t.row("expected", join_points(*r.expected));
  t.row("verdict", to_string(r.verdict));
  if (opt.timing) t.row("ms", ms_text(r.elapsed_ms));
  return t.str();
}

std::string emit_report(const Lemma2Report& r, const OutputOptions& opt) {
  if (opt.json) return line(to_json(r));
  Table t;
  t.row("e", std::to_string(r.e)).row("scanned up to", std::to_string(r.scanned_max));
  t.row("failures", join_ints(r.failures));
  t.row("empirical C(e)", r.failures.empty() ? "-" : std::to_string(r.failures.back()));
  for (const auto& [m, w] : r.witnesses) {
    t.row("m=" + std::to_string(m), "x=" + std::to_string(w.x()) + " y=" + std::to_string(w.y()));
  }
  return t.str();
}

std::string emit_report(const LevelInvariants& inv, const OutputOptions& opt) {
  if (opt.json) return line(to_json(inv));
  Table t;
  t.row("N", std::to_string(inv.N)).row("n", std::to_string(inv.n)).row("genus", std::to_string(inv.genus));
  t.row("hyperelliptic", yes_no(inv.hyperelliptic)).row("X0(N)+ genus 0", yes_no(inv.plus_quotient_genus_zero));
  t.row("N mod 9", std::to_string(inv.N_mod_9)).row("3 | n", yes_no(inv.three_divides_n));
  return t.str();
}

std::string emit_report(const std::vector<SurveyRecord>& records, const OutputOptions& opt) {
  if (records.empty()) return {};
  std::string out;
  if (opt.json) {
    for (const auto& rec : records) out += line(to_json(rec, opt.timing));
    return out;
  }
  std::ostringstream s;
  s << std::right << std::setw(6) << "N" << std::setw(6) << "n" << std::setw(7) << "genus" << std::setw(5)
    << "hyp" << std::setw(7) << "plus0" << std::setw(6) << "N%9" << std::setw(5) << "3|n" << std::setw(8)
    << "points" << std::setw(5) << "ar" << std::setw(9) << "verdict";
  if (opt.timing) s << std::setw(10) << "ms";
  s << "\n";
  for (const auto& rec : records) {
    const auto& l = rec.level;
    s << std::setw(6) << l.N << std::setw(6) << l.n << std::setw(7) << l.genus << std::setw(5)
      << yes_no(l.hyperelliptic) << std::setw(7) << yes_no(l.plus_quotient_genus_zero) << std::setw(6) << l.N_mod_9
      << std::setw(5) << yes_no(l.three_divides_n) << std::setw(8) << rec.report.total_points << std::setw(5)
      << rec.report.ar_points.size() << std::setw(9) << (rec.passed() ? "pass" : "fail");
    if (opt.timing) s << std::setw(10) << ms_text(rec.report.elapsed_ms);
    s << "\n";
  }
  const auto sum = summarize(records);
  s << "levels " << records.size() << ", pass " << sum.passed << ", fail " << sum.failed << "\n";
  return s.str();
}

std::string emit_report(const Lemma4Audit& audit, const OutputOptions& opt) {
  if (opt.json) return line(Json{{"lemma4_audit", to_json(audit)}});
  Table t;
  t.row("unipotent elements", std::to_string(audit.unipotent.size()));
  t.row("ar points checked", std::to_string(audit.ar_points_checked));
  t.row("violations", std::to_string(audit.violations.size()));
  t.row("audit", audit.passed() ? "pass" : "fail");
  return t.str();
}

std::string emit_pair(std::uint64_t m, std::uint64_t e, const std::optional<PairWitness>& w,
                      const OutputOptions& opt) {
  if (opt.json) {
    Json j;
    j["m"] = m;
    j["e"] = e;
    j["found"] = w.has_value();
    j["x"] = w ? Json(w->x()) : Json(nullptr);
    j["y"] = w ? Json(w->y()) : Json(nullptr);
    j["u"] = w ? optional_residue(w->u()) : Json(nullptr);
    j["v"] = w ? optional_residue(w->v()) : Json(nullptr);
    return line(j);
  }
  Table t;
  t.row("m", std::to_string(m)).row("e", std::to_string(e));
  if (!w) return t.row("pair", "none").str();
  t.row("x", std::to_string(w->x()) + (w->u() ? " = " + std::to_string(*w->u()) + "^e" : ""));
  t.row("y", std::to_string(w->y()) + (w->v() ? " = " + std::to_string(*w->v()) + "^e" : ""));
  return t.str();
}

std::string emit_report(const PrimePowerResult& r, const OutputOptions& opt) {
  if (opt.json) return line(to_json(r));
  Table t;
  t.row("modulus", std::to_string(r.p) + "^" + std::to_string(r.n) + " = " + std::to_string(r.modulus));
  t.row("e", std::to_string(r.e) + " (k=" + std::to_string(r.k) + ")");
  if (r.candidate_defined) {
    t.row("candidate", "x=" + std::to_string(r.candidate_x) + " y=" + std::to_string(r.candidate_y));
  } else {
    t.row("candidate", "undefined (k >= n)");
  }
  t.row("candidate valid", yes_no(r.candidate_valid));
  t.row("x identity", yes_no(r.identity_x_holds)).row("y identity", yes_no(r.identity_y_holds));
  t.row("fallback scan", yes_no(r.fallback_used));
  t.row("witness", r.witness ? "x=" + std::to_string(r.witness->x()) + " y=" + std::to_string(r.witness->y()) : "none");
  return t.str();
}

std::string emit_count(std::uint64_t e, std::uint64_t p, std::uint64_t count, const OutputOptions& opt) {
  if (opt.json) return line(Json{{"e", e}, {"p", p}, {"count", count}});
  return Table().row("e", std::to_string(e)).row("p", std::to_string(p)).row("count", std::to_string(count)).str();
}

std::string emit_report(const WeilThreshold& w, const OutputOptions& opt) {
  if (opt.json) return line(to_json(w));
  Table t;
  t.row("e", std::to_string(w.e)).row("bound", std::to_string(w.bound));
  t.row("largest", w.largest ? std::to_string(*w.largest) : "-").row("primes", join_ints(w.primes));
  if (w.weil_cutoff) t.row("weil cutoff", std::to_string(*w.weil_cutoff));
  return t.str();
}

}  // namespace artlab
