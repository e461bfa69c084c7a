// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "artlab/lemma2.hpp"
#include "artlab/modcurve.hpp"
#include "checks.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace artlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

Outcome from_violations(const std::vector<std::string>& v, const std::string& ok_detail) {
  if (v.empty()) return {true, ok_detail};
  return {false, std::to_string(v.size()) + " violations, first: " + v.front()};
}

Outcome theorem3_range() {
  const auto t0 = Clock::now();
  std::size_t levels = 0;
  std::vector<std::string> failed;
  for (std::uint64_t N = 23; N <= 300; ++N) {
    if (!is_prime(N)) continue;
    ++levels;
    if (theorem3_check(N).verdict != Verdict::kPass) failed.push_back(std::to_string(N));
  }
  const double s = seconds_since(t0);
  Outcome o{failed.empty() && s < 10.0, std::to_string(levels) + " levels, " + fmt_seconds(s) + " (limit 10 s)"};
  if (!failed.empty()) o.detail += ", failing N=" + failed.front();
  return o;
}

Outcome spot_values() {
  const std::vector<std::pair<std::uint64_t, std::size_t>> want = {{23, 11}, {37, 9}, {41, 10}, {73, 18}};
  std::string detail;
  bool ok = true;
  for (const auto& [N, count] : want) {
    const auto r = theorem3_check(N);
    ok = ok && r.ar_points.size() == count && r.verdict == Verdict::kPass;
    detail += "N=" + std::to_string(N) + ":" + std::to_string(r.ar_points.size()) + " ";
  }
  return {ok, detail};
}

Outcome lemma2_constants() {
  const auto t0 = Clock::now();
  ScanOptions opt;
  opt.threads = 4;
  const auto e1 = failure_scan(1, 100'000, opt).failures;
  const auto e2 = failure_scan(2, 17).failures;
  const double s = seconds_since(t0);
  const bool ok1 = e1 == std::vector<std::uint64_t>{1, 2, 3, 6};
  const bool ok2 = e2 == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15};
  std::string d = "C(1) empirical = " + (e1.empty() ? std::string("-") : std::to_string(e1.back())) +
                  " (m=6 has no pair), e=2 failures " + std::to_string(e2.size()) + ", " + fmt_seconds(s) +
                  " (limit 5 s)";
  return {ok1 && ok2 && s < 5.0, d};
}

Outcome cyclotomic_model() {
  const auto t0 = Clock::now();
  auto v = checks::cyclotomic_closed_form(200);
  const auto mu3 = almost_rational_set(cyclotomic_module(3));
  if (mu3.ar_points.size() != 3) v.push_back("mu_3 not entirely a.r.");
  for (std::int64_t n = 7; n <= 200; ++n) {
    if (is_almost_rational(cyclotomic_module(n), ModulePoint{{1}})) v.push_back("order " + std::to_string(n) + " point a.r.");
  }
  const double s = seconds_since(t0);
  Outcome o = from_violations(v, "n <= 200, " + fmt_seconds(s) + " (limit 5 s)");
  o.pass = o.pass && s < 5.0;
  return o;
}

const std::vector<GaloisModule>& criterion5_corpus() {
  static const auto modules = [] {
    auto m = corpus::random_modules(200);
    const auto named = corpus::named_modules();
    m.insert(m.end(), named.begin(), named.end());
    return m;
  }();
  return modules;
}

Outcome oracle_equivalence() {
  std::vector<std::string> v;
  std::size_t random = 0;
  for (const auto& m : criterion5_corpus()) {
    if (m.name().rfind("random_", 0) == 0) {
      ++random;
      if (m.point_count() > 10000 || m.closure().size() > 1000) v.push_back(m.name() + " outside corpus bounds");
    }
    auto bad = checks::oracle_equivalence(m);
    v.insert(v.end(), bad.begin(), bad.end());
  }
  return from_violations(v, std::to_string(random) + " random + " +
                                std::to_string(criterion5_corpus().size() - random) + " named modules, 0 disagreements");
}

Outcome elementary_facts() {
  std::vector<std::string> v;
  for (const auto& m : criterion5_corpus()) {
    auto bad = checks::elementary_facts(m);
    v.insert(v.end(), bad.begin(), bad.end());
  }
  return from_violations(v, std::to_string(criterion5_corpus().size()) + " modules");
}

Outcome homothety_bridge() {
  return from_violations(checks::homothety_bridge(300, {1, 2, 3}), "m <= 300, e in {1,2,3}");
}

Outcome level_facts() {
  std::vector<std::string> v;
  for (std::uint64_t N = 2; N <= 10'000; ++N) {
    if (!is_prime(N)) continue;
    if ((eisenstein_number(N) % 3 == 0) != (N % 9 == 1)) v.push_back("congruence fails at N=" + std::to_string(N));
    if (N <= 500 && ((genus_x0(N) >= 2) != (N >= 23))) v.push_back("genus gate fails at N=" + std::to_string(N));
  }
  for (std::uint64_t N : {23, 29, 31, 41, 47, 59, 71}) {
    if (eisenstein_number(N) % 3 == 0) v.push_back("3 | n at N=" + std::to_string(N));
  }
  if (eisenstein_number(23) != 11 || eisenstein_number(37) != 3 || eisenstein_number(73) != 6) {
    v.push_back("n(23), n(37), n(73) spot values");
  }
  return from_violations(v, "primes <= 10^4");
}

Outcome fermat_counts() {
  std::vector<std::string> v;
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t e = 1; e <= 5; ++e) {
      if (count_fermat_points(e, p) != oracle::fermat_count_quadratic(e, p)) {
        v.push_back("count mismatch e=" + std::to_string(e) + " p=" + std::to_string(p));
      }
    }
  }
  const auto w = weil_threshold_prime(2, 100);
  if (w.largest != 7) v.push_back("weil_threshold_prime(2, 100) != 7");
  return from_violations(v, "p <= 100, e <= 5; threshold(2,100) = 7");
}

std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string cmd = std::string(ARTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("artlab_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto module_file = dir / "module.json";
  std::ofstream(module_file) << R"({"name":"heis","factors":[6,6,3],"galois":[[[1,2,0],[0,1,0],[0,0,2]],[[5,0,0],[0,5,0],[0,0,1]]]})";

  const std::vector<std::string> commands = {
      "analyze " + module_file.string(),
      "mu 11",
      "mu 120",
      "lemma2 scan --e 1 --max 20000",
      "lemma2 scan --e 3 --max 5000 --witnesses",
      "lemma2 pair --m 16 --e 2",
      "lemma2 count --e 3 --p 7",
      "lemma2 witness --p 3 --n 2 --e 3",
      "lemma2 threshold --e 3 --bound 200",
      "level 37",
      "theorem3 73",
      "survey --from 23 --to 300",
      "homothety --m 21 --e 2 --dim 2",
  };
  std::vector<std::string> v;
  for (const auto& c : commands) {
    for (const char* mode : {"", " --json"}) {
      const std::string base = c + mode;
      const auto a = run_cli(base + " --threads 1");
      const auto b = run_cli(base + " --threads 1");
      const auto c8 = run_cli(base + " --threads 8");
      if (a.second != 0) v.push_back("'" + base + "' exited " + std::to_string(a.second));
      if (a != b) v.push_back("'" + base + "' differs between runs");
      if (a != c8) v.push_back("'" + base + "' differs between 1 and 8 threads");
    }
  }
  std::filesystem::remove_all(dir);
  return from_violations(v, std::to_string(commands.size() * 2) + " command lines x 3 runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 theorem3 model reproduction, primes 23..300", theorem3_range},
      {"2 theorem3 spot values 23/37/41/73", spot_values},
      {"3 lemma2 empirical constants", lemma2_constants},
      {"4 cyclotomic a.r. sets, n <= 200", cyclotomic_model},
      {"5 oracle equivalence on random corpus", oracle_equivalence},
      {"6 elementary-fact property suite", elementary_facts},
      {"7 homothety / unit-pair bridge", homothety_bridge},
      {"8 level-invariant facts", level_facts},
      {"9 fermat counts and threshold", fermat_counts},
      {"10 CLI determinism", determinism},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << label << " -- " << o.detail << " [" << fmt_seconds(seconds_since(t0))
              << "]\n"
              << std::flush;
    failures += !o.pass;
  }
  std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) + " criteria\n" : "acceptance: all criteria pass\n");
  return failures ? 1 : 0;
}
