#include "artlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "artlab/cache.hpp"
#include "artlab/errors.hpp"
#include "artlab/lemma2.hpp"
#include "artlab/modcurve.hpp"
#include "artlab/report.hpp"

namespace artlab {

ModuleDescription parse_module_description(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ModuleDescription raw;
    raw.name = j.value("name", std::string("module"));
    raw.factors = j.at("factors").get<std::vector<std::int64_t>>();
    if (j.contains("galois")) raw.galois = j.at("galois").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    return raw;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed module description: ") + e.what());
  }
}

ModuleDescription load_module_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open module file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_module_description(buf.str());
}

namespace {

struct GlobalFlags {
  bool json = false;
  bool timing = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
  std::size_t max_closure = Limits{}.max_closure;
  std::uint64_t max_points = Limits{}.max_points;

  Limits limits() const { return {max_closure, max_points}; }
  OutputOptions output() const { return {json, timing}; }
  // Everything that can change output bytes; the thread count cannot.
  std::string key_suffix() const {
    return " json=" + std::to_string(json) + " timing=" + std::to_string(timing) +
           " max_closure=" + std::to_string(max_closure) + " max_points=" + std::to_string(max_points);
  }
};

using Outcome = std::pair<std::string, int>;

int verdict_code(Verdict v) { return v == Verdict::kFail ? kExitCheckFailed : kExitOk; }

const CLI::Validator kPositive(
    [](std::string& s) -> std::string {
      std::int64_t v = 0;
      if (!CLI::detail::lexical_cast(s, v) || v < 1) return "expected a positive integer, got " + s;
      return {};
    },
    "POSITIVE");

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost rational torsion points on finite Galois modules", "artlab"};
  app.require_subcommand(1, 1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON lines");
  app.add_flag("--timing", g.timing, "Report elapsed milliseconds (nondeterministic)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default: $ARTLAB_CACHE_DIR)");
  app.add_option("--max-closure", g.max_closure, "Cap on Galois closure size")->check(kPositive);
  app.add_option("--max-points", g.max_points, "Cap on enumerated points")->check(kPositive);

  // Each subcommand fills `key` and `run` during parsing callbacks.
  std::string key;
  std::function<Outcome()> run;

  auto* analyze = app.add_subcommand("analyze", "Almost rational set and unipotent audit of a module file");
  std::string module_path;
  analyze->add_option("module-file", module_path)->required()->check(CLI::ExistingFile);

  auto* mu = app.add_subcommand("mu", "Almost rational points of the cyclotomic module mu_n");
  std::int64_t mu_n = 0;
  mu->add_option("n", mu_n)->required()->check(kPositive);

  auto* lemma2 = app.add_subcommand("lemma2", "Unit pairs x + y = 2 among e-th power units");
  lemma2->require_subcommand(1, 1);
  std::uint64_t l2_e = 1, l2_max = 100, l2_m = 0, l2_p = 0, l2_bound = 100;
  unsigned l2_n = 2;
  bool l2_witnesses = false;
  auto* scan = lemma2->add_subcommand("scan", "Failure set for m <= max");
  scan->add_option("--e", l2_e)->check(kPositive);
  scan->add_option("--max", l2_max)->check(kPositive);
  scan->add_flag("--witnesses", l2_witnesses, "Include a witness for every success");
  auto* pair = lemma2->add_subcommand("pair", "Smallest pair for one modulus");
  pair->add_option("--m", l2_m)->required()->check(kPositive);
  pair->add_option("--e", l2_e)->check(kPositive);
  auto* count = lemma2->add_subcommand("count", "Points on x^e + y^e = 2 over F_p");
  count->add_option("--e", l2_e)->check(kPositive);
  count->add_option("--p", l2_p)->required();
  auto* witness = lemma2->add_subcommand("witness", "Explicit prime-power construction");
  witness->add_option("--p", l2_p)->required();
  witness->add_option("--n", l2_n)->required();
  witness->add_option("--e", l2_e)->check(kPositive);
  auto* threshold = lemma2->add_subcommand("threshold", "Primes with at most e^2 + 2e Fermat points");
  threshold->add_option("--e", l2_e)->check(kPositive);
  threshold->add_option("--bound", l2_bound)->check(CLI::Range(std::uint64_t{2}, kMaxFermatPrime));

  auto* level = app.add_subcommand("level", "Invariants of X_0(N) for prime N");
  std::uint64_t level_N = 0;
  level->add_option("N", level_N)->required();

  auto* theorem3 = app.add_subcommand("theorem3", "Check a.r.t. = C + Sigma[3] on the Eisenstein model");
  std::uint64_t t3_N = 0;
  theorem3->add_option("N", t3_N)->required();

  auto* surv = app.add_subcommand("survey", "Level invariants and theorem3 over a range of primes");
  std::uint64_t from = 23, to = 100;
  surv->add_option("--from", from)->required();
  surv->add_option("--to", to)->required();

  auto* homothety = app.add_subcommand("homothety", "Almost rational points under e-th power homotheties");
  std::int64_t h_m = 0, h_e = 1, h_dim = 1;
  homothety->add_option("--m", h_m)->required()->check(kPositive);
  homothety->add_option("--e", h_e)->check(kPositive);
  homothety->add_option("--dim", h_dim)->check(kPositive);

  for (auto* sub : {analyze, mu, lemma2, scan, pair, count, witness, threshold, level, theorem3, surv, homothety}) {
    sub->fallthrough();
  }

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  const OutputOptions opt = g.output();
  const Limits limits = g.limits();
  const unsigned threads = g.threads;

  if (analyze->parsed()) {
    // The file contents, not the path, identify the computation.
    std::ifstream in(module_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    key = "analyze " + text;
    run = [&, text] {
      const GaloisModule module = GaloisModule::validate(parse_module_description(text), limits);
      const ARTReport report = almost_rational_set(module, {threads, std::nullopt});
      const Lemma4Audit audit = lemma4_audit(module, threads);
      return Outcome{emit_report(report, opt) + emit_report(audit, opt),
                     audit.passed() ? kExitOk : kExitCheckFailed};
    };
  } else if (mu->parsed()) {
    key = "mu " + std::to_string(mu_n);
    run = [&] {
      const GaloisModule module = cyclotomic_module(mu_n, limits);
      // Closed form: exactly the points of order dividing 6.
      std::vector<ModulePoint> expected;
      for (std::uint64_t i = 0; i < module.point_count(); ++i) {
        ModulePoint p = module.point_at(i);
        if (6 % module.order(p) == 0) expected.push_back(std::move(p));
      }
      const ARTReport report = almost_rational_set(module, {threads, expected});
      return Outcome{emit_report(report, opt), verdict_code(report.verdict)};
    };
  } else if (scan->parsed()) {
    key = "lemma2 scan e=" + std::to_string(l2_e) + " max=" + std::to_string(l2_max) + " w=" +
          std::to_string(l2_witnesses);
    run = [&] {
      ScanOptions so;
      so.threads = threads;
      so.keep_witnesses = l2_witnesses;
      return Outcome{emit_report(failure_scan(l2_e, l2_max, so), opt), kExitOk};
    };
  } else if (pair->parsed()) {
    key = "lemma2 pair m=" + std::to_string(l2_m) + " e=" + std::to_string(l2_e);
    run = [&] { return Outcome{emit_pair(l2_m, l2_e, exists_pair(l2_m, l2_e), opt), kExitOk}; };
  } else if (count->parsed()) {
    key = "lemma2 count e=" + std::to_string(l2_e) + " p=" + std::to_string(l2_p);
    run = [&] { return Outcome{emit_count(l2_e, l2_p, count_fermat_points(l2_e, l2_p), opt), kExitOk}; };
  } else if (witness->parsed()) {
    key = "lemma2 witness p=" + std::to_string(l2_p) + " n=" + std::to_string(l2_n) + " e=" + std::to_string(l2_e);
    run = [&] { return Outcome{emit_report(prime_power_witness(l2_p, l2_n, l2_e), opt), kExitOk}; };
  } else if (threshold->parsed()) {
    key = "lemma2 threshold e=" + std::to_string(l2_e) + " bound=" + std::to_string(l2_bound);
    run = [&] { return Outcome{emit_report(weil_threshold_prime(l2_e, l2_bound), opt), kExitOk}; };
  } else if (level->parsed()) {
    key = "level " + std::to_string(level_N);
    run = [&] { return Outcome{emit_report(level_invariants(level_N), opt), kExitOk}; };
  } else if (theorem3->parsed()) {
    key = "theorem3 " + std::to_string(t3_N);
    run = [&] {
      const ARTReport report = theorem3_check(t3_N, limits, threads);
      return Outcome{emit_report(report, opt), verdict_code(report.verdict)};
    };
  } else if (surv->parsed()) {
    key = "survey from=" + std::to_string(from) + " to=" + std::to_string(to);
    run = [&] {
      const auto records = survey(from, to, limits, threads);
      return Outcome{emit_report(records, opt), summarize(records).failed ? kExitCheckFailed : kExitOk};
    };
  } else if (homothety->parsed()) {
    key = "homothety m=" + std::to_string(h_m) + " e=" + std::to_string(h_e) + " dim=" + std::to_string(h_dim);
    run = [&] {
      const ARTReport report = almost_rational_set(homothety_module(h_m, h_e, h_dim, limits), {threads, std::nullopt});
      return Outcome{emit_report(report, opt), kExitOk};
    };
  } else {
    err << app.help();
    return kExitInvalidInput;
  }

  std::optional<std::filesystem::path> cache_dir;
  if (!g.cache_dir.empty()) {
    cache_dir = g.cache_dir;
  } else if (const char* env = std::getenv("ARTLAB_CACHE_DIR"); env && *env) {
    cache_dir = env;
  }

  try {
    const CachedResult result = cache_roundtrip(cache_dir, kVersion, key + g.key_suffix(), run, err);
    out << result.output;
    return result.exit_code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  }
}

}  // namespace artlab
