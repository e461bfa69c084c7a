#pragma once

/**
 * @file report.hpp
 * @brief JSON-lines and plain-text rendering of every report type.
 *
 * JSON output is one compact object per line with fixed key order. Timing is
 * nondeterministic, so the "ms" field is null unless timing is requested.
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artlab/galmod.hpp"
#include "artlab/lemma2.hpp"
#include "artlab/modcurve.hpp"

namespace artlab {

using Json = nlohmann::ordered_json;

struct OutputOptions {
  bool json = false;
  bool timing = false;
};

Json to_json(const ModulePoint& p);
Json to_json(const ARTReport& r, bool timing);
Json to_json(const Lemma2Report& r);
Json to_json(const LevelInvariants& inv);
Json to_json(const SurveyRecord& rec, bool timing);
Json to_json(const Lemma4Audit& audit);
Json to_json(const PairWitness& w);
Json to_json(const PrimePowerResult& r);
Json to_json(const WeilThreshold& w);

std::string emit_report(const ARTReport& r, const OutputOptions& opt);
std::string emit_report(const Lemma2Report& r, const OutputOptions& opt);
std::string emit_report(const LevelInvariants& inv, const OutputOptions& opt);
std::string emit_report(const std::vector<SurveyRecord>& records, const OutputOptions& opt);
std::string emit_report(const Lemma4Audit& audit, const OutputOptions& opt);
std::string emit_pair(std::uint64_t m, std::uint64_t e, const std::optional<PairWitness>& w,
                      const OutputOptions& opt);
std::string emit_report(const PrimePowerResult& r, const OutputOptions& opt);
std::string emit_count(std::uint64_t e, std::uint64_t p, std::uint64_t count, const OutputOptions& opt);
std::string emit_report(const WeilThreshold& w, const OutputOptions& opt);

}  // namespace artlab
