#pragma once

#include "cedeconv/cedetect/cedetect.hpp"
#include "cedeconv/restore/restore.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cedeconv::cli {

/// Significant digits used for |E| in reports.
inline constexpr int kAbsEDigits = 30;

nlohmann::json report_to_json(const cedetect::CEReport& report);

/// Header line plus one row per (angle, branch):
/// axis,phi_index,phi,branch,absE,score,flagged
std::string scores_csv(const std::vector<cedetect::CEReport>& reports);
inline constexpr const char* kScoresHeader = "axis,phi_index,phi,branch,absE,score,flagged";

nlohmann::json restoration_to_json(const restore::RestorationResult& result);
nlohmann::json metrics_to_json(const restore::Metrics& metrics);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace cedeconv::cli
