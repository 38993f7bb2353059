#include "cedeconv/cli/serialize.hpp"

#include <charconv>

namespace cedeconv::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json report_to_json(const cedetect::CEReport& report) {
  const auto& cfg = report.config;
  json j;
  j["axis"] = cedetect::form_name(report.axis);
  j["size"] = cfg.size.str();
  j["digits"] = report.digits;
  j["scale"] = cfg.scale;
  j["tau"] = cfg.tau;
  j["sweep_count"] = cfg.sweep_count;
  j["plan"] = {
      {"rho", cfg.plan.rho},
      {"dphi", cfg.plan.dphi},
      {"count", cfg.plan.count},
      {"direction", cfg.plan.direction == zerotrack::Direction::clockwise ? "clockwise" : "counterclockwise"},
      {"stepping", cfg.plan.stepping == zerotrack::Stepping::rotational ? "rotational" : "additive"},
  };
  j["consensus_count"] = report.consensus_count;
  j["skipped_angles"] = report.skipped_angles;
  json flagged = json::array();
  json angles = json::array();
  for (const auto& a : report.angles) {
    flagged.push_back(a.flagged_count);
    json branches = json::array();
    for (const auto& b : a.branches) {
      branches.push_back({{"branch", b.branch},
                          {"absE", b.abs_e.str(kAbsEDigits)},
                          {"score", b.score},
                          {"flagged", b.flagged},
                          {"ambiguous", b.ambiguous}});
    }
    angles.push_back({{"phi_index", a.phi_index},
                      {"phi", a.phi},
                      {"shifted", a.shifted},
                      {"skipped", a.skipped},
                      {"flagged_count", a.flagged_count},
                      {"branches", std::move(branches)}});
  }
  j["flagged_count"] = std::move(flagged);
  j["angles"] = std::move(angles);
  return j;
}

std::string scores_csv(const std::vector<cedetect::CEReport>& reports) {
  std::string out = kScoresHeader;
  out += '\n';
  for (const auto& r : reports) {
    const char* axis = r.axis == cedetect::CEForm::u_form ? "u" : "v";
    for (const auto& a : r.angles) {
      for (const auto& b : a.branches) {
        out += axis;
        out += ',' + std::to_string(a.phi_index);
        out += ',' + format_double(a.phi);
        out += ',' + std::to_string(b.branch);
        out += ',' + b.abs_e.str(kAbsEDigits);
        out += ',' + format_double(b.score);
        out += b.flagged ? ",1\n" : ",0\n";
      }
    }
  }
  return out;
}

json restoration_to_json(const restore::RestorationResult& result) {
  auto notes = [](const std::vector<restore::PointNote>& v) {
    json arr = json::array();
    for (const auto& n : v) arr.push_back({{"stage", n.stage}, {"index", n.index}});
    return arr;
  };
  return {
      {"mode", restore::mode_name(result.mode)},
      {"rows", result.restored.rows()},
      {"cols", result.restored.cols()},
      {"v_zero_count", result.v_zero_count},
      {"u_zero_count", result.u_zero_count},
      {"max_imag_residual", result.max_imag_residual},
      {"normalization", {{"re", result.normalization.re.to_double()}, {"im", result.normalization.im.to_double()}}},
      {"skipped_points", notes(result.skipped_points)},
      {"coerced_points", notes(result.coerced_points)},
  };
}

json metrics_to_json(const restore::Metrics& metrics) {
  return {{"max_abs_diff", metrics.max_abs_diff},
          {"rms_diff", metrics.rms_diff},
          {"correlation", metrics.correlation}};
}

}  // namespace cedeconv::cli
