#pragma once

#include "cedeconv/cedetect/cedetect.hpp"
#include "cedeconv/restore/restore.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cedeconv::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kNoDetection = 1,
  kFailure = 2,
};

enum class AxisSelection { u, v, both };

/// Everything a run can be configured with from the command line.
struct RunConfig {
  std::string size = "2x3";
  AxisSelection axis = AxisSelection::both;
  double dphi = zerotrack::SamplingPlan{}.dphi;
  double rho = 1.0;
  int digits = 120;
  double scale = 1e50;
  double tau = 5.0;
  int sweep = 64;
  restore::RestoreMode mode = restore::RestoreMode::sequential;
  std::uint64_t seed = 0;
  bool separable = false;
  zerotrack::Direction direction = zerotrack::Direction::clockwise;
  zerotrack::Stepping stepping = zerotrack::Stepping::rotational;
  std::string input;
  std::string kernel;
  std::string out;
  std::string original;
  std::string restored;

  cedetect::CEConfig ce_config() const;
  numerics::PrecisionContext precision() const;
};

/// Files written by `gen`.
struct GenOutputs {
  static constexpr const char* truth = "true.pgm";
  static constexpr const char* observed_pgm = "observed.pgm";
  static constexpr const char* observed_csv = "observed.csv";
  static constexpr const char* manifest = "manifest.json";
};

int cmd_gen(const RunConfig& cfg, std::ostream& out);
int cmd_convolve(const RunConfig& cfg, std::ostream& out);
int cmd_detect(const RunConfig& cfg, std::ostream& out);
int cmd_restore(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

/// Parses argv (argv[0] is the program name) and dispatches. Errors go to
/// `err` and yield a nonzero exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cedeconv::cli
