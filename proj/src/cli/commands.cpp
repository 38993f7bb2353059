#include "cedeconv/cli/commands.hpp"

#include "cedeconv/cli/serialize.hpp"
#include "cedeconv/imagez/image_io.hpp"
#include "cedeconv/imagez/scene.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>

namespace cedeconv::cli {

namespace fs = std::filesystem;
using nlohmann::json;

cedetect::CEConfig RunConfig::ce_config() const {
  auto cfg = cedetect::CEConfig::for_size(cedetect::CESize::parse(size));
  cfg.plan.dphi = dphi;
  cfg.plan.rho = rho;
  cfg.plan.direction = direction;
  cfg.plan.stepping = stepping;
  cfg.scale = scale;
  cfg.tau = tau;
  cfg.sweep_count = sweep;
  cfg.validate();
  return cfg;
}

numerics::PrecisionContext RunConfig::precision() const {
  auto ctx = numerics::PrecisionContext::for_digits(digits);
  ctx.validate();
  return ctx;
}

namespace {

fs::path output_dir(const RunConfig& cfg) {
  fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  return dir;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

imagez::Image read_input(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("missing input image");
  if (!fs::exists(path)) throw std::invalid_argument("input image not found: " + path);
  return imagez::read_image(path);
}

}  // namespace

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = output_dir(cfg);
  const auto scene = imagez::gen_test_scene(cfg.seed, {.separable = cfg.separable});

  imagez::write_image(scene.truth, dir / GenOutputs::truth);
  imagez::write_image(scene.observed, dir / GenOutputs::observed_pgm);
  imagez::write_image(scene.observed, dir / GenOutputs::observed_csv);

  json blurs = json::array();
  double blur_mass_product = 1.0;
  for (const auto& h : scene.blurs) {
    const std::string name = "blur_" + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ".csv";
    imagez::write_image(h, dir / name);
    blurs.push_back({{"file", name}, {"rows", h.rows()}, {"cols", h.cols()}, {"sum", h.sum()}});
    blur_mass_product *= h.sum();
  }
  json manifest = {
      {"seed", cfg.seed},
      {"separable", cfg.separable},
      {"true", {{"file", GenOutputs::truth}, {"rows", scene.truth.rows()}, {"cols", scene.truth.cols()}, {"sum", scene.truth.sum()}}},
      {"blurs", blurs},
      {"observed",
       {{"files", {GenOutputs::observed_pgm, GenOutputs::observed_csv}},
        {"rows", scene.observed.rows()},
        {"cols", scene.observed.cols()},
        {"sum", scene.observed.sum()}}},
      {"blur_mass_product", blur_mass_product},
      {"leading_coefficient_product", imagez::leading_coefficient_product(scene.blurs)},
  };
  imagez::write_file_atomic(dir / GenOutputs::manifest, dump(manifest));
  out << "wrote test scene (seed " << cfg.seed << ") to " << dir.string() << "\n";
  return kOk;
}

int cmd_convolve(const RunConfig& cfg, std::ostream& out) {
  const auto f = read_input(cfg.input);
  const auto h = read_input(cfg.kernel);
  if (cfg.out.empty()) throw std::invalid_argument("convolve needs --out PATH");
  const auto g = imagez::convolve(f, h);
  imagez::write_image(g, cfg.out);
  out << "wrote " << g.rows() << "x" << g.cols() << " image to " << cfg.out << "\n";
  return kOk;
}

int cmd_detect(const RunConfig& cfg, std::ostream& out) {
  const auto img = read_input(cfg.input);
  const auto ce = cfg.ce_config();
  const auto ctx = cfg.precision();
  const fs::path dir = output_dir(cfg);

  std::vector<cedetect::CEReport> reports;
  if (cfg.axis != AxisSelection::v) reports.push_back(cedetect::detect(img, ce, cedetect::CEForm::u_form, ctx));
  if (cfg.axis != AxisSelection::u) reports.push_back(cedetect::detect(img, ce, cedetect::CEForm::v_form, ctx));

  json doc;
  if (reports.size() == 1) {
    doc = report_to_json(reports.front());
  } else {
    for (const auto& r : reports) doc[cedetect::form_name(r.axis)] = report_to_json(r);
  }
  imagez::write_file_atomic(dir / "report.json", dump(doc));
  imagez::write_file_atomic(dir / "scores.csv", scores_csv(reports));

  bool any = false;
  for (const auto& r : reports) {
    out << cedetect::form_name(r.axis) << ": consensus_count " << r.consensus_count << "\n";
    any = any || r.consensus_count >= 1;
  }
  return any ? kOk : kNoDetection;
}

int cmd_restore(const RunConfig& cfg, std::ostream& out) {
  const auto img = read_input(cfg.input);
  const auto ce = cfg.ce_config();
  const auto ctx = cfg.precision();
  const fs::path dir = output_dir(cfg);

  const auto result = restore::restore(img, ce, cfg.mode, ctx);
  imagez::write_image(result.restored, dir / "restored.pgm");
  imagez::write_image(result.restored, dir / "restored.csv");
  imagez::write_file_atomic(dir / "diagnostics.json", dump(restoration_to_json(result)));
  out << "restored " << result.restored.rows() << "x" << result.restored.cols() << " image (" << result.v_zero_count
      << " v zeros, " << result.u_zero_count << " u zeros removed)\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto original = read_input(cfg.original);
  const auto restored = read_input(cfg.restored);
  out << metrics_to_json(restore::verify(restored, original)).dump() << "\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blind deconvolution by conditional-expression zero detection"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, AxisSelection> axes{{"u", AxisSelection::u}, {"v", AxisSelection::v}, {"both", AxisSelection::both}};
  const std::map<std::string, restore::RestoreMode> modes{{"sequential", restore::RestoreMode::sequential},
                                                          {"literal", restore::RestoreMode::literal}};
  const std::map<std::string, zerotrack::Direction> directions{{"cw", zerotrack::Direction::clockwise},
                                                               {"ccw", zerotrack::Direction::counterclockwise}};
  const std::map<std::string, zerotrack::Stepping> steppings{{"rotational", zerotrack::Stepping::rotational},
                                                             {"additive", zerotrack::Stepping::additive}};

  auto add_ce_flags = [&](CLI::App* sub) {
    sub->add_option("--size", cfg.size, "CE blur size MxN")->capture_default_str();
    sub->add_option("--dphi", cfg.dphi, "angular sample step (radians)")->capture_default_str();
    sub->add_option("--rho", cfg.rho, "sample circle radius")->capture_default_str();
    sub->add_option("--digits", cfg.digits, "significant decimal digits")->capture_default_str();
    sub->add_option("--scale", cfg.scale, "score scale factor")->capture_default_str();
    sub->add_option("--tau", cfg.tau, "score threshold")->capture_default_str();
    sub->add_option("--sweep", cfg.sweep, "number of base angles")->capture_default_str();
    sub->add_option("--direction", cfg.direction, "sample direction cw|ccw")
        ->transform(CLI::CheckedTransformer(directions, CLI::ignore_case));
    sub->add_option("--stepping", cfg.stepping, "sample stepping rotational|additive")
        ->transform(CLI::CheckedTransformer(steppings, CLI::ignore_case));
  };

  auto* gen = app.add_subcommand("gen", "generate the seeded 43x44 test scene");
  gen->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  gen->add_option("--out", cfg.out, "output directory")->required();
  gen->add_flag("--separable", cfg.separable, "outer-product 2x2 and 2x3 kernels");

  auto* conv = app.add_subcommand("convolve", "full linear convolution of two images");
  conv->add_option("image", cfg.input, "image (.pgm or .csv)")->required();
  conv->add_option("kernel", cfg.kernel, "kernel (.pgm or .csv)")->required();
  conv->add_option("--out", cfg.out, "output image path")->required();

  auto* det = app.add_subcommand("detect", "evaluate the CE sweep and count blur zeros");
  det->add_option("input", cfg.input, "observed image (.pgm or .csv)")->required();
  det->add_option("--axis", cfg.axis, "u|v|both")->transform(CLI::CheckedTransformer(axes, CLI::ignore_case));
  det->add_option("--out", cfg.out, "output directory");
  det->add_option("--seed", cfg.seed, "unused; accepted for uniform invocation");
  add_ce_flags(det);

  auto* rest = app.add_subcommand("restore", "remove detected blur zeros and reconstruct the image");
  rest->add_option("input", cfg.input, "observed image (.pgm or .csv)")->required();
  rest->add_option("--mode", cfg.mode, "sequential|literal")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  rest->add_option("--out", cfg.out, "output directory");
  rest->add_option("--seed", cfg.seed, "unused; accepted for uniform invocation");
  add_ce_flags(rest);

  auto* ver = app.add_subcommand("verify", "compare a restored image with the original");
  ver->add_option("--original", cfg.original, "reference image")->required();
  ver->add_option("--restored", cfg.restored, "restored image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*conv) return cmd_convolve(cfg, out);
    if (*det) return cmd_detect(cfg, out);
    if (*rest) return cmd_restore(cfg, out);
    if (*ver) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cedeconv::cli
