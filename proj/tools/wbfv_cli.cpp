#include "wbfv/harness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace wbfv;

namespace {

struct Overrides {
  std::string config, scheme, flux, out;
  int order = 0;
  std::vector<int> n;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config, "JSON run configuration");
  app->add_option("--scheme", o.scheme, "standard | dwb | dwb-s | la | la-s");
  app->add_option("--order", o.order, "1, 3 or 5");
  app->add_option("--n", o.n, "resolution(s)");
  app->add_option("--flux", o.flux, "roe | hllc | rusanov");
  app->add_option("--out", o.out, "output directory");
  app->add_option("--seed", o.seed, "seed for randomised checks");
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : RunConfig::load(o.config);
  if (!o.scheme.empty()) cfg.scheme.kind = scheme_from_name(o.scheme);
  if (o.order) cfg.scheme.order = o.order;
  if (!o.flux.empty()) cfg.scheme.flux.kind = flux_from_name(o.flux);
  if (!o.n.empty()) cfg.resolutions = o.n;
  if (!o.out.empty()) cfg.out_dir = o.out;
  if (o.seed) cfg.seed = o.seed;
  // Re-validate after the command line overrides.
  return RunConfig::parse(cfg.dump());
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

int cmd_run(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const int n = cfg.resolutions.front();
  RunConfig single = cfg;
  single.resolutions = {n};
  const RunReport rep = run_convergence_study(single);
  std::cout << format_report(rep);
  if (!cfg.out_dir.empty()) {
    write_report_csv(rep, out_path(cfg, "report.csv"));
    write_meta_json(cfg, out_path(cfg, "meta.json"));
    const std::string fields = out_path(cfg, "fields_" + std::to_string(n) + ".csv");
    if (cfg.is_2d())
      write_fields_csv(run_2d(cfg, cfg.scheme, n), fields);
    else
      write_fields_csv(run_1d(cfg, cfg.scheme, n), fields);
  }
  return rep.rows.front().ok() ? 0 : 1;
}

int cmd_study(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const RunReport rep = run_convergence_study(cfg);
  std::cout << format_report(rep);
  if (!cfg.out_dir.empty()) {
    write_report_csv(rep, out_path(cfg, "report.csv"));
    write_meta_json(cfg, out_path(cfg, "meta.json"));
  }
  for (const auto& r : rep.rows)
    if (!r.ok()) return 1;
  return 0;
}

int cmd_bench(const Overrides& o, int repetitions) {
  RunConfig cfg = resolve(o);
  if (repetitions > 0) cfg.repetitions = repetitions;
  const auto rows = run_efficiency_study(cfg);
  for (const auto& r : rows) {
    if (!r.failure.empty())
      std::cout << r.n << "  FAILED: " << r.failure << '\n';
    else
      std::cout << r.n << "  " << r.mean_seconds << " s (var " << r.var_seconds << ")  error " << r.error << '\n';
  }
  if (!cfg.out_dir.empty()) {
    write_efficiency_csv(rows, out_path(cfg, "efficiency.csv"));
    write_meta_json(cfg, out_path(cfg, "meta.json"));
  }
  return 0;
}

int cmd_check(const Overrides& o) {
  const std::uint64_t seed = o.seed ? o.seed : 1;
  int failed = 0;
  for (const auto& c : run_property_checks(seed)) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    failed += !c.passed;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-balanced finite volume solver for the Euler equations with gravity"};
  app.require_subcommand(1);
  Overrides run_o, study_o, bench_o, check_o;
  int repetitions = 0;
  auto* run = app.add_subcommand("run", "single run at the first resolution");
  auto* study = app.add_subcommand("study", "convergence study over all resolutions");
  auto* bench = app.add_subcommand("bench", "repeated timed runs");
  auto* check = app.add_subcommand("check", "randomised property checks");
  add_common(run, run_o);
  add_common(study, study_o);
  add_common(bench, bench_o);
  bench->add_option("--repetitions", repetitions, "runs per resolution");
  check->add_option("--seed", check_o.seed, "seed");
  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return cmd_run(run_o);
    if (study->parsed()) return cmd_study(study_o);
    if (bench->parsed()) return cmd_bench(bench_o, repetitions);
    if (check->parsed()) return cmd_check(check_o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
