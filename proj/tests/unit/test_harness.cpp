#include "wbfv/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wbfv;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("wbfv_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("config round trip") {
  const RunConfig cfg = RunConfig::parse(R"({
    "scenario": "isothermal-perturbed", "params": {"eta": 1e-5},
    "scheme": {"kind": "la", "order": 5, "flux": "hllc"},
    "resolutions": [32, 64], "cfl": 0.4, "t_end": 0.1, "boundary": "wall",
    "reference": {"kind": "fine", "n": 256, "scheme": {"kind": "la", "order": 5}}, "seed": 9})");
  CHECK(cfg.scheme.kind == SchemeKind::La);
  CHECK(cfg.scheme.flux.kind == FluxKind::Hllc);
  CHECK(cfg.params.at("eta") == 1e-5);
  CHECK(cfg.boundary == BoundaryKind::SolidWall);
  CHECK(cfg.reference.n == 256);
  const RunConfig again = RunConfig::parse(cfg.dump());
  CHECK(again.dump() == cfg.dump());
  CHECK_FALSE(cfg.is_2d());
}

TEST_CASE("config rejects malformed input") {
  CHECK_THROWS_AS(RunConfig::parse(R"({"sheme": {}})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse(R"({"scheme": {"order": "five"}})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse(R"({"scheme": {"kind": "magic"}})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse(R"({"resolutions": []})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("{"), ConfigError);
  CHECK_THROWS_AS(RunConfig::load("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("metrics") {
  const Grid1D g(0.0, 1.0, 4, 1);
  CellField1 a(g), b(g);
  a.data().row(0) << 9.0, 1.0, 2.0, 4.0, 3.0, 9.0;
  b.data().row(0).setConstant(1.0);
  const Eigen::VectorXd e = l1_error(a, b, g);
  CHECK(e[0] == doctest::Approx(0.25 * (0 + 1 + 3 + 2)));
  CHECK(e[1] == 0.0);
  CHECK(total_variation(a, g, 0) == doctest::Approx(1 + 2 + 1));
  CHECK(tv_indicator(4.0, 4.0) == 0.0);
  CHECK(tv_indicator(5.0, 4.0) == doctest::Approx(0.25));
  CHECK(convergence_rate(8e-3, 1e-3) == doctest::Approx(3.0));

  a.data().row(1) << 0.0, 2.0, -3.0, 0.5, 1.0, 0.0;
  CHECK(max_velocity(a, g) == doctest::Approx(2.0));
}

TEST_CASE("block averaging preserves the mean") {
  const Grid1D fine(0.0, 1.0, 12, 2), coarse(0.0, 1.0, 3, 1);
  CellField1 q(fine);
  for (int i = 0; i < 12; ++i) q.at(fine.storage(i)).setConstant(i * i);
  const CellField1 r = restrict_block_average(q, fine, coarse);
  CHECK(r.at(coarse.storage(0))[0] == doctest::Approx((0 + 1 + 4 + 9) / 4.0));
  CHECK(l1_error(r, CellField1(coarse), coarse)[2] == doctest::Approx(l1_error(q, CellField1(fine), fine)[2]));
  CHECK_THROWS_AS(restrict_block_average(q, fine, Grid1D(0.0, 1.0, 5, 1)), ConfigError);

  const Grid2D f2(0.0, 1.0, 0.0, 1.0, 4, 4, 1), c2(0.0, 1.0, 0.0, 1.0, 2, 2, 1);
  CellField2 q2(f2);
  q2.data().setOnes();
  q2.at(f2.storage(0, 0))[0] = 5.0;
  CHECK(restrict_block_average(q2, f2, c2).at(c2.storage(0, 0))[0] == doctest::Approx(2.0));
}

TEST_CASE("equilibrium study reports round-off errors for the piecewise scheme") {
  RunConfig cfg;
  cfg.scenario = "isothermal-linear";
  cfg.scheme.kind = SchemeKind::Dwb;
  cfg.init = "discrete";
  cfg.resolutions = {64};
  cfg.t_end = 0.1;
  const RunReport rep = run_convergence_study(cfg);
  REQUIRE(rep.rows.size() == 1);
  REQUIRE(rep.rows[0].ok());
  CHECK(rep.components.size() == 3);
  for (double e : rep.rows[0].error) CHECK(e <= 1e-13);
}

TEST_CASE("standard scheme converges at third order") {
  RunConfig cfg;
  cfg.scenario = "isothermal-linear";
  cfg.resolutions = {32, 64};
  cfg.t_end = 0.2;
  const RunReport rep = run_convergence_study(cfg);
  CHECK(rep.row(64)->rate[2] == doctest::Approx(3.0).epsilon(0.15));
  CHECK(rep.row(16) == nullptr);
}

TEST_CASE("fine references are cached and reused") {
  const auto dir = scratch_dir("cache");
  RunConfig cfg;
  cfg.scenario = "isothermal-perturbed";
  cfg.params = {{"eta", 1e-3}};
  cfg.t_end = 0.02;
  cfg.reference.kind = "fine";
  cfg.reference.n = 64;
  cfg.cache_dir = dir.string();
  const CellField1 first = fine_reference_1d(cfg, 16);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  const CellField1 second = fine_reference_1d(cfg, 16);
  CHECK(first.data() == second.data());
  cfg.reference.n = 128;
  fine_reference_1d(cfg, 16);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 2);
}

TEST_CASE("report files") {
  const auto dir = scratch_dir("report");
  RunReport rep;
  rep.scenario = "x";
  rep.scheme = "la";
  rep.order = 3;
  rep.components = {"rho", "rhou", "E"};
  RunRow a, b;
  a.n = 16;
  a.error = {1e-3, 2e-3, 4e-3};
  a.rate = {NAN, NAN, NAN};
  b.n = 32;
  b.error = {1.25e-4, 2.5e-4, 5e-4};
  b.rate = {3.0, 3.0, 3.0};
  rep.rows = {a, b};
  write_report_csv(rep, (dir / "r.csv").string());
  const std::string csv = slurp(dir / "r.csv");
  CHECK(csv.rfind("component,N,error,rate\n", 0) == 0);
  CHECK(csv.find("E,16,0.004,\n") != std::string::npos);
  CHECK(csv.find("E,32,5e-04,3\n") != std::string::npos);
  CHECK(format_report(rep).find("3.00") != std::string::npos);

  RunConfig cfg;
  write_meta_json(cfg, (dir / "meta.json").string());
  const std::string meta = slurp(dir / "meta.json");
  CHECK(meta.find("\"eigen\"") != std::string::npos);
  CHECK(meta.find("isothermal-linear") != std::string::npos);
}

TEST_CASE("property checks pass") {
  for (const CheckResult& c : run_property_checks(2)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
