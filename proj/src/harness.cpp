#include "wbfv/harness.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace wbfv {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

SchemeConfig parse_scheme(const json& j, const std::string& where) {
  reject_unknown(j, {"kind", "order", "flux", "entropy_fix", "quad_points", "eps_factor", "newton_tol",
                     "newton_max_iter"},
                 where);
  SchemeConfig s;
  if (j.contains("kind")) s.kind = scheme_from_name(get<std::string>(j, "kind", where));
  if (j.contains("order")) s.order = get<int>(j, "order", where);
  if (j.contains("flux")) s.flux.kind = flux_from_name(get<std::string>(j, "flux", where));
  if (j.contains("entropy_fix")) s.flux.entropy_fix = get<bool>(j, "entropy_fix", where);
  if (j.contains("quad_points")) s.quad_points = get<int>(j, "quad_points", where);
  if (j.contains("eps_factor")) s.eps_factor = get<double>(j, "eps_factor", where);
  if (j.contains("newton_tol")) s.newton_tol = get<double>(j, "newton_tol", where);
  if (j.contains("newton_max_iter")) s.newton_max_iter = get<int>(j, "newton_max_iter", where);
  if (s.order != 1 && s.order != 3 && s.order != 5) throw ConfigError(where + ".order must be 1, 3 or 5");
  if (s.quad_points < 0 || s.quad_points > GaussRule::kMaxPoints)
    throw ConfigError(where + ".quad_points out of range");
  return s;
}

json scheme_json(const SchemeConfig& s) {
  return {{"kind", scheme_name(s.kind)},        {"order", s.order},
          {"flux", flux_name(s.flux.kind)},     {"entropy_fix", s.flux.entropy_fix},
          {"quad_points", s.quadrature()},      {"eps_factor", s.eps_factor},
          {"newton_tol", s.newton_tol},         {"newton_max_iter", s.newton_max_iter}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class Matrix>
bool read_cache(const std::string& path, const std::string& key, Matrix& m) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::uint64_t klen = 0, rows = 0, cols = 0;
  in.read(reinterpret_cast<char*>(&klen), sizeof klen);
  std::string stored(klen, '\0');
  in.read(stored.data(), static_cast<std::streamsize>(klen));
  in.read(reinterpret_cast<char*>(&rows), sizeof rows);
  in.read(reinterpret_cast<char*>(&cols), sizeof cols);
  if (!in || stored != key || rows != static_cast<std::uint64_t>(m.rows()) ||
      cols != static_cast<std::uint64_t>(m.cols()))
    return false;
  in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
  return static_cast<bool>(in);
}

template <class Matrix>
void write_cache(const std::string& path, const std::string& key, const Matrix& m) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    const std::uint64_t klen = key.size(), rows = m.rows(), cols = m.cols();
    out.write(reinterpret_cast<const char*>(&klen), sizeof klen);
    out.write(key.data(), static_cast<std::streamsize>(klen));
    out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
    out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
    out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
  }
  std::filesystem::rename(tmp, path);
}

std::string reference_key(const RunConfig& cfg) {
  json j = {{"scenario", cfg.scenario},
            {"params", cfg.params},
            {"t_end", cfg.t_end ? json(*cfg.t_end) : json()},
            {"boundary", cfg.boundary ? json(boundary_name(*cfg.boundary)) : json()},
            {"cfl", cfg.cfl},
            {"scheme", scheme_json(cfg.reference.scheme)},
            {"n", cfg.reference.n}};
  return j.dump();
}

std::vector<std::string> component_names(bool two_d) {
  if (two_d) return {"rho", "rhou", "rhov", "E"};
  return {"rho", "rhou", "E"};
}

}  // namespace

RunConfig RunConfig::parse(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  reject_unknown(j, {"scenario", "params", "scheme", "resolutions", "cfl", "t_end", "init", "anchor_cell",
                     "boundary", "reference", "cache_dir", "out_dir", "seed", "repetitions", "max_steps"},
                 "config");
  RunConfig c;
  const std::string w = "config";
  if (j.contains("scenario")) c.scenario = get<std::string>(j, "scenario", w);
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError("config.params must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_number()) throw ConfigError("config.params." + key + " must be a number");
      c.params[key] = value.get<double>();
    }
  }
  if (j.contains("scheme")) c.scheme = parse_scheme(j["scheme"], "config.scheme");
  if (j.contains("resolutions")) c.resolutions = get<std::vector<int>>(j, "resolutions", w);
  if (j.contains("cfl")) c.cfl = get<double>(j, "cfl", w);
  if (j.contains("t_end")) c.t_end = get<double>(j, "t_end", w);
  if (j.contains("init")) c.init = get<std::string>(j, "init", w);
  if (j.contains("anchor_cell")) c.anchor_cell = get<int>(j, "anchor_cell", w);
  if (j.contains("boundary")) c.boundary = boundary_from_name(get<std::string>(j, "boundary", w));
  if (j.contains("reference")) {
    const json& r = j["reference"];
    reject_unknown(r, {"kind", "scheme", "n"}, "config.reference");
    if (r.contains("kind")) c.reference.kind = get<std::string>(r, "kind", "config.reference");
    if (r.contains("scheme")) c.reference.scheme = parse_scheme(r["scheme"], "config.reference.scheme");
    if (r.contains("n")) c.reference.n = get<int>(r, "n", "config.reference");
  }
  if (j.contains("cache_dir")) c.cache_dir = get<std::string>(j, "cache_dir", w);
  if (j.contains("out_dir")) c.out_dir = get<std::string>(j, "out_dir", w);
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed", w);
  if (j.contains("repetitions")) c.repetitions = get<int>(j, "repetitions", w);
  if (j.contains("max_steps")) c.max_steps = get<long>(j, "max_steps", w);

  if (c.init != "exact" && c.init != "discrete") throw ConfigError("config.init must be 'exact' or 'discrete'");
  if (c.reference.kind != "initial" && c.reference.kind != "fine" && c.reference.kind != "none")
    throw ConfigError("config.reference.kind must be 'initial', 'fine' or 'none'");
  if (c.reference.kind == "fine" && c.reference.n <= 0) throw ConfigError("fine reference needs reference.n");
  if (c.resolutions.empty()) throw ConfigError("config.resolutions is empty");
  for (int n : c.resolutions)
    if (n <= 0) throw ConfigError("resolutions must be positive");
  if (c.repetitions < 1) throw ConfigError("config.repetitions must be at least 1");
  StepController{c.cfl, 0.0, c.max_steps}.validate();
  if (c.is_2d()) {
    (void)scenario_2d(c.scenario, c.params);
  } else {
    (void)scenario_1d(c.scenario, c.params);
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string RunConfig::dump() const {
  json j = {{"scenario", scenario},
            {"params", params},
            {"scheme", scheme_json(scheme)},
            {"resolutions", resolutions},
            {"cfl", cfl},
            {"init", init},
            {"anchor_cell", anchor_cell},
            {"reference", {{"kind", reference.kind}, {"scheme", scheme_json(reference.scheme)}, {"n", reference.n}}},
            {"cache_dir", cache_dir},
            {"out_dir", out_dir},
            {"seed", seed},
            {"repetitions", repetitions},
            {"max_steps", max_steps}};
  if (t_end) j["t_end"] = *t_end;
  if (boundary) j["boundary"] = boundary_name(*boundary);
  return j.dump(2);
}

// ---- metrics -------------------------------------------------------------

Eigen::VectorXd l1_error(const CellField1& q, const CellField1& ref, const Grid1D& grid) {
  if (q.size() != grid.n_total() || ref.size() != grid.n_total()) throw ConfigError("l1_error: grid mismatch");
  const auto a = q.data().middleCols(grid.storage(0), grid.n_cells());
  const auto b = ref.data().middleCols(grid.storage(0), grid.n_cells());
  return grid.dx() * (a - b).cwiseAbs().rowwise().sum();
}

Eigen::VectorXd l1_error(const CellField2& q, const CellField2& ref, const Grid2D& grid) {
  if (q.size() != grid.n_total() || ref.size() != grid.n_total()) throw ConfigError("l1_error: grid mismatch");
  Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
  for (int j = 0; j < grid.ny(); ++j) {
    const int s = grid.storage(0, j);
    e += (q.data().middleCols(s, grid.nx()) - ref.data().middleCols(s, grid.nx())).cwiseAbs().rowwise().sum();
  }
  return grid.dx() * grid.dy() * e;
}

double convergence_rate(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

double total_variation(const CellField1& q, const Grid1D& grid, int comp) {
  double tv = 0.0;
  for (int i = 1; i < grid.n_cells(); ++i)
    tv += std::abs(q.data()(comp, grid.storage(i)) - q.data()(comp, grid.storage(i - 1)));
  return tv;
}

double tv_indicator(double tv, double tv_ref) { return tv / tv_ref - 1.0; }

CellField1 restrict_block_average(const CellField1& fine, const Grid1D& fg, const Grid1D& cg) {
  if (fg.n_cells() % cg.n_cells() != 0) throw ConfigError("restriction needs an integer refinement ratio");
  const int ratio = fg.n_cells() / cg.n_cells();
  CellField1 out(cg);
  for (int i = 0; i < cg.n_cells(); ++i)
    out.at(cg.storage(i)) = fine.data().middleCols(fg.storage(i * ratio), ratio).rowwise().mean();
  return out;
}

CellField2 restrict_block_average(const CellField2& fine, const Grid2D& fg, const Grid2D& cg) {
  if (fg.nx() % cg.nx() != 0 || fg.ny() % cg.ny() != 0 || fg.nx() / cg.nx() != fg.ny() / cg.ny())
    throw ConfigError("restriction needs an integer refinement ratio");
  const int ratio = fg.nx() / cg.nx();
  CellField2 out(cg);
  for (int j = 0; j < cg.ny(); ++j)
    for (int i = 0; i < cg.nx(); ++i) {
      State2 acc = State2::Zero();
      for (int b = 0; b < ratio; ++b) acc += fine.data().middleCols(fg.storage(i * ratio, j * ratio + b), ratio).rowwise().sum();
      out.at(cg.storage(i, j)) = acc / double(ratio * ratio);
    }
  return out;
}

double max_velocity(const CellField1& q, const Grid1D& grid) {
  const auto c = q.data().middleCols(grid.storage(0), grid.n_cells());
  return (c.row(1).array() / c.row(0).array()).abs().maxCoeff();
}

// ---- single runs ---------------------------------------------------------

Scenario1D resolve_scenario_1d(const RunConfig& cfg) {
  Scenario1D sc = scenario_1d(cfg.scenario, cfg.params);
  if (cfg.t_end) sc.t_end = *cfg.t_end;
  if (cfg.boundary) sc.bc = BoundarySpec1D::both(*cfg.boundary);
  return sc;
}

Scenario2D resolve_scenario_2d(const RunConfig& cfg) {
  Scenario2D sc = scenario_2d(cfg.scenario, cfg.params);
  if (cfg.t_end) sc.t_end = *cfg.t_end;
  if (cfg.boundary) sc.bc = BoundarySpec2D::all(*cfg.boundary);
  return sc;
}

Run1D run_1d(const RunConfig& cfg, const SchemeConfig& scheme, int n,
             std::function<bool(double, long, const CellField1&)> observer) {
  const Scenario1D sc = resolve_scenario_1d(cfg);
  const Grid1D grid = sc.make_grid(n, scheme.ghosts());
  Solver1D solver(grid, scheme, sc.eos, sc.gravity, sc.bc);
  CellField1 q = cfg.init == "discrete" ? discrete_equilibrium_init(sc, solver, cfg.anchor_cell).field
                                        : init_cell_averages(sc, grid);
  solver.set_boundary_data(q);
  Run1D run{grid, q, q, {}, {}};
  AdvanceOptions opt;
  opt.t_end = sc.t_end;
  opt.cfl = cfg.cfl;
  opt.max_steps = cfg.max_steps;
  opt.damping = sc.damping;
  if (observer) opt.observer = [&](double t, long steps) { return observer(t, steps, run.q); };
  run.advance = advance(solver, run.q, ButcherTableau::for_order(scheme.order), opt);
  run.stats = solver.stats();
  return run;
}

Run2D run_2d(const RunConfig& cfg, const SchemeConfig& scheme, int n) {
  if (cfg.init != "exact") throw ConfigError("discrete initialisation is 1D only");
  const Scenario2D sc = resolve_scenario_2d(cfg);
  const Grid2D grid = sc.make_grid(n, scheme.ghosts());
  Solver2D solver(grid, scheme, sc.eos, sc.gravity, sc.bc);
  CellField2 q = init_cell_averages(sc, grid);
  solver.set_boundary_data(q);
  if (sc.far_field) solver.set_background(init_cell_averages(grid, sc.eos, sc.far_field));
  Run2D run{grid, q, q, {}, {}};
  AdvanceOptions opt;
  opt.t_end = sc.t_end;
  opt.cfl = cfg.cfl;
  opt.max_steps = cfg.max_steps;
  run.advance = advance(solver, run.q, ButcherTableau::for_order(scheme.order), opt);
  run.stats = solver.stats();
  return run;
}

CellField1 fine_reference_1d(const RunConfig& cfg, int n) {
  const int nf = cfg.reference.n;
  const Scenario1D sc = resolve_scenario_1d(cfg);
  const Grid1D fg = sc.make_grid(nf, cfg.reference.scheme.ghosts());
  const Grid1D cg = sc.make_grid(n, 0);
  CellField1 fine(fg);
  const std::string key = reference_key(cfg);
  const std::string path =
      cfg.cache_dir.empty() ? "" : (std::filesystem::path(cfg.cache_dir) / ("ref1d_" + fnv1a_hex(key) + ".bin")).string();
  if (path.empty() || !read_cache(path, key, fine.data())) {
    RunConfig rc = cfg;
    rc.init = "exact";
    fine = run_1d(rc, cfg.reference.scheme, nf).q;
    if (!path.empty()) {
      std::filesystem::create_directories(cfg.cache_dir);
      write_cache(path, key, fine.data());
    }
  }
  return restrict_block_average(fine, fg, cg);
}

CellField2 fine_reference_2d(const RunConfig& cfg, int n) {
  const int nf = cfg.reference.n;
  const Scenario2D sc = resolve_scenario_2d(cfg);
  const Grid2D fg = sc.make_grid(nf, cfg.reference.scheme.ghosts());
  const Grid2D cg = sc.make_grid(n, 0);
  CellField2 fine(fg);
  const std::string key = reference_key(cfg);
  const std::string path =
      cfg.cache_dir.empty() ? "" : (std::filesystem::path(cfg.cache_dir) / ("ref2d_" + fnv1a_hex(key) + ".bin")).string();
  if (path.empty() || !read_cache(path, key, fine.data())) {
    fine = run_2d(cfg, cfg.reference.scheme, nf).q;
    if (!path.empty()) {
      std::filesystem::create_directories(cfg.cache_dir);
      write_cache(path, key, fine.data());
    }
  }
  return restrict_block_average(fine, fg, cg);
}

// ---- studies -------------------------------------------------------------

const RunRow* RunReport::row(int n) const {
  for (const auto& r : rows)
    if (r.n == n) return &r;
  return nullptr;
}

namespace {

// Errors of one run against the configured reference. The coarse reference
// lives on a ghost-free grid, so the interior is copied into the run layout.
template <class Run, class Field, class Grid>
std::vector<double> run_errors(const RunConfig& cfg, const Run& run, const Field* ref_coarse, const Grid& ref_grid,
                               std::vector<double>* theta) {
  Eigen::VectorXd e;
  if (cfg.reference.kind == "initial") {
    e = l1_error(run.q, run.initial, run.grid);
  } else if (cfg.reference.kind == "fine") {
    Field ref(run.grid);
    if constexpr (std::is_same_v<Grid, Grid1D>) {
      ref.data().middleCols(run.grid.storage(0), run.grid.n_cells()) =
          ref_coarse->data().middleCols(ref_grid.storage(0), ref_grid.n_cells());
      if (theta) {
        theta->clear();
        for (int c = 0; c < 3; ++c)
          theta->push_back(tv_indicator(total_variation(run.q, run.grid, c), total_variation(ref, run.grid, c)));
      }
    } else {
      for (int j = 0; j < run.grid.ny(); ++j)
        ref.data().middleCols(run.grid.storage(0, j), run.grid.nx()) =
            ref_coarse->data().middleCols(ref_grid.storage(0, j), ref_grid.nx());
    }
    e = l1_error(run.q, ref, run.grid);
  } else {
    return {};
  }
  return {e.data(), e.data() + e.size()};
}

template <bool TwoD>
RunReport convergence_impl(const RunConfig& cfg) {
  RunReport rep;
  rep.scenario = cfg.scenario;
  rep.scheme = scheme_name(cfg.scheme.kind);
  rep.order = cfg.scheme.order;
  rep.components = component_names(TwoD);
  const RunRow* prev = nullptr;
  for (int n : cfg.resolutions) {
    RunRow row;
    row.n = n;
    try {
      if constexpr (TwoD) {
        const Scenario2D sc = resolve_scenario_2d(cfg);
        const Grid2D cg = sc.make_grid(n, 0);
        std::optional<CellField2> ref;
        if (cfg.reference.kind == "fine") ref = fine_reference_2d(cfg, n);
        const Run2D run = run_2d(cfg, cfg.scheme, n);
        row.error = run_errors(cfg, run, ref ? &*ref : nullptr, cg, nullptr);
        row.seconds = run.advance.seconds;
        row.steps = run.advance.steps;
        row.fallbacks = run.stats.fallbacks;
      } else {
        const Scenario1D sc = resolve_scenario_1d(cfg);
        const Grid1D cg = sc.make_grid(n, 0);
        std::optional<CellField1> ref;
        if (cfg.reference.kind == "fine") ref = fine_reference_1d(cfg, n);
        const Run1D run = run_1d(cfg, cfg.scheme, n);
        row.error = run_errors(cfg, run, ref ? &*ref : nullptr, cg, &row.theta);
        row.seconds = run.advance.seconds;
        row.steps = run.advance.steps;
        row.fallbacks = run.stats.fallbacks;
      }
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
    row.rate.assign(rep.components.size(), std::numeric_limits<double>::quiet_NaN());
    if (prev && row.ok() && prev->ok() && !row.error.empty() && !prev->error.empty()) {
      const double ratio = std::log2(double(row.n) / prev->n);
      for (size_t c = 0; c < row.error.size(); ++c)
        row.rate[c] = convergence_rate(prev->error[c], row.error[c]) / ratio;
    }
    rep.rows.push_back(row);
    prev = &rep.rows.back();
  }
  return rep;
}

}  // namespace

RunReport run_convergence_study(const RunConfig& cfg) {
  return cfg.is_2d() ? convergence_impl<true>(cfg) : convergence_impl<false>(cfg);
}

std::vector<EfficiencyRow> run_efficiency_study(const RunConfig& cfg) {
  std::vector<EfficiencyRow> out;
  for (int n : cfg.resolutions) {
    EfficiencyRow row;
    row.n = n;
    try {
      std::vector<double> times;
      for (int k = 0; k < cfg.repetitions; ++k) {
        if (cfg.is_2d()) {
          const Run2D run = run_2d(cfg, cfg.scheme, n);
          times.push_back(run.advance.seconds);
          if (k + 1 == cfg.repetitions) {
            const Grid2D cg = resolve_scenario_2d(cfg).make_grid(n, 0);
            std::optional<CellField2> ref;
            if (cfg.reference.kind == "fine") ref = fine_reference_2d(cfg, n);
            const auto e = run_errors(cfg, run, ref ? &*ref : nullptr, cg, nullptr);
            row.error = e.empty() ? 0.0 : e.back();
          }
        } else {
          const Run1D run = run_1d(cfg, cfg.scheme, n);
          times.push_back(run.advance.seconds);
          if (k + 1 == cfg.repetitions) {
            const Grid1D cg = resolve_scenario_1d(cfg).make_grid(n, 0);
            std::optional<CellField1> ref;
            if (cfg.reference.kind == "fine") ref = fine_reference_1d(cfg, n);
            const auto e = run_errors(cfg, run, ref ? &*ref : nullptr, cg, nullptr);
            row.error = e.empty() ? 0.0 : e.back();
          }
        }
      }
      const Eigen::Map<const Eigen::VectorXd> t(times.data(), static_cast<Eigen::Index>(times.size()));
      row.mean_seconds = t.mean();
      row.var_seconds = (t.array() - row.mean_seconds).square().sum() / double(times.size());
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace wbfv
