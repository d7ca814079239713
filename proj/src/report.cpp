#include "wbfv/harness.hpp"

#include <json.hpp>

#include <Eigen/Core>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wbfv {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

// Shortest representation that round-trips.
std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

void write_report_csv(const RunReport& report, const std::string& path) {
  auto out = open_out(path);
  out << "component,N,error,rate\n";
  for (size_t c = 0; c < report.components.size(); ++c)
    for (const auto& row : report.rows) {
      if (!row.ok() || row.error.empty()) continue;
      out << report.components[c] << ',' << row.n << ',' << num(row.error[c]) << ',';
      if (!std::isnan(row.rate[c])) out << num(row.rate[c]);
      out << '\n';
    }
}

std::string format_report(const RunReport& report) {
  std::ostringstream os;
  os << report.scenario << "  " << report.scheme << "-O" << report.order << '\n';
  os << "     N";
  for (const auto& c : report.components) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %10s  rate", c.c_str());
    os << buf;
  }
  os << "      time  steps\n";
  for (const auto& row : report.rows) {
    char head[16];
    std::snprintf(head, sizeof head, "%6d", row.n);
    os << head;
    if (!row.ok()) {
      os << "  FAILED: " << row.failure << '\n';
      continue;
    }
    for (size_t c = 0; c < report.components.size(); ++c)
      os << "  " << (row.error.empty() ? std::string(10, ' ') : fmt("%10.2e", row.error[c])) << "  "
         << fmt("%4.2f", row.rate[c]);
    os << "  " << fmt("%8.2fs", row.seconds) << "  " << row.steps;
    if (!row.theta.empty()) {
      os << "  theta";
      for (double t : row.theta) os << ' ' << fmt("%.2e", t);
    }
    os << '\n';
  }
  return os.str();
}

void write_efficiency_csv(const std::vector<EfficiencyRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "N,mean_seconds,var_seconds,error\n";
  for (const auto& r : rows)
    if (r.failure.empty()) out << r.n << ',' << num(r.mean_seconds) << ',' << num(r.var_seconds) << ',' << num(r.error) << '\n';
}

void write_fields_csv(const Run1D& run, const std::string& path) {
  auto out = open_out(path);
  out << "x,rho,rhou,E\n";
  for (int i = 0; i < run.grid.n_cells(); ++i) {
    const auto c = run.q.at(run.grid.storage(i));
    out << num(run.grid.center(i)) << ',' << num(c[0]) << ',' << num(c[1]) << ',' << num(c[2]) << '\n';
  }
}

void write_fields_csv(const Run2D& run, const std::string& path) {
  auto out = open_out(path);
  out << "x,y,rho,rhou,rhov,E\n";
  for (int j = 0; j < run.grid.ny(); ++j)
    for (int i = 0; i < run.grid.nx(); ++i) {
      const auto c = run.q.at(run.grid.storage(i, j));
      out << num(run.grid.xc(i)) << ',' << num(run.grid.yc(j)) << ',' << num(c[0]) << ',' << num(c[1]) << ','
          << num(c[2]) << ',' << num(c[3]) << '\n';
    }
}

void write_meta_json(const RunConfig& cfg, const std::string& path) {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(cfg.dump());
  j["versions"] = {{"wbfv", "1.0.0"},
                   {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                 std::to_string(EIGEN_MINOR_VERSION)},
                   {"compiler", __VERSION__}};
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace wbfv
