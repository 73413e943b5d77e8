// Copyright 2026 The Ringvac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: parameter sweeps, exact landscape minimization,
// verification suites, and SI estimation.  Output is deterministic: identical
// configuration yields byte-identical files (fixed 17-significant-digit float
// formatting, fixed row order, no timestamps).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringvac/ringvac.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

ordered_json constants_json() {
  return ordered_json{{"e_si", ringvac::kElementaryChargeSi},
                      {"hbar_si", ringvac::kHbarSi},
                      {"c_si", ringvac::kSpeedOfLightSi}};
}

// Every JSON report carries a provenance block: tool version, the fixed
// physical constants, and the settings the numbers were produced with.
ordered_json provenance(const std::string& command, ordered_json settings) {
  ordered_json p;
  p["tool"] = "ringvac";
  p["version"] = ringvac::kVersion;
  p["command"] = command;
  p["constants"] = constants_json();
  p["settings"] = std::move(settings);
  return p;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string json_content(const ordered_json& j) { return j.dump(2) + "\n"; }

ringvac::FieldKind parse_field(const std::string& field) {
  if (field == "neutral") return ringvac::FieldKind::neutral;
  if (field == "charged") return ringvac::FieldKind::charged;
  throw std::invalid_argument("unknown field kind: " + field);
}

ringvac::UnitScales scales_for_radius(double radius_si) {
  ringvac::PhysicalRing ring;
  ring.radius_si = radius_si;
  return ringvac::reduce(ring).scales;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double beta = 0.0;
  double i_cl_hat = 0.0;
  double nu_max = 0.99;
  double nu_step = 1e-3;
  std::string field = "charged";
  std::string format = "csv";
  std::string output;
};

void run_sweep(const SweepOptions& o) {
  if (!(o.nu_step > 0.0))
    throw std::invalid_argument("sweep: empty range, nu_step must be > 0");
  if (!(o.nu_max >= 0.0))
    throw std::invalid_argument("sweep: empty range, nu_max must be >= 0");
  if (!(o.nu_max < 1.0))
    throw std::domain_error("sweep: nu_max must be < 1 (subluminal)");
  const ringvac::FieldKind field = parse_field(o.field);
  if (field == ringvac::FieldKind::neutral && o.beta != 0.0)
    throw std::invalid_argument("sweep: the neutral field requires beta = 0");

  struct Row {
    double nu;
    long long m, c;
    double e_zp, e_cl, e_total, l_total;
    bool at_jump;
  };
  const long long count = std::llround(o.nu_max / o.nu_step) + 1;
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    Row r;
    r.nu = static_cast<double>(k) * o.nu_step;
    if (!(r.nu < 1.0)) throw std::domain_error("sweep: grid reaches |nu| = 1");
    if (field == ringvac::FieldKind::charged) {
      const auto w = ringvac::winding(r.nu, o.beta);
      r.m = w.m_wind;
      r.c = ringvac::enhancement(w).c_factor;
      r.at_jump = w.at_jump;
      r.e_zp = ringvac::zp_energy_charged(r.nu, o.beta);
      r.l_total = o.i_cl_hat * r.nu + ringvac::zp_angmom_charged(r.nu, o.beta);
    } else {
      r.m = 0;
      r.c = 1;
      r.at_jump = false;
      r.e_zp = ringvac::zp_energy_neutral(r.nu);
      r.l_total = o.i_cl_hat * r.nu - r.nu / 24.0;
    }
    r.e_cl = 0.5 * o.i_cl_hat * r.nu * r.nu;
    r.e_total = r.e_cl + r.e_zp;
    rows.push_back(r);
  }

  const ordered_json settings{{"beta", o.beta},       {"i_cl_hat", o.i_cl_hat},
                              {"nu_max", o.nu_max},   {"nu_step", o.nu_step},
                              {"field", o.field}};
  std::string content;
  if (o.format == "csv") {
    content += "# ringvac " + std::string(ringvac::kVersion) + " sweep\n";
    content += "# e_si=" + fmt17(ringvac::kElementaryChargeSi) +
               " hbar_si=" + fmt17(ringvac::kHbarSi) +
               " c_si=" + fmt17(ringvac::kSpeedOfLightSi) + "\n";
    content += "# beta=" + fmt17(o.beta) + " i_cl_hat=" + fmt17(o.i_cl_hat) +
               " nu_max=" + fmt17(o.nu_max) + " nu_step=" + fmt17(o.nu_step) +
               " field=" + o.field + "\n";
    content += "nu,M,C,e_zp,e_cl,e_total,l_total,at_jump\n";
    for (const Row& r : rows) {
      content += fmt17(r.nu) + "," + std::to_string(r.m) + "," +
                 std::to_string(r.c) + "," + fmt17(r.e_zp) + "," +
                 fmt17(r.e_cl) + "," + fmt17(r.e_total) + "," +
                 fmt17(r.l_total) + "," + (r.at_jump ? "1" : "0") + "\n";
    }
  } else if (o.format == "json") {
    ordered_json j;
    j["provenance"] = provenance("sweep", settings);
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows) {
      arr.push_back(ordered_json{{"nu", r.nu},
                                 {"M", r.m},
                                 {"C", r.c},
                                 {"e_zp", r.e_zp},
                                 {"e_cl", r.e_cl},
                                 {"e_total", r.e_total},
                                 {"l_total", r.l_total},
                                 {"at_jump", r.at_jump}});
    }
    j["rows"] = std::move(arr);
    content = json_content(j);
  } else {
    throw std::invalid_argument("sweep: unknown format: " + o.format);
  }
  write_output(o.output, content);
}

// ---------------------------------------------------------------------------
// minimize

struct MinimizeOptions {
  double beta = 0.0;
  double i_cl_hat = 0.0;
  double nu_max = 0.99;
  double endpoint_eps = 1e-9;
  double radius_si = 0.0;
  std::string field = "charged";
  std::string output;
};

void run_minimize(const MinimizeOptions& o) {
  const ringvac::FieldKind field = parse_field(o.field);
  if (field == ringvac::FieldKind::neutral && o.beta != 0.0)
    throw std::invalid_argument("minimize: the neutral field requires beta = 0");
  const auto report =
      ringvac::global_minimum(o.beta, o.i_cl_hat, o.nu_max, field, o.endpoint_eps);

  ordered_json j;
  j["nu_star"] = report.nu_star;
  j["e_star"] = report.e_star;
  j["branch_n"] = report.branch_n;
  j["rotating_ground_state"] = report.rotating_ground_state;
  j["boundary_hit"] = report.boundary_hit;
  j["e_at_zero"] = report.candidates.front().e_total;
  ordered_json cands = ordered_json::array();
  for (const auto& c : report.candidates) {
    cands.push_back(ordered_json{{"nu", c.nu},
                                 {"e_total", c.e_total},
                                 {"branch_n", c.branch_n},
                                 {"open_endpoint", c.open_endpoint}});
  }
  j["candidates"] = std::move(cands);
  if (o.radius_si > 0.0) {
    const auto scales = scales_for_radius(o.radius_si);
    j["si"] = ordered_json{
        {"radius_si", o.radius_si},
        {"omega_star_rad_per_s", ringvac::to_si_frequency(report.nu_star, scales)},
        {"e_star_joule", ringvac::to_si_energy(report.e_star, scales)},
        {"e_at_zero_joule",
         ringvac::to_si_energy(report.candidates.front().e_total, scales)}};
  }
  j["provenance"] = provenance(
      "minimize", ordered_json{{"beta", o.beta},
                               {"i_cl_hat", o.i_cl_hat},
                               {"nu_max", o.nu_max},
                               {"field", o.field},
                               {"endpoint_eps", o.endpoint_eps}});
  write_output(o.output, json_content(j));
}

// ---------------------------------------------------------------------------
// branches

struct BranchesOptions {
  double beta = 0.0;
  double i_cl_hat = 0.0;
  double nu_max = 0.99;
  std::string format = "json";
  std::string output;
};

void run_branches(const BranchesOptions& o) {
  const auto branches = ringvac::enumerate_branches(o.beta, o.nu_max, o.i_cl_hat);
  std::string content;
  if (o.format == "csv") {
    content += "n,nu_lo,nu_hi,c_factor,curvature\n";
    for (const auto& b : branches)
      content += std::to_string(b.n) + "," + fmt17(b.nu_lo) + "," +
                 fmt17(b.nu_hi) + "," + std::to_string(b.c_factor) + "," +
                 fmt17(b.curvature) + "\n";
  } else if (o.format == "json") {
    ordered_json j;
    j["provenance"] = provenance(
        "branches", ordered_json{{"beta", o.beta},
                                 {"i_cl_hat", o.i_cl_hat},
                                 {"nu_max", o.nu_max}});
    ordered_json arr = ordered_json::array();
    for (const auto& b : branches)
      arr.push_back(ordered_json{{"n", b.n},
                                 {"nu_lo", b.nu_lo},
                                 {"nu_hi", b.nu_hi},
                                 {"c_factor", b.c_factor},
                                 {"curvature", b.curvature}});
    j["branches"] = std::move(arr);
    content = json_content(j);
  } else {
    throw std::invalid_argument("branches: unknown format: " + o.format);
  }
  write_output(o.output, content);
}

// ---------------------------------------------------------------------------
// greens

struct GreensOptions {
  double x = 0.7, y = 1.1, z = 0.3, delta = 1e-4;
  std::int64_t m_max = 1000000;
  std::string green;  // "", "static", or "rotating"
  double t = 0.0, tp = 0.0, phi = 0.0, phip = 0.0, nu = 0.0;
  std::string output;
};

void run_greens(const GreensOptions& o) {
  ordered_json j;
  if (o.green.empty()) {
    const ringvac::GPoint p{o.x, o.y, o.z, o.delta};
    const auto closed = ringvac::calg_closed(p);
    const auto series = ringvac::calg_series(p, o.m_max);
    j["point"] = ordered_json{{"x", p.x}, {"y", p.y}, {"z", p.z}, {"delta", p.delta}};
    j["closed"] = ordered_json{{"re", closed.real()}, {"im", closed.imag()}};
    j["series"] = ordered_json{{"re", series.value.real()},
                               {"im", series.value.imag()},
                               {"m_max", o.m_max},
                               {"tail_bound", series.tail_bound}};
    j["abs_diff"] = std::abs(closed - series.value);
  } else {
    std::complex<double> g;
    if (o.green == "static")
      g = ringvac::green_static(o.t, o.tp, o.phi, o.phip, o.delta);
    else if (o.green == "rotating")
      g = ringvac::green_rotating(o.t, o.tp, o.phi, o.phip, o.nu, o.delta);
    else
      throw std::invalid_argument("greens: unknown green kind: " + o.green);
    j["args"] = ordered_json{{"t", o.t},     {"tp", o.tp}, {"phi", o.phi},
                             {"phip", o.phip}, {"nu", o.nu}, {"delta", o.delta}};
    j["green"] = ordered_json{{"re", g.real()}, {"im", g.imag()}};
  }
  j["provenance"] = provenance("greens", ordered_json{{"kind", o.green.empty() ? "calg" : o.green}});
  write_output(o.output, json_content(j));
}

// ---------------------------------------------------------------------------
// t00

struct T00Options {
  double nu = 0.0;
  double phi = 2.0;
  std::vector<double> dt;
  double stencil_h = 0.0;
  int order = 0;
  std::string output;
};

void run_t00(const T00Options& o) {
  ringvac::SplitConfig cfg;
  if (!o.dt.empty()) cfg.dt_sequence = o.dt;
  if (o.stencil_h > 0.0) cfg.stencil_h = o.stencil_h;
  if (o.order > 0) cfg.extrapolation_order = o.order;
  const double density = ringvac::t00_point_split(o.nu, o.phi, cfg);
  const double target = -(1.0 + o.nu * o.nu) / (96.0 * ringvac::kPi);
  ordered_json j;
  j["nu"] = o.nu;
  j["phi"] = o.phi;
  j["density"] = density;
  j["target"] = target;
  j["rel_error"] = std::abs((density - target) / target);
  j["provenance"] = provenance(
      "t00", ordered_json{{"dt_sequence", cfg.dt_sequence},
                          {"stencil_h", cfg.stencil_h},
                          {"extrapolation_order", cfg.extrapolation_order}});
  write_output(o.output, json_content(j));
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::uint64_t seed = ringvac::kDefaultVerifySeed;
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyOptions& o) {
  const auto checks = ringvac::run_verify_suite(o.seed);
  bool all_pass = true;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    passed += c.pass ? 1 : 0;
  }
  // The rotating-frame mode sum and the lab-frame closed form are reported
  // side by side; they agree only at nu = 0 and are deliberately not equated.
  const double mode_sum_05 =
      ringvac::casimir_energy_mode_sum(0.5, ringvac::Regulator{});
  const double closed_05 = ringvac::zp_energy_neutral(0.5);

  std::string content;
  if (o.format == "json") {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
      arr.push_back(ordered_json{{"name", c.name},
                                 {"measured", c.measured},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass}});
    j["checks"] = std::move(arr);
    j["info"] = ordered_json{{"mode_sum_rotating_frame_nu_0_5", mode_sum_05},
                             {"closed_form_lab_frame_nu_0_5", closed_05}};
    j["all_pass"] = all_pass;
    j["provenance"] = provenance("verify", ordered_json{{"seed", o.seed}});
    content = json_content(j);
  } else {
    for (const auto& c : checks) {
      char line[256];
      std::snprintf(line, sizeof(line), "%s  %-58s  measured %.3e  tol %.1e\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                    c.tolerance);
      content += line;
    }
    char info[256];
    std::snprintf(info, sizeof(info),
                  "INFO  mode sum at nu = 0.5 is %.10e (rotating frame); "
                  "closed form is %.10e (lab frame); not equated\n",
                  mode_sum_05, closed_05);
    content += info;
    content += std::to_string(passed) + "/" + std::to_string(checks.size()) +
               " checks passed\n";
  }
  write_output(o.output, content);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateOptions {
  double radius_si = 0.0;
  double b_field_si = 0.0;
  double i_cl_si = 0.0;
  double mass_per_length = 0.0;
  int charge_quanta = 1;
  double nu = 0.0;
  double nu_max = 0.99;
  std::string output;
};

void run_estimate(const EstimateOptions& o) {
  ringvac::PhysicalRing ring;
  ring.radius_si = o.radius_si;
  ring.b_field_si = o.b_field_si;
  ring.i_cl_si = o.i_cl_si;
  ring.mass_per_length = o.mass_per_length;
  ring.charge_quanta = o.charge_quanta;
  const auto reduced = ringvac::reduce(ring);
  const double beta = reduced.state.beta;
  const double i_cl_hat = reduced.state.i_cl_hat;

  ordered_json j;
  j["inputs"] = ordered_json{{"radius_si", o.radius_si},
                             {"b_field_si", o.b_field_si},
                             {"i_cl_si", ring.moment_of_inertia_si()},
                             {"charge_quanta", o.charge_quanta}};
  j["beta"] = beta;
  j["i_cl_hat"] = i_cl_hat;
  j["scales"] = ordered_json{
      {"energy_scale_joule", reduced.scales.energy_scale},
      {"frequency_scale_rad_per_s", reduced.scales.frequency_scale},
      {"angmom_scale_joule_s", reduced.scales.angmom_scale}};
  if (beta > 0.0) {
    const double nu_ch = ringvac::characteristic_nu(beta, 1);
    j["has_discontinuities"] = true;
    j["nu_ch"] = nu_ch;
    j["omega_ch_rad_per_s"] =
        ringvac::to_si_frequency(nu_ch, reduced.scales);
  } else {
    j["has_discontinuities"] = false;
    j["nu_ch"] = nullptr;
    j["omega_ch_rad_per_s"] = nullptr;
  }
  {
    const auto w = ringvac::winding(o.nu, beta);
    j["winding_at_nu"] = ordered_json{{"nu", o.nu},
                                      {"m_wind", w.m_wind},
                                      {"c_factor", ringvac::enhancement(w).c_factor},
                                      {"at_jump", w.at_jump}};
  }
  {
    const auto report = ringvac::global_minimum(beta, i_cl_hat, o.nu_max);
    j["ground_state"] = ordered_json{
        {"nu_star", report.nu_star},
        {"omega_star_rad_per_s",
         ringvac::to_si_frequency(report.nu_star, reduced.scales)},
        {"e_star", report.e_star},
        {"e_star_joule", ringvac::to_si_energy(report.e_star, reduced.scales)},
        {"rotating_ground_state", report.rotating_ground_state},
        {"boundary_hit", report.boundary_hit}};
  }
  j["provenance"] = provenance(
      "estimate", ordered_json{{"nu", o.nu}, {"nu_max", o.nu_max}});
  write_output(o.output, json_content(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-point rotational energy of a ring with a Dirichlet cut"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("ringvac ") + ringvac::kVersion);
  app.set_config("--config");  // optional INI file; command-line flags override

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate total energy and angular momentum over a nu grid");
  sweep_cmd->add_option("--beta", sweep.beta, "flux parameter e B R^2 / hbar");
  sweep_cmd->add_option("--i-cl-hat", sweep.i_cl_hat,
                        "classical moment of inertia, units hbar R / c");
  sweep_cmd->add_option("--nu-max", sweep.nu_max, "grid end (inclusive)");
  sweep_cmd->add_option("--nu-step", sweep.nu_step, "grid step");
  sweep_cmd->add_option("--field", sweep.field, "neutral or charged")
      ->check(CLI::IsMember({"neutral", "charged"}));
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--output", sweep.output, "output path (default stdout)");
  sweep_cmd->callback([&] { run_sweep(sweep); });

  MinimizeOptions minimize;
  auto* min_cmd = app.add_subcommand(
      "minimize", "exact global minimum of the total energy landscape");
  min_cmd->add_option("--beta", minimize.beta, "flux parameter");
  min_cmd->add_option("--i-cl-hat", minimize.i_cl_hat, "classical moment of inertia");
  min_cmd->add_option("--nu-max", minimize.nu_max, "exclusive search bound");
  min_cmd->add_option("--endpoint-eps", minimize.endpoint_eps,
                      "offset for excluded-supremum candidates");
  min_cmd->add_option("--field", minimize.field, "neutral or charged")
      ->check(CLI::IsMember({"neutral", "charged"}));
  min_cmd->add_option("--radius-si", minimize.radius_si,
                      "ring radius in meters, enables SI conversions");
  min_cmd->add_option("--output", minimize.output, "output path (default stdout)");
  min_cmd->callback([&] { run_minimize(minimize); });

  BranchesOptions branches;
  auto* br_cmd = app.add_subcommand(
      "branches", "constant-winding branch decomposition of [0, nu_max)");
  br_cmd->add_option("--beta", branches.beta, "flux parameter");
  br_cmd->add_option("--i-cl-hat", branches.i_cl_hat, "classical moment of inertia");
  br_cmd->add_option("--nu-max", branches.nu_max, "exclusive bound");
  br_cmd->add_option("--format", branches.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  br_cmd->add_option("--output", branches.output, "output path (default stdout)");
  br_cmd->callback([&] { run_branches(branches); });

  GreensOptions greens;
  auto* gr_cmd = app.add_subcommand(
      "greens", "structure function and Green function evaluation");
  gr_cmd->add_option("--x", greens.x, "half-angle argument");
  gr_cmd->add_option("--y", greens.y, "half-angle argument");
  gr_cmd->add_option("--z", greens.z, "retarded argument");
  gr_cmd->add_option("--delta", greens.delta, "Abel damping");
  gr_cmd->add_option("--m-max", greens.m_max, "series truncation");
  gr_cmd->add_option("--green", greens.green,
                     "evaluate a Green function instead: static or rotating")
      ->check(CLI::IsMember({"static", "rotating"}));
  gr_cmd->add_option("--t", greens.t, "first time argument");
  gr_cmd->add_option("--tp", greens.tp, "second time argument");
  gr_cmd->add_option("--phi", greens.phi, "first angle");
  gr_cmd->add_option("--phip", greens.phip, "second angle");
  gr_cmd->add_option("--nu", greens.nu, "angular velocity (rotating)");
  gr_cmd->add_option("--output", greens.output, "output path (default stdout)");
  gr_cmd->callback([&] { run_greens(greens); });

  T00Options t00;
  auto* t00_cmd = app.add_subcommand(
      "t00", "point-split vacuum energy density at (nu, phi)");
  t00_cmd->add_option("--nu", t00.nu, "angular velocity");
  t00_cmd->add_option("--phi", t00.phi, "angle");
  t00_cmd->add_option("--dt", t00.dt, "splitting ladder (repeatable, decreasing)");
  t00_cmd->add_option("--stencil-h", t00.stencil_h, "derivative stencil step");
  t00_cmd->add_option("--order", t00.order, "extrapolation order");
  t00_cmd->add_option("--output", t00.output, "output path (default stdout)");
  t00_cmd->callback([&] { run_t00(t00); });

  VerifyOptions verify;
  int verify_exit = 0;
  auto* ver_cmd = app.add_subcommand(
      "verify", "cross-module oracle suite; exit 0 iff every check passes");
  ver_cmd->add_option("--seed", verify.seed, "seed for the sampled checks");
  ver_cmd->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ver_cmd->add_option("--output", verify.output, "output path (default stdout)");
  ver_cmd->callback([&] { verify_exit = run_verify(verify); });

  EstimateOptions estimate;
  auto* est_cmd = app.add_subcommand(
      "estimate", "SI estimation for a physical ring");
  est_cmd->add_option("--radius-si", estimate.radius_si, "ring radius in meters")
      ->required();
  est_cmd->add_option("--b-field-si", estimate.b_field_si, "magnetic field in tesla");
  est_cmd->add_option("--i-cl-si", estimate.i_cl_si,
                      "classical moment of inertia in kg m^2");
  est_cmd->add_option("--mass-per-length", estimate.mass_per_length,
                      "linear mass density in kg/m (alternative to --i-cl-si)");
  est_cmd->add_option("--charge-quanta", estimate.charge_quanta,
                      "excitation charge in units of e");
  est_cmd->add_option("--nu", estimate.nu, "report the winding at this nu");
  est_cmd->add_option("--nu-max", estimate.nu_max, "ground-state search bound");
  est_cmd->add_option("--output", estimate.output, "output path (default stdout)");
  est_cmd->callback([&] { run_estimate(estimate); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return verify_exit;
}
