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

#ifndef RINGVAC_VERIFY_HPP_
#define RINGVAC_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ringvac/closed_form.hpp"
#include "ringvac/greens.hpp"
#include "ringvac/landscape.hpp"
#include "ringvac/mode_spectrum.hpp"

namespace ringvac {

inline constexpr std::uint64_t kDefaultVerifySeed = 20260825;

// Reproducible uniform sampling.  std::uniform_real_distribution is
// implementation-defined, so the mantissa mapping is spelled out here; the
// same seed yields the same points on every platform.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

struct CheckResult {
  std::string name;
  double measured = 0.0;   // worst observed error for this check
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail {

struct GridScanResult {
  double nu_argmin = 0.0;
  double e_min = 0.0;
};

// Independent minimization oracle: dense grid scan over [0, nu_max) plus
// bisection refinement of every winding jump the grid detects (the energy
// jumps downward there, so the upper branch's left endpoint is the candidate
// the raw grid misses by up to a cell).  The domain boundary is probed just
// inside, like the minimizer's own boundary candidate.
inline GridScanResult grid_scan_minimum(double beta, double i_cl_hat,
                                        double nu_max, double step,
                                        FieldKind field) {
  GridScanResult best{0.0, total_energy(0.0, beta, i_cl_hat, field)};
  const auto consider = [&](double nu) {
    if (!(nu >= 0.0) || nu >= nu_max) return;
    const double e = total_energy(nu, beta, i_cl_hat, field);
    if (e < best.e_min) best = {nu, e};
  };

  const long long npts = static_cast<long long>(std::floor(nu_max / step));
  for (long long k = 1; k <= npts; ++k) consider(k * step);
  consider(nu_max - 1e-9);

  if (field == FieldKind::charged && beta > 0.0) {
    for (long long k = 0; k <= npts; ++k) {
      double lo = k * step;
      double hi = std::min((k + 1) * step, nu_max - 1e-12 * nu_max);
      if (!(lo < hi)) continue;
      const long long m_lo = winding(lo, beta).m_wind;
      if (winding(hi, beta).m_wind == m_lo) continue;
      // Bisect to the first crossing inside the cell.
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (winding(mid, beta).m_wind > m_lo)
          hi = mid;
        else
          lo = mid;
      }
      consider(lo);
      consider(hi);
    }
  }
  return best;
}

inline std::vector<double> make_grid(double lo, double step, long long count) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) g.push_back(lo + k * step);
  return g;
}

}  // namespace detail

// Cross-module oracle suite: every closed form checked against an
// independently regularized number.  Pure computation; the CLI front end owns
// formatting and exit codes.
inline std::vector<CheckResult> run_verify_suite(
    std::uint64_t seed = kDefaultVerifySeed) {
  std::vector<CheckResult> checks;
  const auto add = [&](std::string name, double measured, double tolerance) {
    checks.push_back(
        {std::move(name), measured, tolerance, measured <= tolerance});
  };

  // Mode-sum regulators against the static Casimir energy -1/48.
  {
    const Regulator fp{RegulatorKind::finite_part, {}, 2};
    const Regulator ec{RegulatorKind::exp_cutoff, {0.2, 0.1, 0.05}, 2};
    const double e_fp = casimir_energy_mode_sum(0.0, fp);
    const double e_ec = casimir_energy_mode_sum(0.0, ec);
    add("mode sum: static Casimir energy, exp-cutoff + Richardson",
        std::abs(e_ec + 1.0 / 48.0), 1e-8);
    add("mode sum: static Casimir energy, finite part",
        std::abs(e_fp + 1.0 / 48.0), 1e-10);
    add("mode sum: regulator agreement at nu = 0", std::abs(e_fp - e_ec), 1e-8);
  }

  // Structure function: damped series against the closed form.
  {
    SeededSampler s(seed);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      GPoint p;
      p.x = s.uniform(0.05, kPi - 0.05);
      p.y = s.uniform(0.05, kPi - 0.05);
      p.z = s.uniform(0.05, 3.0);
      p.delta = 1e-4;
      worst = std::max(worst,
                       std::abs(calg_closed(p) - calg_series(p, 1000000).value));
    }
    add("greens: series vs closed form at 50 seeded points", worst, 1e-6);
  }

  // Point splitting against the known densities.
  {
    const double target0 = -1.0 / (96.0 * kPi);
    const double t0 = t00_point_split(0.0, 2.0);
    add("t00: static density -1/(96 pi)", std::abs((t0 - target0) / target0),
        1e-4);
    const double target5 = -1.25 / (96.0 * kPi);
    const double d2 = t00_point_split(0.5, 2.0);
    add("t00: rotating density at nu = 0.5",
        std::abs((d2 - target5) / target5), 1e-4);
    const double da = t00_point_split(0.5, 0.5);
    const double dc = t00_point_split(0.5, 5.0);
    const double spread = std::max({std::abs(da - d2), std::abs(dc - d2),
                                    std::abs(da - dc)});
    add("t00: angle independence at nu = 0.5", spread, 1e-5);
  }

  // Vacuum moment of inertia from the energy curvature.  2^-13 has an exact
  // square, keeping the second difference roundoff-clean.
  {
    const double h = 0x1.0p-13;
    const double d2e = (zp_energy_neutral(h) - 2.0 * zp_energy_neutral(0.0) +
                        zp_energy_neutral(-h)) /
                       (h * h);
    add("closed form: vacuum moment of inertia by second difference",
        std::abs(d2e - zp_moment_of_inertia()), 1e-9);
  }

  // Charged-field internal relations.
  {
    double worst = 0.0;
    for (int k = 1; k <= 64; ++k) {
      const double nu = 0.9 * k / 64.0;
      worst = std::max(worst, std::abs(zp_energy_charged(nu, 0.0) -
                                       2.0 * zp_energy_neutral(nu)));
    }
    add("closed form: charged energy at beta = 0 equals twice neutral", worst,
        0.0);

    SeededSampler s(seed + 1);
    double worst_d = 0.0;
    double worst_sym = 0.0;
    int accepted = 0;
    while (accepted < 100) {
      const double beta = s.uniform(20.0, 200.0);
      const double nu = s.uniform(0.05, 0.6);
      const auto w = winding(nu, beta);
      if (w.at_jump) continue;
      // Keep the symmetric difference strictly inside the branch.
      const double darg_dnu =
          beta * (1.0 + nu * nu) / ((1.0 - nu * nu) * (1.0 - nu * nu));
      const double frac = w.arg - std::floor(w.arg);
      const double dist = std::min(frac, 1.0 - frac) / darg_dnu;
      const double h = std::min(1e-5, 0.25 * dist);
      if (h < 1e-7) continue;
      if (winding(nu + h, beta).m_wind != w.m_wind ||
          winding(nu - h, beta).m_wind != w.m_wind)
        continue;
      const double deriv =
          (zp_energy_charged(nu + h, beta) - zp_energy_charged(nu - h, beta)) /
          (2.0 * h);
      const double l = zp_angmom_charged(nu, beta);
      worst_d = std::max(worst_d, std::abs(deriv - l) / std::abs(l));
      worst_sym = std::max(
          {worst_sym,
           std::abs(zp_energy_charged(-nu, beta) - zp_energy_charged(nu, beta)),
           std::abs(zp_energy_charged(nu, -beta) - zp_energy_charged(nu, beta)),
           std::abs(zp_angmom_charged(-nu, beta) + zp_angmom_charged(nu, beta))});
      ++accepted;
    }
    add("closed form: dE/dnu equals L on branch at 100 seeded points", worst_d,
        1e-6);
    add("closed form: evenness and oddness at seeded points", worst_sym, 0.0);
  }

  // Landscape minimizer against the dense-scan oracle.
  {
    const auto report = global_minimum(100.0, 9000.0, 0.05);
    const auto oracle =
        detail::grid_scan_minimum(100.0, 9000.0, 0.05, 1e-6, FieldKind::charged);
    add("landscape: minimizer location vs grid oracle",
        std::abs(report.nu_star - oracle.nu_argmin), 1e-6);
    add("landscape: minimum value vs grid oracle",
        std::abs(report.e_star - oracle.e_min), 1e-9);
    const auto heavy = global_minimum(100.0, 1e6, 0.05);
    add("landscape: large inertia pins the minimum at nu = 0",
        std::abs(heavy.nu_star), 0.0);
  }

  // E(L) parametrics on the jump configuration.
  {
    const auto grid = detail::make_grid(0.0, 1e-4, 501);
    const auto rows = e_of_l_table(100.0, 9000.0, grid);
    const auto bad = single_valued_violations(rows, 0.05, 1e-6);
    add("landscape: E(L) single-valued on jump configuration",
        static_cast<double>(bad.size()), 0.0);

    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < rows.size(); ++k) {
      if (rows[k - 1].branch_n != rows[k + 1].branch_n ||
          rows[k - 1].branch_n != rows[k].branch_n)
        continue;
      const double dl = rows[k + 1].l_total - rows[k - 1].l_total;
      const double de = rows[k + 1].e_total - rows[k - 1].e_total;
      worst = std::max(worst, std::abs(de / dl - rows[k].nu));
    }
    add("landscape: dE/dL equals nu along branches", worst, 1e-4);
  }

  return checks;
}

}  // namespace ringvac

#endif  // RINGVAC_VERIFY_HPP_
