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

#ifndef RINGVAC_LANDSCAPE_HPP_
#define RINGVAC_LANDSCAPE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringvac/closed_form.hpp"

namespace ringvac {

enum class FieldKind {
  neutral,  // single smooth branch, zero-point part -(1 + nu^2) / 48
  charged,  // winding branches, zero-point part -C (1 + nu^2) / 24
};

// One maximal interval of constant winding number, half-open [nu_lo, nu_hi).
// On a branch the total energy is the parabola
//   E_n(nu) = curvature nu^2 - C / 24,  curvature = I_cl_hat / 2 - C / 24,
// so extrema can only sit at branch endpoints; that makes the global
// minimization an exact finite enumeration.
struct Branch {
  long long n = 0;
  double nu_lo = 0.0;
  double nu_hi = 0.0;
  long long c_factor = 1;
  double curvature = 0.0;
};

struct Candidate {
  double nu = 0.0;
  double e_total = 0.0;
  long long branch_n = 0;
  // True when nu approaches an excluded supremum (evaluated just inside).
  bool open_endpoint = false;
};

struct MinimumReport {
  double nu_star = 0.0;
  double e_star = 0.0;
  long long branch_n = 0;
  bool rotating_ground_state = false;  // e_star < E(0)
  bool boundary_hit = false;           // minimizer pressed against nu_max
  std::vector<Candidate> candidates;   // in branch order: left, right-limit
};

struct ELTableRow {
  double nu = 0.0;
  double l_total = 0.0;
  double e_total = 0.0;
  long long branch_n = 0;
};

inline double total_energy(double nu, double beta, double i_cl_hat,
                           FieldKind field = FieldKind::charged) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("total_energy: |nu| < 1 required");
  if (!(i_cl_hat >= 0.0))
    throw std::domain_error("total_energy: i_cl_hat must be >= 0");
  const double e_zp = field == FieldKind::charged ? zp_energy_charged(nu, beta)
                                                  : zp_energy_neutral(nu);
  return 0.5 * i_cl_hat * nu * nu + e_zp;
}

inline double total_angmom(double nu, double beta, double i_cl_hat,
                           FieldKind field = FieldKind::charged) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("total_angmom: |nu| < 1 required");
  if (!(i_cl_hat >= 0.0))
    throw std::domain_error("total_angmom: i_cl_hat must be >= 0");
  // The neutral zero-point part is I_zp nu = -nu / 24.
  const double l_zp = field == FieldKind::charged ? zp_angmom_charged(nu, beta)
                                                  : -nu / 24.0;
  return i_cl_hat * nu + l_zp;
}

// Ordered branch decomposition of [0, nu_max).  beta = 0 degenerates to the
// single branch n = 0.  i_cl_hat only enters the curvature bookkeeping.
inline std::vector<Branch> enumerate_branches(double beta, double nu_max,
                                              double i_cl_hat = 0.0) {
  if (!(beta >= 0.0))
    throw std::domain_error("enumerate_branches: beta >= 0 required");
  if (!(nu_max > 0.0 && nu_max < 1.0))
    throw std::domain_error("enumerate_branches: nu_max must lie in (0, 1)");
  std::vector<Branch> out;
  const auto curv = [&](long long c) {
    return 0.5 * i_cl_hat - static_cast<double>(c) / 24.0;
  };
  if (beta == 0.0) {
    out.push_back({0, 0.0, nu_max, 1, curv(1)});
    return out;
  }
  // Resource guard, not physics: the branch count is ~beta nu_max / (1 - nu_max^2).
  if (beta * nu_max / (1.0 - nu_max * nu_max) > 1e7)
    throw std::invalid_argument("enumerate_branches: more than 1e7 branches");
  double lo = 0.0;
  for (long long n = 0;; ++n) {
    const long long c = enhancement(n).c_factor;
    const double hi = characteristic_nu(beta, n + 1);
    if (hi >= nu_max) {
      out.push_back({n, lo, nu_max, c, curv(c)});
      break;
    }
    out.push_back({n, lo, hi, c, curv(c)});
    lo = hi;
  }
  return out;
}

// Exact global minimization over [0, nu_max) (the landscape is even in nu;
// the non-negative representative is reported).  On each branch the energy is
// a parabola, monotone between endpoints, so the minimizer is found by
// evaluating every branch's included left endpoint and its right limit point
// (nu_hi - endpoint_eps, excluded supremum).  Candidate energies come from
// the branch parabola itself, which keeps left-endpoint values on the
// lower-energy branch regardless of floating-point floor jitter at the
// crossing.  Ties break toward smaller |nu|, then smaller branch index.
inline MinimumReport global_minimum(double beta, double i_cl_hat, double nu_max,
                                    FieldKind field = FieldKind::charged,
                                    double endpoint_eps = 1e-9) {
  if (!(i_cl_hat >= 0.0))
    throw std::domain_error("global_minimum: i_cl_hat must be >= 0");
  if (!(endpoint_eps > 0.0))
    throw std::domain_error("global_minimum: endpoint_eps must be positive");

  std::vector<Branch> branches;
  if (field == FieldKind::charged) {
    branches = enumerate_branches(beta, nu_max, i_cl_hat);
  } else {
    branches.push_back({0, 0.0, nu_max, 1, 0.5 * i_cl_hat - 1.0 / 48.0});
  }
  const double offset_scale = field == FieldKind::charged ? 24.0 : 48.0;

  MinimumReport report;
  report.candidates.reserve(2 * branches.size());
  std::size_t best = 0;
  std::size_t boundary_index = static_cast<std::size_t>(-1);
  for (const Branch& b : branches) {
    const auto energy_on_branch = [&](double nu) {
      return b.curvature * nu * nu -
             static_cast<double>(b.c_factor) / offset_scale;
    };
    const double eps = std::min(endpoint_eps, (b.nu_hi - b.nu_lo) / 16.0);
    const double nu_right = b.nu_hi - eps;
    report.candidates.push_back({b.nu_lo, energy_on_branch(b.nu_lo), b.n, false});
    if (b.nu_hi == nu_max) boundary_index = report.candidates.size();
    report.candidates.push_back({nu_right, energy_on_branch(nu_right), b.n, true});
  }
  for (std::size_t i = 1; i < report.candidates.size(); ++i) {
    const Candidate& c = report.candidates[i];
    const Candidate& b = report.candidates[best];
    if (c.e_total < b.e_total ||
        (c.e_total == b.e_total &&
         (std::abs(c.nu) < std::abs(b.nu) ||
          (std::abs(c.nu) == std::abs(b.nu) && c.branch_n < b.branch_n))))
      best = i;
  }

  const Candidate& winner = report.candidates[best];
  report.nu_star = winner.nu;
  report.e_star = winner.e_total;
  report.branch_n = winner.branch_n;
  report.boundary_hit = best == boundary_index;
  report.rotating_ground_state = winner.e_total < report.candidates[0].e_total;
  return report;
}

// Parametric (L, E) table over a nu grid, rows sorted by nu.
inline std::vector<ELTableRow> e_of_l_table(double beta, double i_cl_hat,
                                            std::span<const double> nu_grid,
                                            FieldKind field = FieldKind::charged) {
  std::vector<ELTableRow> rows;
  rows.reserve(nu_grid.size());
  for (double nu : nu_grid) {
    ELTableRow row;
    row.nu = nu;
    row.l_total = total_angmom(nu, beta, i_cl_hat, field);
    row.e_total = total_energy(nu, beta, i_cl_hat, field);
    row.branch_n =
        field == FieldKind::charged ? winding(nu, beta).m_wind : 0;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const ELTableRow& a, const ELTableRow& b) { return a.nu < b.nu; });
  return rows;
}

// Pairs of rows that would make E(L) multivalued: nearly equal angular
// momentum but distinct energy.  Configurations with L strictly increasing in
// nu must produce none.
inline std::vector<std::pair<std::size_t, std::size_t>> single_valued_violations(
    std::span<const ELTableRow> rows, double l_tol, double e_tol) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].l_total < rows[b].l_total;
  });
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (rows[order[j]].l_total - rows[order[i]].l_total >= l_tol) break;
      if (std::abs(rows[order[j]].e_total - rows[order[i]].e_total) > e_tol)
        bad.emplace_back(std::min(order[i], order[j]),
                         std::max(order[i], order[j]));
    }
  }
  return bad;
}

}  // namespace ringvac

#endif  // RINGVAC_LANDSCAPE_HPP_
