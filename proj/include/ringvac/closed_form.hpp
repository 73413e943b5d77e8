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

#ifndef RINGVAC_CLOSED_FORM_HPP_
#define RINGVAC_CLOSED_FORM_HPP_

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "ringvac/constants.hpp"

namespace ringvac {

inline constexpr double kDefaultJumpTol = 1e-12;

// Winding number M = floor(beta nu / (1 - nu^2)).
//
// Floating-point floor near an integer argument is the main correctness
// hazard here, so the argument is evaluated in extended precision and values
// within jump_tol (relative) of an integer are flagged rather than silently
// rounded.  Floor semantics put a jump frequency itself on the lower-energy
// branch: M = n exactly at arg = n.
struct WindingNumber {
  long long m_wind = 0;
  double arg = 0.0;
  bool at_jump = false;
};

struct EnhancementCoefficient {
  long long c_factor = 1;  // 1 + 6 M (M + 1), >= 1, == 1 iff M in {0, -1}
};

inline WindingNumber winding(double nu, double beta,
                             double jump_tol = kDefaultJumpTol) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("winding: |nu| < 1 required");
  const long double nul = nu;
  const long double arg =
      static_cast<long double>(beta) * nul / (1.0L - nul * nul);
  if (!(std::fabs(arg) < 9.0e18L))
    throw std::overflow_error("winding: floor argument exceeds integer range");
  WindingNumber w;
  w.arg = static_cast<double>(arg);
  w.m_wind = static_cast<long long>(std::floor(arg));
  const long double scale = std::max(1.0L, std::fabs(arg));
  w.at_jump = std::fabs(arg - std::round(arg)) <
              static_cast<long double>(jump_tol) * scale;
  return w;
}

inline EnhancementCoefficient enhancement(long long m_wind) {
  // 6 M (M + 1) must fit in 64 bits.
  if (std::llabs(m_wind) > 1200000000LL)
    throw std::overflow_error("enhancement: winding number too large");
  return {1 + 6 * m_wind * (m_wind + 1)};
}

inline EnhancementCoefficient enhancement(const WindingNumber& w) {
  return enhancement(w.m_wind);
}

// Total zero-point energy of the neutral cut ring, units of hbar c / R.
inline double zp_energy_neutral(double nu) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("zp_energy_neutral: |nu| < 1 required");
  return -(1.0 + nu * nu) / 48.0;
}

// Vacuum moment of inertia: d^2 E / d nu^2 at nu = 0, a negative quantity.
inline double zp_moment_of_inertia() { return -1.0 / 24.0; }

inline double zp_moment_of_inertia_si(double radius_si) {
  if (!(radius_si > 0.0))
    throw std::domain_error("zp_moment_of_inertia_si: radius must be positive");
  return -kHbarSi * radius_si / (24.0 * kSpeedOfLightSi);  // kg m^2
}

// Charged excitation in a magnetic field: the flux winding enhances the
// zero-point energy by C = 1 + 6 M (M + 1).  At beta = 0 this is exactly
// twice the neutral result (the charged field carries two real degrees of
// freedom).
inline double zp_energy_charged(double nu, double beta,
                                double jump_tol = kDefaultJumpTol) {
  const auto c = enhancement(winding(nu, beta, jump_tol));
  return -static_cast<double>(c.c_factor) * (1.0 + nu * nu) / 24.0;
}

inline double zp_angmom_charged(double nu, double beta,
                                double jump_tol = kDefaultJumpTol) {
  const auto c = enhancement(winding(nu, beta, jump_tol));
  return -static_cast<double>(c.c_factor) * nu / 12.0;
}

// n-th jump frequency: the positive root of beta nu / (1 - nu^2) = n,
//
//   nu_n = 2 n / (beta + sqrt(beta^2 + 4 n^2))
//
// written subtraction-free.  For beta >> n this approaches n / beta.
inline double characteristic_nu(double beta, long long n) {
  if (!(beta > 0.0))
    throw std::domain_error("characteristic_nu: beta > 0 required");
  if (n < 1) throw std::domain_error("characteristic_nu: n >= 1 required");
  const long double b = beta;
  const long double nn = static_cast<long double>(n);
  return static_cast<double>(2.0L * nn /
                             (b + std::sqrt(b * b + 4.0L * nn * nn)));
}

}  // namespace ringvac

#endif  // RINGVAC_CLOSED_FORM_HPP_
