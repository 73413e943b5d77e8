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

#ifndef RINGVAC_UNITS_HPP_
#define RINGVAC_UNITS_HPP_

#include <cmath>
#include <stdexcept>

#include "ringvac/constants.hpp"

namespace ringvac {

// Reduced parameters.  All core math runs in natural units hbar = c = 1 with
// lengths in units of the ring radius R:
//
//   nu       = Omega R / c        dimensionless angular velocity, |nu| < 1
//   beta     = e B R^2 / hbar     magnetic flux parameter
//   i_cl_hat = I_cl c / (hbar R)  classical moment of inertia
//
// Energies come out in hbar c / R, angular momenta in hbar, frequencies in
// c / R.  With this reduction beta nu / (1 - nu^2) is the floor argument of
// the winding number.
struct DimensionlessState {
  double nu = 0.0;
  double beta = 0.0;
  double i_cl_hat = 0.0;
  double nu_max = 0.99;  // exclusive subluminal cap on |nu|

  void validate() const {
    if (!(std::isfinite(nu) && std::isfinite(beta) && std::isfinite(i_cl_hat)))
      throw std::domain_error("DimensionlessState: non-finite parameter");
    if (!(nu_max > 0.0 && nu_max < 1.0))
      throw std::domain_error("DimensionlessState: nu_max must lie in (0, 1)");
    if (!(std::abs(nu) < nu_max))
      throw std::domain_error("DimensionlessState: |nu| < nu_max required");
    if (i_cl_hat < 0.0)
      throw std::domain_error("DimensionlessState: i_cl_hat must be >= 0");
  }
};

// SI description of a device.  Give the classical moment of inertia directly,
// or a linear mass density from which I_cl = (2 pi R mu) R^2.
struct PhysicalRing {
  double radius_si = 0.0;        // m
  double b_field_si = 0.0;       // T
  double i_cl_si = 0.0;          // kg m^2
  double mass_per_length = 0.0;  // kg / m, used when i_cl_si == 0
  int charge_quanta = 1;         // excitation charge in units of e

  double moment_of_inertia_si() const {
    if (i_cl_si > 0.0) return i_cl_si;
    return 2.0 * kPi * radius_si * mass_per_length * radius_si * radius_si;
  }
};

struct UnitScales {
  double energy_scale = 0.0;     // hbar c / R, in J
  double frequency_scale = 0.0;  // c / R, in rad / s
  double angmom_scale = 0.0;     // hbar, in J s
};

struct ReducedRing {
  // state.nu is left at zero; the rotation rate is the caller's free input.
  DimensionlessState state;
  UnitScales scales;
};

inline ReducedRing reduce(const PhysicalRing& ring) {
  if (!(ring.radius_si > 0.0))
    throw std::domain_error("reduce: radius_si must be positive");
  const double i_cl = ring.moment_of_inertia_si();
  if (!(i_cl >= 0.0))
    throw std::domain_error("reduce: moment of inertia must be >= 0");
  const double r = ring.radius_si;
  ReducedRing out;
  out.state.beta = static_cast<double>(ring.charge_quanta) *
                   kElementaryChargeSi * ring.b_field_si * r * r / kHbarSi;
  out.state.i_cl_hat = i_cl * kSpeedOfLightSi / (kHbarSi * r);
  out.scales.frequency_scale = kSpeedOfLightSi / r;
  // Defined as the product so that the consistency relation
  // energy_scale == angmom_scale * frequency_scale holds exactly.
  out.scales.angmom_scale = kHbarSi;
  out.scales.energy_scale = out.scales.angmom_scale * out.scales.frequency_scale;
  return out;
}

inline double to_si_energy(double e_hat, const UnitScales& s) {
  return e_hat * s.energy_scale;
}
inline double from_si_energy(double e_si, const UnitScales& s) {
  return e_si / s.energy_scale;
}

inline double to_si_frequency(double nu, const UnitScales& s) {
  return nu * s.frequency_scale;
}
inline double from_si_frequency(double omega_si, const UnitScales& s) {
  return omega_si / s.frequency_scale;
}

inline double to_si_angmom(double l_hat, const UnitScales& s) {
  return l_hat * s.angmom_scale;
}
inline double from_si_angmom(double l_si, const UnitScales& s) {
  return l_si / s.angmom_scale;
}

}  // namespace ringvac

#endif  // RINGVAC_UNITS_HPP_
