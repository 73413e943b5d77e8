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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "ringvac/closed_form.hpp"

using namespace ringvac;

TEST_CASE("neutral zero-point energy and its moment of inertia") {
  CHECK(zp_energy_neutral(0.0) == -1.0 / 48.0);
  CHECK_THAT(zp_energy_neutral(0.5),
             Catch::Matchers::WithinRel(-1.25 / 48.0, 1e-15));
  CHECK(zp_energy_neutral(0.3) == zp_energy_neutral(-0.3));
  CHECK_THROWS_AS(zp_energy_neutral(1.0), std::domain_error);

  CHECK(zp_moment_of_inertia() == -1.0 / 24.0);

  // Second difference reproduces the curvature at nu = 0 to rounding of the
  // stencil; h is an exact power of two so h^2 carries no extra error.
  const double h = 0x1.0p-13;
  const double d2 =
      (zp_energy_neutral(h) - 2.0 * zp_energy_neutral(0.0) +
       zp_energy_neutral(-h)) /
      (h * h);
  CHECK_THAT(d2, Catch::Matchers::WithinAbs(zp_moment_of_inertia(), 1e-9));

  // hbar R / (24 c) at R = 1 m: about 20 orders below a single electron mass
  // moment, yet negative.
  CHECK_THAT(zp_moment_of_inertia_si(1.0),
             Catch::Matchers::WithinRel(-1.4656970581628173e-44, 1e-12));
  CHECK_THROWS_AS(zp_moment_of_inertia_si(0.0), std::domain_error);
}

TEST_CASE("winding number floors the flux argument exactly") {
  const auto w = winding(0.02, 100.0);
  CHECK_THAT(w.arg, Catch::Matchers::WithinRel(2.0008003201280512, 1e-15));
  CHECK(w.m_wind == 2);
  CHECK_FALSE(w.at_jump);

  CHECK(winding(0.0, 100.0).m_wind == 0);
  CHECK(winding(-0.02, 100.0).m_wind == -3);  // floor, not truncation
  CHECK(winding(0.5, 0.0).m_wind == 0);

  // Just below / just above the first jump.
  const double nu1 = characteristic_nu(100.0, 1);
  CHECK(winding(nu1 - 1e-9, 100.0).m_wind == 0);
  CHECK(winding(nu1 + 1e-9, 100.0).m_wind == 1);

  CHECK_THROWS_AS(winding(1.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(winding(0.5, 2e19), std::overflow_error);
}

TEST_CASE("jump proximity is flagged, not rounded away") {
  // The double closest to nu_1 lands within ~1e-16 of the integer argument.
  const double nu1 = characteristic_nu(100.0, 1);
  CHECK(winding(nu1, 100.0).at_jump);
  CHECK_FALSE(winding(nu1 + 1e-9, 100.0).at_jump);
  CHECK_FALSE(winding(nu1 - 1e-9, 100.0).at_jump);
  CHECK(winding(0.0, 100.0).at_jump);  // arg = 0 is an integer
  // Loosening the tolerance widens the flagged neighborhood.
  CHECK(winding(nu1 + 1e-9, 100.0, 1e-5).at_jump);
}

TEST_CASE("enhancement coefficient") {
  CHECK(enhancement(0LL).c_factor == 1);
  CHECK(enhancement(1LL).c_factor == 13);
  CHECK(enhancement(2LL).c_factor == 37);
  CHECK(enhancement(3LL).c_factor == 73);
  CHECK(enhancement(4LL).c_factor == 121);
  CHECK(enhancement(5LL).c_factor == 181);
  // M -> -M - 1 symmetry of M (M + 1).
  CHECK(enhancement(-1LL).c_factor == 1);
  CHECK(enhancement(-3LL).c_factor == enhancement(2LL).c_factor);
  CHECK_THROWS_AS(enhancement(2000000000LL), std::overflow_error);
}

TEST_CASE("charged zero-point energy and angular momentum") {
  // beta = 100, nu = 0.02 sits on the M = 2 branch: C = 37.
  CHECK_THAT(zp_energy_charged(0.02, 100.0),
             Catch::Matchers::WithinRel(-1.5422833333333333, 1e-14));
  CHECK_THAT(zp_angmom_charged(0.02, 100.0),
             Catch::Matchers::WithinRel(-37.0 * 0.02 / 12.0, 1e-14));

  // Vanishing field: exactly twice the neutral energy, bit for bit.
  for (int k = -8; k <= 8; ++k) {
    const double nu = 0.97 * k / 8.0;
    CHECK(zp_energy_charged(nu, 0.0) == 2.0 * zp_energy_neutral(nu));
  }

  // Evenness / oddness away from jumps, also bit for bit.
  for (double nu : {0.02, 0.13, 0.31, 0.57}) {
    CHECK(zp_energy_charged(nu, 100.0) == zp_energy_charged(-nu, 100.0));
    CHECK(zp_energy_charged(nu, 100.0) == zp_energy_charged(nu, -100.0));
    CHECK(zp_angmom_charged(-nu, 100.0) == -zp_angmom_charged(nu, 100.0));
  }
}

TEST_CASE("characteristic frequencies solve the jump condition") {
  const double beta = 100.0;
  const double expected[] = {0.009999000199950014, 0.01999200639360716,
                             0.02997304849092482, 0.03993620398445249,
                             0.04987562112089027};
  for (int n = 1; n <= 5; ++n) {
    const double nu_n = characteristic_nu(beta, n);
    CHECK_THAT(nu_n, Catch::Matchers::WithinRel(expected[n - 1], 1e-15));
    // By construction the flux argument equals n there.
    CHECK_THAT(beta * nu_n / (1.0 - nu_n * nu_n),
               Catch::Matchers::WithinAbs(static_cast<double>(n), 1e-12));
    CHECK(winding(nu_n + 1e-9, beta).m_wind == n);
  }

  // Subtraction-free form stays accurate in the stiff regime beta >> n.
  CHECK_THAT(characteristic_nu(1e8, 1), Catch::Matchers::WithinRel(1e-8, 1e-12));

  CHECK_THROWS_AS(characteristic_nu(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(characteristic_nu(100.0, 0), std::domain_error);
}
