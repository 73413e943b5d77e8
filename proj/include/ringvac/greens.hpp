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

#ifndef RINGVAC_GREENS_HPP_
#define RINGVAC_GREENS_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ringvac/constants.hpp"
#include "ringvac/errors.hpp"
#include "ringvac/extrapolation.hpp"

namespace ringvac {

// Arguments of the structure function
//
//   calG(x, y, z) = sum_{m >= 1} sin(m x) sin(m y) e^{-i m z} / m
//
// The Feynman prescription is realized as Abel damping z -> z - i delta,
// which multiplies the m-th term by e^{-m delta}.
struct GPoint {
  double x = 0.0;      // half-angle argument, [0, pi]
  double y = 0.0;      // half-angle argument, [0, pi]
  double z = 0.0;      // retarded argument
  double delta = 0.0;  // damping; must be > 0 for the series form
};

namespace detail {

// ln(1 - e^{i theta - delta}) on the principal branch.  The real part of the
// log argument is assembled as
//   1 - e^{-delta} cos(theta) = (1 - e^{-delta}) + 2 e^{-delta} sin^2(theta/2)
// so it stays accurate when theta and delta are both small.  With delta >= 0
// the argument never crosses the negative real axis, so summing the four
// factor logs separately (rather than taking one log of the product) cannot
// pick up spurious 2 pi i jumps.
inline std::complex<long double> log_one_minus_damped_phase(long double theta,
                                                            long double delta) {
  const long double ed = std::exp(-delta);
  const long double sh = std::sin(0.5L * theta);
  const long double re = -std::expm1(-delta) + 2.0L * ed * sh * sh;
  const long double im = -ed * std::sin(theta);
  if (re * re + im * im < 1e-26L)
    throw singular_point_error(
        "calg_closed: log factor within 1e-13 of its branch point");
  return std::log(std::complex<long double>(re, im));
}

inline std::complex<long double> calg_closed_impl(long double x, long double y,
                                                  long double z,
                                                  long double delta) {
  // calG = (1/4) [ ln(1 - e^{i(x+y-z)}) + ln(1 - e^{-i(x+y+z)})
  //              - ln(1 - e^{i(x-y-z)}) - ln(1 - e^{i(-x+y-z)}) ]
  // with every exponent damped by e^{-delta}.
  const auto a = log_one_minus_damped_phase(x + y - z, delta);
  const auto b = log_one_minus_damped_phase(-(x + y + z), delta);
  const auto c = log_one_minus_damped_phase(x - y - z, delta);
  const auto d = log_one_minus_damped_phase(-x + y - z, delta);
  return 0.25L * ((a + b) - (c + d));
}

inline long double mod_two_pi(long double v) {
  const long double two_pi = 2.0L * kPiL;
  long double r = std::fmod(v, two_pi);
  if (r < 0.0L) r += two_pi;
  return r;
}

// Rotating-ring Green function in co-rotating angles theta = [phi - nu t] mod
// 2 pi.  The static case is the nu = 0 specialization.
inline std::complex<long double> green_rotating_impl(long double t, long double tp,
                                                     long double phi,
                                                     long double phip,
                                                     long double nu,
                                                     long double delta) {
  const long double th = mod_two_pi(phi - nu * t);
  const long double thp = mod_two_pi(phip - nu * tp);
  const long double z =
      0.5L * std::fabs((1.0L - nu * nu) * (t - tp) - nu * (th - thp));
  const auto g = calg_closed_impl(0.5L * th, 0.5L * thp, z, delta);
  // i / pi prefactor
  return std::complex<long double>(-g.imag() / kPiL, g.real() / kPiL);
}

}  // namespace detail

inline std::complex<double> calg_closed(const GPoint& p) {
  if (!(p.delta >= 0.0))
    throw std::domain_error("calg_closed: delta must be >= 0");
  const auto v = detail::calg_closed_impl(p.x, p.y, p.z, p.delta);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

struct SeriesSum {
  std::complex<double> value;
  double tail_bound = 0.0;  // crude bound on the dropped tail
};

// Damped partial sum of the defining series.  Refuses delta = 0: there the
// series is only conditionally convergent and partial sums oscillate without
// settling.  Phase factors advance by rotor multiplication, one complex
// multiply per factor per term; the accumulated rotor drift is of order
// m_max * machine epsilon, far below the tail bound at any usable m_max.
inline SeriesSum calg_series(const GPoint& p, std::int64_t m_max) {
  if (m_max < 1) throw std::invalid_argument("calg_series: m_max >= 1 required");
  if (!(p.delta > 0.0))
    throw std::invalid_argument(
        "calg_series: delta > 0 required (Abel damping of a conditionally "
        "convergent series)");
  using C = std::complex<long double>;
  const long double x = p.x, y = p.y, z = p.z, delta = p.delta;
  const C step_x(std::cos(x), std::sin(x));
  const C step_y(std::cos(y), std::sin(y));
  const long double damp = std::exp(-delta);
  const C step_z(damp * std::cos(z), -damp * std::sin(z));
  C ux = step_x, uy = step_y, uz = step_z;  // e^{imx}, e^{imy}, e^{-m(delta+iz)}
  C acc(0.0L, 0.0L);
  for (std::int64_t m = 1; m <= m_max; ++m) {
    acc += (ux.imag() * uy.imag() / static_cast<long double>(m)) * uz;
    ux *= step_x;
    uy *= step_y;
    uz *= step_z;
  }
  SeriesSum out;
  out.value = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  out.tail_bound = static_cast<double>(
      std::exp(-delta * static_cast<long double>(m_max)) /
      (delta * static_cast<long double>(m_max)));
  return out;
}

// G(t, t'; phi, phi') = (i / pi) calG(phi/2, phi'/2, |t - t'| / 2), R = 1.
// Angles are wrapped into [0, 2 pi) first.
inline std::complex<double> green_static(double t, double tp, double phi,
                                         double phip, double delta) {
  if (!(delta >= 0.0)) throw std::domain_error("green_static: delta must be >= 0");
  const auto g = detail::green_rotating_impl(t, tp, phi, phip, 0.0L, delta);
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

// Rotating ring: with theta = [phi - nu t] mod 2 pi,
// G = (i / pi) calG(theta/2, theta'/2, |(1 - nu^2)(t - t') - nu (theta - theta')| / 2).
inline std::complex<double> green_rotating(double t, double tp, double phi,
                                           double phip, double nu,
                                           double delta) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("green_rotating: |nu| < 1 required");
  if (!(delta >= 0.0))
    throw std::domain_error("green_rotating: delta must be >= 0");
  const auto g = detail::green_rotating_impl(t, tp, phi, phip, nu, delta);
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

struct SplitConfig {
  // Time splittings for the short-distance expansion; after counterterm
  // subtraction the remainder is a series in dt^2, so a modest ladder with
  // order-2 extrapolation reaches ~1e-5 relative accuracy.  Values much
  // smaller than ~0.1 buy nothing: the stencil/counterterm cancellation
  // amplifies roundoff as 1/dt^4.
  std::vector<double> dt_sequence{0.4, 0.3, 0.2, 0.15};
  double stencil_h = 5e-6;  // step of the second-order derivative stencils
  int extrapolation_order = 2;

  void validate() const {
    if (dt_sequence.empty())
      throw std::invalid_argument("SplitConfig: empty dt_sequence");
    double prev = 0.5;
    for (double dt : dt_sequence) {
      if (!(dt > 0.0 && dt < prev))
        throw std::invalid_argument(
            "SplitConfig: dt values must be strictly decreasing within (0, 0.5)");
      prev = dt;
    }
    if (!(stencil_h > 0.0 && stencil_h <= dt_sequence.back() / 100.0))
      throw std::invalid_argument("SplitConfig: stencil_h must be << min(dt)");
    if (extrapolation_order < 1)
      throw std::invalid_argument("SplitConfig: extrapolation_order must be >= 1");
  }
};

// Point-split vacuum energy density at angle phi.
//
// For each dt the stencil evaluates (1 / 2i)(d_t d_t' + d_phi d_phi') G at
// (t, t + dt; phi, phi) with second-order central differences (four Green
// evaluations per derivative pair), adds back the universal short-distance
// divergence +1 / (2 pi dt^2), and the remaining smooth even function of dt
// is extrapolated to dt = 0.
//
// Everything runs in long double: the mixed stencil subtracts values agreeing
// to ~h^2 / dt^2 and the counterterm cancellation costs another ~4 digits,
// which is more than double precision can spare at the 1e-4 tolerance.  The
// damping is set to zero here; with dt > 0 every log factor is off its branch
// point, so no regulator beyond the point splitting itself is needed.
inline double t00_point_split(double nu, double phi,
                              const SplitConfig& cfg = {}) {
  if (!(std::abs(nu) < 1.0))
    throw std::domain_error("t00_point_split: |nu| < 1 required");
  cfg.validate();
  const long double h = cfg.stencil_h;
  const long double nul = nu;
  const long double ph = phi;

  std::vector<long double> xs, ys;
  xs.reserve(cfg.dt_sequence.size());
  ys.reserve(cfg.dt_sequence.size());
  for (double dt_in : cfg.dt_sequence) {
    const long double dt = dt_in;
    const auto g = [&](long double t, long double tp, long double a,
                       long double ap) {
      return detail::green_rotating_impl(t, tp, a, ap, nul, 0.0L);
    };
    const auto gtt = (g(h, dt + h, ph, ph) - g(h, dt - h, ph, ph) -
                      g(-h, dt + h, ph, ph) + g(-h, dt - h, ph, ph)) /
                     (4.0L * h * h);
    const auto gpp = (g(0.0L, dt, ph + h, ph + h) - g(0.0L, dt, ph + h, ph - h) -
                      g(0.0L, dt, ph - h, ph + h) + g(0.0L, dt, ph - h, ph - h)) /
                     (4.0L * h * h);
    // (1 / 2i)(gtt + gpp) has real part Im(gtt + gpp) / 2.
    const long double density = 0.5L * (gtt.imag() + gpp.imag()) +
                                1.0L / (2.0L * detail::kPiL * dt * dt);
    xs.push_back(std::pow(dt, static_cast<long double>(cfg.extrapolation_order)));
    ys.push_back(density);
  }

  const auto table = extrapolate_to_zero<long double>(xs, ys);
  if (table.residuals.size() >= 2 &&
      !(table.residuals.back() < table.residuals.front())) {
    std::vector<double> res(table.residuals.begin(), table.residuals.end());
    throw convergence_error(
        "t00_point_split: extrapolation residuals do not decrease", res);
  }
  return static_cast<double>(table.value);
}

}  // namespace ringvac

#endif  // RINGVAC_GREENS_HPP_
