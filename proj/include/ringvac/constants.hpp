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

#ifndef RINGVAC_CONSTANTS_HPP_
#define RINGVAC_CONSTANTS_HPP_

#include <numbers>

namespace ringvac {

inline constexpr const char* kVersion = "1.0.0";

// CODATA 2018 defining constants, fixed at compile time rather than read from
// any runtime source so that CLI output is bit-reproducible.
inline constexpr double kElementaryChargeSi = 1.602176634e-19;  // C
inline constexpr double kHbarSi = 1.054571817e-34;              // J s
inline constexpr double kSpeedOfLightSi = 2.99792458e8;         // m / s

inline constexpr double kPi = std::numbers::pi;

namespace detail {
// pi to long double precision, for the extended-precision internals.
inline constexpr long double kPiL = std::numbers::pi_v<long double>;
}  // namespace detail

}  // namespace ringvac

#endif  // RINGVAC_CONSTANTS_HPP_
