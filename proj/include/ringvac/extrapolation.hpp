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

#ifndef RINGVAC_EXTRAPOLATION_HPP_
#define RINGVAC_EXTRAPOLATION_HPP_

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ringvac {

template <std::floating_point T>
struct ExtrapolationTable {
  T value{};               // best extrapolant, equals diagonal.back()
  std::vector<T> diagonal;  // extrapolants of increasing polynomial degree
  std::vector<T> residuals;  // |diagonal[k] - diagonal[k-1]|
};

// Polynomial extrapolation of the samples (x_i, y_i) to x = 0 by Neville's
// scheme.  For a Richardson ladder of step sizes h_i with a leading error
// term of order p, pass x_i = h_i^p.  x must be positive and strictly
// decreasing; the diagonal then records the degree-0..degree-(n-1)
// extrapolants, whose increments serve as convergence residuals.
template <std::floating_point T>
ExtrapolationTable<T> extrapolate_to_zero(std::span<const T> x,
                                          std::span<const T> y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("extrapolate_to_zero: mismatched or empty table");
  if (!(x[0] > T(0)))
    throw std::invalid_argument("extrapolate_to_zero: x must be positive");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > T(0) && x[i] < x[i - 1]))
      throw std::invalid_argument(
          "extrapolate_to_zero: x must be positive and strictly decreasing");

  std::vector<T> t(y.begin(), y.end());
  ExtrapolationTable<T> out;
  out.diagonal.push_back(t[0]);
  for (std::size_t j = 1; j < x.size(); ++j) {
    // After this pass t[k] holds the degree-j extrapolant over x_k..x_{k+j}.
    for (std::size_t k = 0; k + j < x.size(); ++k)
      t[k] = (t[k + 1] * x[k] - t[k] * x[k + j]) / (x[k] - x[k + j]);
    out.diagonal.push_back(t[0]);
    out.residuals.push_back(std::abs(out.diagonal[j] - out.diagonal[j - 1]));
  }
  out.value = out.diagonal.back();
  return out;
}

}  // namespace ringvac

#endif  // RINGVAC_EXTRAPOLATION_HPP_
