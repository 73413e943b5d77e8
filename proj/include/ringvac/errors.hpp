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

#ifndef RINGVAC_ERRORS_HPP_
#define RINGVAC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringvac {

// A closed-form log factor was evaluated too close to its branch point (the
// light-cone and image singularities of the structure function).
class singular_point_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Richardson ladder failed to converge.  Carries the residual table, the
// successive increments along the extrapolation diagonal, for diagnosis.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace ringvac

#endif  // RINGVAC_ERRORS_HPP_
