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

#ifndef RINGVAC_RINGVAC_HPP_
#define RINGVAC_RINGVAC_HPP_

// Umbrella header: zero-point rotational energy of a ring with a Dirichlet
// cut, in closed form and by independent numerical regularization, plus the
// global minimization of the resulting discontinuous energy landscape.

#include "ringvac/closed_form.hpp"
#include "ringvac/constants.hpp"
#include "ringvac/errors.hpp"
#include "ringvac/extrapolation.hpp"
#include "ringvac/greens.hpp"
#include "ringvac/landscape.hpp"
#include "ringvac/mode_spectrum.hpp"
#include "ringvac/units.hpp"
#include "ringvac/verify.hpp"

#endif  // RINGVAC_RINGVAC_HPP_
