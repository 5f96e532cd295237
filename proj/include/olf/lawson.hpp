// Copyright 2026 The OLF Authors
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

#pragma once

#include <functional>
#include <vector>

#include "olf/spectral.hpp"

namespace olf {

using SpectralState = std::vector<SpectralField>;

// Nonlinear remainder N(y) = dy/dt - lap y (diffusive components) or
// dy/dt (others), evaluated on and returned as Fourier coefficients.
using SpectralRate = std::function<SpectralState(const SpectralState&)>;

struct LawsonSystem {
  std::vector<bool> diffusive;
  SpectralRate remainder;
  // 2/3-rule truncation of the remainder.
  bool dealias = true;
};

// Options shared by the solver step functions.
struct StepOptions {
  // Reject steps above the documented stability bound.
  bool check_dt = true;
  bool dealias = true;
};

// One integrating-factor RK4 step with the exact heat factor exp(-|k|^2 t)
// on diffusive components:
//   a = N(y), b = N(E/2 (y + dt/2 a)), c = N(E/2 y + dt/2 b),
//   d = N(E y + dt E/2 c),
//   y+ = E y + dt/6 (E a + 2 E/2 (b + c) + d).
SpectralState lawson_rk4(const SpectralState& y, double dt, const LawsonSystem& system);

}  // namespace olf
