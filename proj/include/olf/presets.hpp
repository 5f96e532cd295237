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

#include <cstdint>
#include <string>
#include <vector>

#include "olf/mhd.hpp"
#include "olf/mll.hpp"

namespace olf {

// Parameters shared by the seeded initial-data presets.
struct PresetParams {
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  // Spectral amplitude |f(k)| ~ |k|^-(sigma + 3/2), a Hoelder-sigma surrogate.
  double sigma = 2.0;
  long kmin = 1;
  long kmax = 4;
};

// Seeded band-limited random vector field with the spectral shape above,
// scaled to unit root-mean-square magnitude.
VectorField random_vector_field(const Grid& grid, const PresetParams& params);
// Same, Leray-projected and mean-free.
VectorField random_solenoidal_field(const Grid& grid, const PresetParams& params);
ScalarField random_scalar_field(const Grid& grid, const PresetParams& params);

// B = (a sin z + c cos y, b sin x + a cos z, c sin y + b cos x), curl B = B
// on the 2 pi box (wavenumbers scale with 2 pi / L).
VectorField abc_field(const Grid& grid, double a = 1.0, double b = 1.0, double c = 1.0);

// MHD presets: zero, abc, taylor-green, orszag-tang, random, rough.
MhdState mhd_preset(const Grid& grid, const std::string& name, MhdVariant variant,
                    const PresetParams& params);
// MLL presets: zero, uniform, perturbed, rough.
MllState mll_preset(const Grid& grid, const std::string& name, MllScheme scheme, double eps_pen,
                    const PresetParams& params);

std::vector<std::string> mhd_preset_names();
std::vector<std::string> mll_preset_names();

}  // namespace olf
