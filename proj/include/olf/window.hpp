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

#include <array>
#include <string>
#include <vector>

#include "olf/field.hpp"

namespace olf {

// Space-time test function chi(t, x) = T(t) S(x).
//
//   T(t) = (1 - s^2)^2 with s = (2t - t0 - t1) / (t1 - t0), zero outside
//          [t0, t1]; a degenerate interval (t0 == t1) gives T = 1.
//   S(x) = prod_i ((1 + cos(k0 (x_i - c_i))) / 2)^q when localized, else 1.
struct Window {
  std::string name;
  double t0 = 0.0;
  double t1 = 0.0;
  bool localized = false;
  std::array<double, 3> center{};
  double power = 2.0;

  double time_weight(double t) const;
  ScalarField spatial_weight(const Grid& grid) const;
};

// Presets: global, early, late, center, octant0 .. octant7.  The time
// interval is [t_begin, t_end] of the trajectory (early/late: its halves).
Window window_preset(const std::string& name, double t_begin, double t_end, double box);
std::vector<std::string> window_preset_names();

// int int chi f dx dt over stored samples, trapezoid in time.  A single
// sample yields the spatial integral at that instant.
double windowed_integral(const std::vector<double>& times, const std::vector<ScalarField>& f,
                         const Window& window);

}  // namespace olf
