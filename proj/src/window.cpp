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

#include "olf/window.hpp"

#include <cmath>

#include "olf/balance.hpp"
#include "olf/error.hpp"
#include "olf/reduce.hpp"

namespace olf {

double Window::time_weight(double t) const {
  if (t1 <= t0) return 1.0;
  const double s = (2.0 * t - t0 - t1) / (t1 - t0);
  if (std::abs(s) >= 1.0) return 0.0;
  const double a = 1.0 - s * s;
  return a * a;
}

ScalarField Window::spatial_weight(const Grid& grid) const {
  if (!localized) return ScalarField(grid, 1.0);
  const double k = grid.k0();
  auto bump = [&](double x, double c) { return std::pow(0.5 * (1.0 + std::cos(k * (x - c))), power); };
  return sample(grid, [&](double x, double y, double z) {
    return bump(x, center[0]) * bump(y, center[1]) * bump(z, center[2]);
  });
}

std::vector<std::string> window_preset_names() {
  std::vector<std::string> out = {"global", "early", "late", "center"};
  for (int o = 0; o < 8; ++o) out.push_back("octant" + std::to_string(o));
  return out;
}

Window window_preset(const std::string& name, double t_begin, double t_end, double box) {
  Window w;
  w.name = name;
  w.t0 = t_begin;
  w.t1 = t_end;
  const double mid = 0.5 * (t_begin + t_end);
  if (name == "global") return w;
  if (name == "early") {
    w.t1 = mid;
    return w;
  }
  if (name == "late") {
    w.t0 = mid;
    return w;
  }
  if (name == "center") {
    w.localized = true;
    w.center = {0.5 * box, 0.5 * box, 0.5 * box};
    return w;
  }
  if (name.rfind("octant", 0) == 0 && name.size() == 7 && name[6] >= '0' && name[6] <= '7') {
    const int o = name[6] - '0';
    w.localized = true;
    for (int i = 0; i < 3; ++i) w.center[static_cast<std::size_t>(i)] = ((o >> i) & 1 ? 0.75 : 0.25) * box;
    return w;
  }
  throw Error(ErrorKind::schema, "unknown window preset '" + name + "'");
}

double windowed_integral(const std::vector<double>& times, const std::vector<ScalarField>& f,
                         const Window& window) {
  if (times.size() != f.size() || f.empty()) {
    throw Error(ErrorKind::data, "windowed integral needs matching, non-empty samples");
  }
  const ScalarField s = window.spatial_weight(f.front().grid());
  std::vector<double> slice(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    slice[i] = window.time_weight(times[i]) * inner_product(s, f[i]);
  if (times.size() == 1) return slice.front();
  return trapezoid(times, slice);
}

}  // namespace olf
