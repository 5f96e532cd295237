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

#include "olf/lawson.hpp"

#include <cmath>

#include "olf/error.hpp"

namespace olf {

namespace {

using Spec = SpectralState;

struct Factors {
  std::vector<double> half;
  std::vector<double> full;
};

Factors heat_factors(const Grid& g, double dt) {
  Factors f;
  f.half.resize(g.spectral_size());
  f.full.resize(g.spectral_size());
  for_each_mode(g, [&](const Mode& m) {
    f.half[m.index] = std::exp(-m.k2 * 0.5 * dt);
    f.full[m.index] = std::exp(-m.k2 * dt);
  });
  return f;
}

// x <- E x on diffusive components.
void apply(Spec& x, const std::vector<double>& e, const std::vector<bool>& diffusive) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (!diffusive[c]) continue;
    for (std::size_t q = 0; q < x[c].size(); ++q) x[c][q] *= e[q];
  }
}

// a + s b
Spec combine(const Spec& a, double s, const Spec& b) {
  Spec out = a;
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t q = 0; q < a[c].size(); ++q) out[c][q] += s * b[c][q];
  return out;
}

}  // namespace

SpectralState lawson_rk4(const SpectralState& y0, double dt, const LawsonSystem& system) {
  if (y0.size() != system.diffusive.size()) {
    throw Error(ErrorKind::shape, "component count does not match the diffusive mask");
  }
  const Grid& g = y0.front().grid();
  const Factors fac = heat_factors(g, dt);
  const auto& mask = system.diffusive;

  auto nonlinear = [&](const Spec& s) {
    Spec out = system.remainder(s);
    if (system.dealias)
      for (auto& c : out) dealias(c);
    return out;
  };

  const Spec a = nonlinear(y0);
  Spec stage = combine(y0, 0.5 * dt, a);
  apply(stage, fac.half, mask);
  const Spec b = nonlinear(stage);

  Spec y_half = y0;
  apply(y_half, fac.half, mask);
  const Spec c = nonlinear(combine(y_half, 0.5 * dt, b));

  Spec c_half = c;
  apply(c_half, fac.half, mask);
  Spec y_full = y0;
  apply(y_full, fac.full, mask);
  const Spec d = nonlinear(combine(y_full, dt, c_half));

  Spec a_full = a;
  apply(a_full, fac.full, mask);
  Spec bc = combine(b, 1.0, c);
  apply(bc, fac.half, mask);
  Spec next = combine(y_full, dt / 6.0, a_full);
  next = combine(next, dt / 3.0, bc);
  return combine(next, dt / 6.0, d);
}

}  // namespace olf
