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

#include "olf/presets.hpp"

#include <cmath>
#include <random>

#include "olf/error.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"

namespace olf {

namespace {

// Uniform deviate in [-1, 1) from the raw engine output, identical on every
// standard library.
double deviate(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

ScalarField shaped_noise(const Grid& grid, std::mt19937_64& rng, const PresetParams& p) {
  ScalarField noise(grid);
  for (double& v : noise.data()) v = deviate(rng);
  SpectralField s = forward(noise);
  for_each_mode(grid, [&](const Mode& m) {
    const double r = std::sqrt(static_cast<double>(m.w[0] * m.w[0] + m.w[1] * m.w[1] +
                                                   m.w[2] * m.w[2]));
    const bool keep = r >= static_cast<double>(p.kmin) - 1e-12 &&
                      r <= static_cast<double>(p.kmax) + 1e-12 && m.kd2 > 0.0 && r > 0.0;
    s[m.index] *= keep ? std::pow(r, -(p.sigma + 1.5)) : 0.0;
  });
  return inverse(s);
}

void normalize_rms(VectorField& v, double target) {
  const double rms = lp_norm(v, 2.0) / std::sqrt(v.grid().volume());
  if (rms > 0.0) v *= target / rms;
}

void unit_normalize(VectorField& m) {
  for (std::size_t i = 0; i < m[0].size(); ++i) {
    const double r = std::sqrt(m[0][i] * m[0][i] + m[1][i] * m[1][i] + m[2][i] * m[2][i]);
    if (r > 0.0)
      for (int c = 0; c < 3; ++c) m[c][i] /= r;
  }
}

PresetParams with_seed(PresetParams p, std::uint64_t offset) {
  p.seed = p.seed * 1000003ULL + offset;
  return p;
}

}  // namespace

VectorField random_vector_field(const Grid& grid, const PresetParams& params) {
  std::mt19937_64 rng(params.seed);
  VectorField v(shaped_noise(grid, rng, params), shaped_noise(grid, rng, params),
                shaped_noise(grid, rng, params));
  normalize_rms(v, 1.0);
  return v;
}

VectorField random_solenoidal_field(const Grid& grid, const PresetParams& params) {
  VectorField v = leray_project(random_vector_field(grid, params));
  const auto mean = v.mean();
  for (int c = 0; c < 3; ++c)
    for (double& x : v[c].data()) x -= mean[static_cast<std::size_t>(c)];
  normalize_rms(v, 1.0);
  return v;
}

ScalarField random_scalar_field(const Grid& grid, const PresetParams& params) {
  std::mt19937_64 rng(params.seed);
  ScalarField f = shaped_noise(grid, rng, params);
  const double rms = lp_norm(f, 2.0) / std::sqrt(grid.volume());
  if (rms > 0.0) f *= 1.0 / rms;
  return f;
}

VectorField abc_field(const Grid& grid, double a, double b, double c) {
  const double k = grid.k0();
  return sample_vector(grid, [&](double x, double y, double z) {
    return std::array<double, 3>{a * std::sin(k * z) + c * std::cos(k * y),
                                 b * std::sin(k * x) + a * std::cos(k * z),
                                 c * std::sin(k * y) + b * std::cos(k * x)};
  });
}

std::vector<std::string> mhd_preset_names() {
  return {"zero", "abc", "taylor-green", "orszag-tang", "random", "rough"};
}

std::vector<std::string> mll_preset_names() { return {"zero", "uniform", "perturbed", "rough"}; }

MhdState mhd_preset(const Grid& grid, const std::string& name, MhdVariant variant,
                    const PresetParams& params) {
  MhdState s;
  s.variant = variant;
  s.u = VectorField(grid);
  s.B = VectorField(grid);
  const double a = params.amplitude;
  const double k = grid.k0();
  if (name == "zero") {
  } else if (name == "abc") {
    s.B = a * abc_field(grid);
  } else if (name == "taylor-green") {
    s.u = a * sample_vector(grid, [k](double x, double y, double z) {
      return std::array<double, 3>{std::sin(k * x) * std::cos(k * y) * std::cos(k * z),
                                   -std::cos(k * x) * std::sin(k * y) * std::cos(k * z), 0.0};
    });
  } else if (name == "orszag-tang") {
    s.u = a * sample_vector(grid, [k](double x, double y, double) {
      return std::array<double, 3>{-std::sin(k * y), std::sin(k * x), 0.2 * std::sin(k * (x + y))};
    });
    s.B = a * sample_vector(grid, [k](double x, double y, double z) {
      return std::array<double, 3>{-std::sin(k * y) + 0.2 * std::cos(k * z),
                                   std::sin(2.0 * k * x), 0.2 * std::cos(k * x)};
    });
  } else if (name == "random" || name == "rough") {
    PresetParams p = params;
    if (name == "rough") {
      p.kmax = static_cast<long>(grid.n() / 3);
    }
    s.u = a * random_solenoidal_field(grid, with_seed(p, 1));
    s.B = a * random_solenoidal_field(grid, with_seed(p, 2));
  } else {
    throw Error(ErrorKind::schema, "unknown MHD preset '" + name + "'");
  }
  return s;
}

MllState mll_preset(const Grid& grid, const std::string& name, MllScheme scheme, double eps_pen,
                    const PresetParams& params) {
  MllState s;
  s.scheme = scheme;
  s.eps_pen = eps_pen;
  s.m = VectorField(grid);
  s.E = VectorField(grid);
  s.H = VectorField(grid);
  if (name == "zero") return s;
  s.m = constant_vector(grid, {0.0, 0.0, 1.0});
  if (name == "uniform") return s;
  if (name != "perturbed" && name != "rough") {
    throw Error(ErrorKind::schema, "unknown MLL preset '" + name + "'");
  }
  PresetParams p = params;
  if (name == "rough") p.kmax = static_cast<long>(grid.n() / 3);
  const double a = params.amplitude;
  s.m += a * random_vector_field(grid, with_seed(p, 1));
  unit_normalize(s.m);
  s.E = a * random_solenoidal_field(grid, with_seed(p, 2));
  const VectorField h0 = a * random_vector_field(grid, with_seed(p, 3));
  s.H = leray_project(h0 + s.m) - s.m;
  return s;
}

}  // namespace olf
