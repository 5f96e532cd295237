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

#include "olf/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "olf/error.hpp"

namespace olf {

namespace {

void check_p(double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::parameter, "Lp norm needs p >= 1");
}

double lp_from_magnitudes(const std::vector<double>& mag, double p, double dv) {
  check_p(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : mag) m = std::max(m, v);
    return m;
  }
  double s = 0.0;
  if (p == 1.0) {
    for (double v : mag) s += v;
    return s * dv;
  }
  if (p == 2.0) {
    for (double v : mag) s += v * v;
    return std::sqrt(s * dv);
  }
  for (double v : mag) s += std::pow(v, p);
  return std::pow(s * dv, 1.0 / p);
}

}  // namespace

double integral(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.data()) s += v;
  return s * f.grid().cell_volume();
}

std::array<double, 3> integral(const VectorField& v) {
  return {integral(v[0]), integral(v[1]), integral(v[2])};
}

double lp_norm(const ScalarField& f, double p) {
  check_p(p);
  std::vector<double> mag(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mag[i] = std::abs(f[i]);
  return lp_from_magnitudes(mag, p, f.grid().cell_volume());
}

double lp_norm(const VectorField& v, double p) {
  check_p(p);
  std::vector<double> mag(v[0].size());
  for (std::size_t i = 0; i < mag.size(); ++i)
    mag[i] = std::sqrt(v[0][i] * v[0][i] + v[1][i] * v[1][i] + v[2][i] * v[2][i]);
  return lp_from_magnitudes(mag, p, v.grid().cell_volume());
}

double inner_product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * a.grid().cell_volume();
}

double inner_product(const VectorField& a, const VectorField& b) {
  return inner_product(a[0], b[0]) + inner_product(a[1], b[1]) + inner_product(a[2], b[2]);
}

}  // namespace olf
