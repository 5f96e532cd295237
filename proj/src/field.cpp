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

#include "olf/field.hpp"

#include <algorithm>
#include <cmath>

#include "olf/error.hpp"

namespace olf {

ScalarField::ScalarField(const Grid& grid, std::vector<double> data)
    : grid_(grid), data_(std::move(data)) {
  if (data_.size() != grid_.size()) {
    throw Error(ErrorKind::shape, "scalar field data length does not equal n^3");
  }
}

double ScalarField::mean() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return data_.empty() ? 0.0 : s / static_cast<double>(data_.size());
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ScalarField::finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "scalar add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "scalar subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

VectorField::VectorField(ScalarField x, ScalarField y, ScalarField z)
    : c_{std::move(x), std::move(y), std::move(z)} {
  require_same_grid(c_[0].grid(), c_[1].grid(), "vector field");
  require_same_grid(c_[0].grid(), c_[2].grid(), "vector field");
}

std::array<double, 3> VectorField::mean() const {
  return {c_[0].mean(), c_[1].mean(), c_[2].mean()};
}

double VectorField::max_norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < c_[0].size(); ++i) {
    const double s = c_[0][i] * c_[0][i] + c_[1][i] * c_[1][i] + c_[2][i] * c_[2][i];
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

bool VectorField::finite() const {
  return c_[0].finite() && c_[1].finite() && c_[2].finite();
}

VectorField& VectorField::operator+=(const VectorField& other) {
  for (int c = 0; c < 3; ++c) (*this)[c] += other[c];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  for (int c = 0; c < 3; ++c) (*this)[c] -= other[c];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (auto& comp : c_) comp *= s;
  return *this;
}

TensorField::TensorField(const Grid& grid, double value) {
  for (auto& comp : c_) comp = ScalarField(grid, value);
}

TensorField& TensorField::operator+=(const TensorField& other) {
  for (int s = 0; s < 9; ++s) (*this)[s] += other[s];
  return *this;
}

TensorField& TensorField::operator-=(const TensorField& other) {
  for (int s = 0; s < 9; ++s) (*this)[s] -= other[s];
  return *this;
}

TensorField& TensorField::operator*=(double s) {
  for (auto& comp : c_) comp *= s;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }
ScalarField operator-(ScalarField a) { return a *= -1.0; }
VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }
VectorField operator-(VectorField a) { return a *= -1.0; }
TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
TensorField operator*(double s, TensorField a) { return a *= s; }

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "multiply");
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

VectorField multiply(const ScalarField& a, const VectorField& v) {
  return VectorField(multiply(a, v[0]), multiply(a, v[1]), multiply(a, v[2]));
}

ScalarField dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid(), "dot");
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a[0][i] * b[0][i] + a[1][i] * b[1][i] + a[2][i] * b[2][i];
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid(), "cross");
  VectorField out(a.grid());
  for (std::size_t i = 0; i < a[0].size(); ++i) {
    out[0][i] = a[1][i] * b[2][i] - a[2][i] * b[1][i];
    out[1][i] = a[2][i] * b[0][i] - a[0][i] * b[2][i];
    out[2][i] = a[0][i] * b[1][i] - a[1][i] * b[0][i];
  }
  return out;
}

TensorField outer(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid(), "outer");
  TensorField out(a.grid());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = multiply(a[i], b[j]);
  return out;
}

ScalarField norm2(const VectorField& v) { return dot(v, v); }

VectorField constant_vector(const Grid& grid, std::array<double, 3> value) {
  return VectorField(ScalarField(grid, value[0]), ScalarField(grid, value[1]),
                     ScalarField(grid, value[2]));
}

void axpy(ScalarField& a, double s, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "axpy");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

void axpy(VectorField& a, double s, const VectorField& b) {
  for (int c = 0; c < 3; ++c) axpy(a[c], s, b[c]);
}

}  // namespace olf
