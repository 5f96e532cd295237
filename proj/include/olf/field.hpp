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
#include <cstddef>
#include <vector>

#include "olf/grid.hpp"

namespace olf {

// Real samples of a scalar quantity on a grid.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, double value = 0.0)
      : grid_(grid), data_(grid.size(), value) {}
  ScalarField(const Grid& grid, std::vector<double> data);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  double& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[grid_.index(i, j, k)];
  }
  double at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[grid_.index(i, j, k)];
  }

  double mean() const;
  double max_abs() const;
  bool finite() const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);

 private:
  Grid grid_;
  std::vector<double> data_;
};

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const Grid& grid, double value = 0.0)
      : c_{ScalarField(grid, value), ScalarField(grid, value), ScalarField(grid, value)} {}
  VectorField(ScalarField x, ScalarField y, ScalarField z);

  const Grid& grid() const { return c_[0].grid(); }
  ScalarField& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const ScalarField& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  std::array<double, 3> mean() const;
  // Largest pointwise Euclidean magnitude.
  double max_norm() const;
  bool finite() const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double s);

 private:
  std::array<ScalarField, 3> c_;
};

// Rank-two tensor field, component (i, j) stored at slot 3 i + j.
class TensorField {
 public:
  TensorField() = default;
  explicit TensorField(const Grid& grid, double value = 0.0);

  const Grid& grid() const { return c_[0].grid(); }
  ScalarField& operator()(int i, int j) { return c_[static_cast<std::size_t>(3 * i + j)]; }
  const ScalarField& operator()(int i, int j) const {
    return c_[static_cast<std::size_t>(3 * i + j)];
  }
  ScalarField& operator[](int slot) { return c_[static_cast<std::size_t>(slot)]; }
  const ScalarField& operator[](int slot) const { return c_[static_cast<std::size_t>(slot)]; }

  TensorField& operator+=(const TensorField& other);
  TensorField& operator-=(const TensorField& other);
  TensorField& operator*=(double s);

 private:
  std::array<ScalarField, 9> c_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
ScalarField operator-(ScalarField a);
VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);
VectorField operator-(VectorField a);
TensorField operator+(TensorField a, const TensorField& b);
TensorField operator-(TensorField a, const TensorField& b);
TensorField operator*(double s, TensorField a);

// Pointwise algebra.
ScalarField multiply(const ScalarField& a, const ScalarField& b);
VectorField multiply(const ScalarField& a, const VectorField& v);
ScalarField dot(const VectorField& a, const VectorField& b);
VectorField cross(const VectorField& a, const VectorField& b);
TensorField outer(const VectorField& a, const VectorField& b);
ScalarField norm2(const VectorField& v);
VectorField constant_vector(const Grid& grid, std::array<double, 3> value);

// a += s * b
void axpy(ScalarField& a, double s, const ScalarField& b);
void axpy(VectorField& a, double s, const VectorField& b);

// Field sampled from a callable f(x, y, z).
template <class F>
ScalarField sample(const Grid& grid, F&& f) {
  ScalarField out(grid);
  const std::size_t n = grid.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.at(i, j, k) = f(grid.coord(i), grid.coord(j), grid.coord(k));
  return out;
}

// Vector field sampled from a callable returning std::array<double, 3>.
template <class F>
VectorField sample_vector(const Grid& grid, F&& f) {
  VectorField out(grid);
  const std::size_t n = grid.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto v = f(grid.coord(i), grid.coord(j), grid.coord(k));
        const std::size_t idx = grid.index(i, j, k);
        for (int c = 0; c < 3; ++c) out[c][idx] = v[static_cast<std::size_t>(c)];
      }
  return out;
}

}  // namespace olf
