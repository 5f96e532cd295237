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
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "olf/field.hpp"

namespace olf {

using Complex = std::complex<double>;

// Half-complex Fourier coefficients of a real field.
//
// Normalization: the forward transform is unscaled, so the k = 0
// coefficient equals mean * n^3; the inverse transform divides by n^3.
// Mode (i, j, k) with k in [0, n/2] is stored at (i * n + j) * (n/2 + 1) + k
// and carries the integer wavevector (w(i), w(j), k) with w folding the
// upper half of the axis onto negative wavenumbers.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const Grid& grid)
      : grid_(grid), coeffs_(grid.spectral_size(), Complex(0.0, 0.0)) {}

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return coeffs_.size(); }
  std::vector<Complex>& coeffs() { return coeffs_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * grid_.n() + j) * (grid_.n() / 2 + 1) + k;
  }
  // Coefficient of the integer wavevector w, using Hermitian symmetry when
  // the last component is negative.
  Complex mode(long w1, long w2, long w3) const;

 private:
  Grid grid_;
  std::vector<Complex> coeffs_;
};

using SpectralVector = std::array<SpectralField, 3>;
using Field = std::variant<ScalarField, VectorField>;

enum class DiffOp { grad, div, curl, laplacian };

// Physical and derivative wavenumbers of one stored mode.  The derivative
// wavevector zeroes any Nyquist component so that odd-order derivatives of
// real fields stay real.
struct Mode {
  std::size_t index;
  std::array<long, 3> w;
  std::array<double, 3> k;
  std::array<double, 3> kd;
  double k2;
  double kd2;
};

// Calls f(const Mode&) once per stored mode, in storage order.
template <class F>
void for_each_mode(const Grid& grid, F&& f) {
  const std::size_t n = grid.n();
  const std::size_t nh = n / 2 + 1;
  const double k0 = grid.k0();
  const long nyq = static_cast<long>(n / 2);
  Mode m{};
  for (std::size_t i = 0; i < n; ++i) {
    m.w[0] = grid.wave_index(i);
    m.k[0] = k0 * static_cast<double>(m.w[0]);
    m.kd[0] = (m.w[0] == -nyq) ? 0.0 : m.k[0];
    for (std::size_t j = 0; j < n; ++j) {
      m.w[1] = grid.wave_index(j);
      m.k[1] = k0 * static_cast<double>(m.w[1]);
      m.kd[1] = (m.w[1] == -nyq) ? 0.0 : m.k[1];
      for (std::size_t k = 0; k < nh; ++k) {
        m.w[2] = static_cast<long>(k);
        m.k[2] = k0 * static_cast<double>(k);
        m.kd[2] = (m.w[2] == nyq) ? 0.0 : m.k[2];
        m.k2 = m.k[0] * m.k[0] + m.k[1] * m.k[1] + m.k[2] * m.k[2];
        m.kd2 = m.kd[0] * m.kd[0] + m.kd[1] * m.kd[1] + m.kd[2] * m.kd[2];
        m.index = (i * n + j) * nh + k;
        f(static_cast<const Mode&>(m));
      }
    }
  }
}

// Transforms.  Non-finite input raises an invalid-field error.
SpectralField forward(const ScalarField& f);
SpectralVector forward(const VectorField& v);
ScalarField inverse(const SpectralField& f);
VectorField inverse(const SpectralVector& v);

// Sum of |f|^2 h^3 recovered from the coefficients (Parseval).
double spectral_energy(const SpectralField& f);

// Differential operators as exact Fourier multipliers.
ScalarField partial(const ScalarField& f, int axis);
VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
// Row divergence: (div T)_i = sum_j d_j T_ij.
VectorField div(const TensorField& t);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);
Field differential(const Field& f, DiffOp op);

// Spectral-space kernels used by the solvers.
SpectralField spectral_partial(const SpectralField& f, int axis);
SpectralVector spectral_curl(const SpectralVector& v);
void spectral_leray(SpectralVector& v);
void dealias(SpectralField& f);
void dealias(SpectralVector& v);
bool dealias_keeps(const Grid& grid, const std::array<long, 3>& w);

// Projection onto divergence-free fields; the mean is preserved.
VectorField leray_project(const VectorField& v);
// Divergence-free, mean-free potential A with curl A = B.  Requires a
// mean-free B; otherwise a gauge error names the offending component.
VectorField biot_savart(const VectorField& b);
// Solves lap(p) = f for the mean-free p; the mean of f is discarded.
ScalarField inverse_laplacian(const ScalarField& f);
// Spherical 2/3-rule truncation applied in physical space.
ScalarField dealiased(const ScalarField& f);
VectorField dealiased(const VectorField& v);

// FFT worker threads configured from the OLF_THREADS environment variable.
int fft_threads();

}  // namespace olf
