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

#include <cstddef>
#include <numbers>

namespace olf {

// Uniform periodic grid on the torus [0, L)^3 with n points per axis.
//
// Samples are stored row-major with x1 slowest and x3 fastest, so the
// sample at (i, j, k) lives at index (i * n + j) * n + k and sits at the
// physical point (i h, j h, k h).
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::size_t n, double box = 2.0 * std::numbers::pi);

  std::size_t n() const { return n_; }
  double box() const { return box_; }
  double spacing() const { return box_ / static_cast<double>(n_); }
  std::size_t size() const { return n_ * n_ * n_; }
  // Number of stored complex modes of a real field (last axis halved).
  std::size_t spectral_size() const { return n_ * n_ * (n_ / 2 + 1); }
  double cell_volume() const;
  double volume() const { return box_ * box_ * box_; }

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n_ + j) * n_ + k;
  }
  double coord(std::size_t i) const { return static_cast<double>(i) * spacing(); }
  // Lowest wavenumber 2 pi / L.
  double k0() const;
  // Signed integer wavenumber of FFT index i along a full axis.
  long wave_index(std::size_t i) const {
    return i < n_ / 2 ? static_cast<long>(i)
                      : static_cast<long>(i) - static_cast<long>(n_);
  }
  bool valid() const { return n_ != 0; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.box_ == b.box_;
  }

 private:
  std::size_t n_ = 0;
  double box_ = 0.0;
};

// Throws a shape error unless both grids coincide.
void require_same_grid(const Grid& a, const Grid& b, const char* where);

}  // namespace olf
