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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using olf::ScalarField;
using olf::VectorField;

ScalarField fd4(const ScalarField& f, int axis) {
  const auto& g = f.grid();
  const long n = static_cast<long>(g.n());
  const double h = g.spacing();
  ScalarField out(g);
  auto wrap = [n](long i) { return static_cast<std::size_t>(((i % n) + n) % n); };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        auto at = [&](long s) {
          long a = i, b = j, c = k;
          if (axis == 0) a += s;
          if (axis == 1) b += s;
          if (axis == 2) c += s;
          return f.at(wrap(a), wrap(b), wrap(c));
        };
        out.at(wrap(i), wrap(j), wrap(k)) =
            (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
      }
  return out;
}

double profile(double r, olf::KernelKind kind) {
  if (r >= 1.0) return 0.0;
  if (kind == olf::KernelKind::bump) return std::exp(-1.0 / (1.0 - r * r));
  return std::exp(-4.5 * r * r);
}

namespace {

// Kernel weights on the minimal-image offset lattice, normalized to sum 1.
std::vector<double> weights(const olf::Grid& g, double eps, olf::KernelKind kind) {
  const long n = static_cast<long>(g.n());
  const double h = g.spacing();
  std::vector<double> w(g.size(), 0.0);
  double total = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        auto image = [n](long a) { return a > n / 2 ? a - n : a; };
        const double y0 = h * static_cast<double>(image(i));
        const double y1 = h * static_cast<double>(image(j));
        const double y2 = h * static_cast<double>(image(k));
        const double v = profile(std::sqrt(y0 * y0 + y1 * y1 + y2 * y2) / eps, kind);
        w[static_cast<std::size_t>((i * n + j) * n + k)] = v;
        total += v;
      }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

ScalarField convolve(const ScalarField& f, double eps, olf::KernelKind kind) {
  const auto& g = f.grid();
  const long n = static_cast<long>(g.n());
  const std::vector<double> w = weights(g, eps, kind);
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < w.size(); ++q)
    if (w[q] != 0.0) support.push_back(q);
  ScalarField out(g);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t q : support) {
          const long a = static_cast<long>(q) / (n * n);
          const long b = (static_cast<long>(q) / n) % n;
          const long c = static_cast<long>(q) % n;
          // f(x - y)
          s += w[q] * f.at(static_cast<std::size_t>((i - a + n) % n),
                           static_cast<std::size_t>((j - b + n) % n),
                           static_cast<std::size_t>((k - c + n) % n));
        }
        out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = s;
      }
  return out;
}

VectorField convolve(const VectorField& f, double eps, olf::KernelKind kind) {
  return VectorField(convolve(f[0], eps, kind), convolve(f[1], eps, kind), convolve(f[2], eps, kind));
}

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_diff(const VectorField& a, const VectorField& b) {
  return std::max({max_diff(a[0], b[0]), max_diff(a[1], b[1]), max_diff(a[2], b[2])});
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace oracle
