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

#include "olf/mollify.hpp"

#include <cmath>
#include <sstream>

#include "olf/error.hpp"

namespace olf {

namespace {

double profile(double r, KernelKind kind) {
  if (r >= 1.0) return 0.0;
  if (kind == KernelKind::bump) return std::exp(-1.0 / (1.0 - r * r));
  return std::exp(-4.5 * r * r);
}

const VectorField& as_vector(const Field& f, const char* where) {
  if (!std::holds_alternative<VectorField>(f)) {
    throw Error(ErrorKind::shape, std::string(where) + " expects vector fields");
  }
  return std::get<VectorField>(f);
}

CommutatorField pointwise_product(const Field& a, const Field& b, CommutatorKind kind) {
  if (kind == CommutatorKind::dot && std::holds_alternative<ScalarField>(a) &&
      std::holds_alternative<ScalarField>(b)) {
    return multiply(std::get<ScalarField>(a), std::get<ScalarField>(b));
  }
  const VectorField& va = as_vector(a, "product");
  const VectorField& vb = as_vector(b, "product");
  switch (kind) {
    case CommutatorKind::dot: return dot(va, vb);
    case CommutatorKind::wedge: return cross(va, vb);
    case CommutatorKind::tensor: return outer(va, vb);
  }
  throw Error(ErrorKind::shape, "unknown commutator kind");
}

void accumulate(CommutatorField& acc, double w, const CommutatorField& x) {
  std::visit(
      [&](auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        lhs += w * std::get<T>(x);
      },
      acc);
}

CommutatorField zero_like(const CommutatorField& x) {
  return std::visit([](const auto& f) -> CommutatorField {
    using T = std::decay_t<decltype(f)>;
    return T(f.grid());
  }, x);
}

}  // namespace

MollifierKernel make_mollifier(const Grid& grid, double eps, KernelKind kind) {
  const double h = grid.spacing();
  const double lo = 3.0 * h;
  const double hi = 0.5 * grid.box();
  const double slack = 1e-12 * grid.box();
  if (!(eps >= lo - slack && eps <= hi + slack)) {
    std::ostringstream msg;
    msg << "mollifier scale eps=" << eps << " outside the admissible interval [" << lo
        << ", " << hi << "] (3h to L/2)";
    throw Error(ErrorKind::resolution, msg.str());
  }
  MollifierKernel kern;
  kern.grid = grid;
  kern.eps = eps;
  kern.kind = kind;
  kern.samples = ScalarField(grid);
  const std::size_t n = grid.n();
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::array<long, 3> w = {grid.wave_index(i), grid.wave_index(j),
                                       grid.wave_index(k)};
        const double x = h * static_cast<double>(w[0]);
        const double y = h * static_cast<double>(w[1]);
        const double z = h * static_cast<double>(w[2]);
        const double v = profile(std::sqrt(x * x + y * y + z * z) / eps, kind);
        kern.samples.at(i, j, k) = v;
        mass += v;
      }
    }
  }
  mass *= grid.cell_volume();
  kern.samples *= 1.0 / mass;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double v = kern.samples.at(i, j, k);
        if (v > 0.0) {
          kern.taps.push_back({{grid.wave_index(i), grid.wave_index(j), grid.wave_index(k)},
                               v * grid.cell_volume()});
        }
      }
  kern.spectrum = forward(kern.samples);
  for (auto& c : kern.spectrum.coeffs()) c = Complex(c.real() * grid.cell_volume(), 0.0);
  return kern;
}

ScalarField smooth(const ScalarField& u, const MollifierKernel& kernel) {
  require_same_grid(u.grid(), kernel.grid, "smooth");
  SpectralField s = forward(u);
  for (std::size_t q = 0; q < s.size(); ++q) s[q] *= kernel.spectrum[q].real();
  return inverse(s);
}

VectorField smooth(const VectorField& u, const MollifierKernel& kernel) {
  return VectorField(smooth(u[0], kernel), smooth(u[1], kernel), smooth(u[2], kernel));
}

TensorField smooth(const TensorField& u, const MollifierKernel& kernel) {
  TensorField out(u.grid());
  for (int s = 0; s < 9; ++s) out[s] = smooth(u[s], kernel);
  return out;
}

Field smooth(const Field& u, const MollifierKernel& kernel) {
  return std::visit([&](const auto& f) -> Field { return smooth(f, kernel); }, u);
}

ScalarField commutator_product(const ScalarField& a, const ScalarField& b,
                               const MollifierKernel& kernel) {
  return smooth(multiply(a, b), kernel) - multiply(smooth(a, kernel), smooth(b, kernel));
}

ScalarField commutator_dot(const VectorField& a, const VectorField& b,
                           const MollifierKernel& kernel) {
  return smooth(dot(a, b), kernel) - dot(smooth(a, kernel), smooth(b, kernel));
}

VectorField commutator_wedge(const VectorField& a, const VectorField& b,
                             const MollifierKernel& kernel) {
  return smooth(cross(a, b), kernel) - cross(smooth(a, kernel), smooth(b, kernel));
}

TensorField commutator_tensor(const VectorField& a, const VectorField& b,
                              const MollifierKernel& kernel) {
  return smooth(outer(a, b), kernel) - outer(smooth(a, kernel), smooth(b, kernel));
}

CommutatorField commutator(const Field& a, const Field& b, CommutatorKind kind,
                           const MollifierKernel& kernel) {
  if (kind == CommutatorKind::dot && std::holds_alternative<ScalarField>(a) &&
      std::holds_alternative<ScalarField>(b)) {
    return commutator_product(std::get<ScalarField>(a), std::get<ScalarField>(b), kernel);
  }
  const VectorField& va = as_vector(a, "commutator");
  const VectorField& vb = as_vector(b, "commutator");
  switch (kind) {
    case CommutatorKind::dot: return commutator_dot(va, vb, kernel);
    case CommutatorKind::wedge: return commutator_wedge(va, vb, kernel);
    case CommutatorKind::tensor: return commutator_tensor(va, vb, kernel);
  }
  throw Error(ErrorKind::shape, "unknown commutator kind");
}

CetSplit cet_split(const Field& a, const Field& b, CommutatorKind kind,
                   const MollifierKernel& kernel) {
  if (kernel.eps > 0.5 * kernel.grid.box() * (1.0 + 1e-12)) {
    throw Error(ErrorKind::wraparound, "kernel support exceeds half the box");
  }
  const Field a_eps = smooth(a, kernel);
  const Field b_eps = smooth(b, kernel);
  auto minus = [](const Field& x, const Field& y) -> Field {
    return std::visit([&](const auto& f) -> Field {
      using T = std::decay_t<decltype(f)>;
      return f - std::get<T>(y);
    }, x);
  };
  auto shift = [](const Field& x, const std::array<long, 3>& d) -> Field {
    return std::visit([&](const auto& f) -> Field { return shifted(f, d); }, x);
  };
  CetSplit out;
  out.tail = pointwise_product(minus(a, a_eps), minus(b, b_eps), kind);
  out.remainder = zero_like(out.tail);
  for (const KernelTap& tap : kernel.taps) {
    const Field da = minus(shift(a, tap.offset), a);
    const Field db = minus(shift(b, tap.offset), b);
    accumulate(out.remainder, tap.weight, pointwise_product(da, db, kind));
  }
  return out;
}

ScalarField shifted(const ScalarField& u, const std::array<long, 3>& steps) {
  const Grid& g = u.grid();
  const long n = static_cast<long>(g.n());
  auto wrap = [n](long i) { return static_cast<std::size_t>(((i % n) + n) % n); };
  ScalarField out(g);
  for (long i = 0; i < n; ++i) {
    const std::size_t si = wrap(i - steps[0]);
    for (long j = 0; j < n; ++j) {
      const std::size_t sj = wrap(j - steps[1]);
      const std::size_t dst = g.index(static_cast<std::size_t>(i), static_cast<std::size_t>(j), 0);
      const std::size_t src = g.index(si, sj, 0);
      for (long k = 0; k < n; ++k) out[dst + static_cast<std::size_t>(k)] = u[src + wrap(k - steps[2])];
    }
  }
  return out;
}

VectorField shifted(const VectorField& u, const std::array<long, 3>& steps) {
  return VectorField(shifted(u[0], steps), shifted(u[1], steps), shifted(u[2], steps));
}

}  // namespace olf
