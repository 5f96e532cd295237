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
#include <variant>
#include <vector>

#include "olf/spectral.hpp"

namespace olf {

enum class KernelKind { bump, gaussian };
enum class CommutatorKind { dot, wedge, tensor };

// One grid offset y = h * offset inside the kernel support, with its
// quadrature weight h^3 psi_eps(y).
struct KernelTap {
  std::array<long, 3> offset;
  double weight;
};

// Sampled mollifier psi_eps(x) = eps^-3 psi(x / eps), wrapped periodically
// and renormalized to unit discrete mass.  The bump profile is
// exp(-1 / (1 - r^2)) on r < 1; the alternative is a Gaussian with standard
// deviation eps / 3 truncated at r = 1.
struct MollifierKernel {
  Grid grid;
  double eps = 0.0;
  KernelKind kind = KernelKind::bump;
  ScalarField samples;
  // h^3 times the DFT of the samples: the Fourier multiplier of smoothing.
  SpectralField spectrum;
  std::vector<KernelTap> taps;
};

// Accepts 3h <= eps <= L/2; anything else is a resolution error.
MollifierKernel make_mollifier(const Grid& grid, double eps, KernelKind kind = KernelKind::bump);

ScalarField smooth(const ScalarField& u, const MollifierKernel& kernel);
VectorField smooth(const VectorField& u, const MollifierKernel& kernel);
TensorField smooth(const TensorField& u, const MollifierKernel& kernel);
Field smooth(const Field& u, const MollifierKernel& kernel);

using CommutatorField = std::variant<ScalarField, VectorField, TensorField>;

// A: (a.b)_eps - a_eps.b_eps, B: wedge analogue, C: tensor analogue.
ScalarField commutator_product(const ScalarField& a, const ScalarField& b,
                               const MollifierKernel& kernel);
ScalarField commutator_dot(const VectorField& a, const VectorField& b,
                           const MollifierKernel& kernel);
VectorField commutator_wedge(const VectorField& a, const VectorField& b,
                             const MollifierKernel& kernel);
TensorField commutator_tensor(const VectorField& a, const VectorField& b,
                              const MollifierKernel& kernel);
CommutatorField commutator(const Field& a, const Field& b, CommutatorKind kind,
                           const MollifierKernel& kernel);

// Commutator = remainder - tail with
//   remainder(x) = sum_y h^3 psi(y) (a(x-y) - a(x)) * (b(x-y) - b(x)),
//   tail = (a - a_eps) * (b - b_eps),
// "*" being the product selected by kind.
struct CetSplit {
  CommutatorField remainder;
  CommutatorField tail;
};
CetSplit cet_split(const Field& a, const Field& b, CommutatorKind kind,
                   const MollifierKernel& kernel);

// u(x - y) for the lattice vector y = h * steps (exact periodic permutation).
ScalarField shifted(const ScalarField& u, const std::array<long, 3>& steps);
VectorField shifted(const VectorField& u, const std::array<long, 3>& steps);

}  // namespace olf
