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

#include "olf/field.hpp"
#include "olf/mollify.hpp"

// Reference implementations used as test oracles.  They share no code with
// the library paths they check beyond the field containers.
namespace oracle {

// Fourth-order central difference along one axis.
olf::ScalarField fd4(const olf::ScalarField& f, int axis);

// Bump or truncated Gaussian profile on r = |y| / eps, zero for r >= 1.
double profile(double r, olf::KernelKind kind);

// Direct O(n^6) periodic convolution with the sampled, unit-mass kernel.
olf::ScalarField convolve(const olf::ScalarField& f, double eps, olf::KernelKind kind);
olf::VectorField convolve(const olf::VectorField& f, double eps, olf::KernelKind kind);

// Largest magnitude of a - b over all samples.
double max_diff(const olf::ScalarField& a, const olf::ScalarField& b);
double max_diff(const olf::VectorField& a, const olf::VectorField& b);

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b);

}  // namespace oracle
