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
#include <limits>

#include "olf/field.hpp"

namespace olf {

constexpr double infinity = std::numeric_limits<double>::infinity();

// Riemann sums over the periodic box (h^3 times the sample sum).
double integral(const ScalarField& f);
std::array<double, 3> integral(const VectorField& v);
// (h^3 sum |f|^p)^(1/p); p = infinity gives the largest magnitude.  For
// vector fields |f| is the pointwise Euclidean norm.  p < 1 is rejected.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& v, double p);
double inner_product(const ScalarField& a, const ScalarField& b);
double inner_product(const VectorField& a, const VectorField& b);

}  // namespace olf
