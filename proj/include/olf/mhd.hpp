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

#include <string>
#include <vector>

#include "olf/balance.hpp"
#include "olf/lawson.hpp"
#include "olf/mollify.hpp"

namespace olf {

enum class MhdVariant { mhd, hmhd };
enum class HelicityKind { magneto, fluid, crossed, total };

// Mollified regularization of the nonlinear terms; eps = 0 disables it.
struct Regularization {
  double eps = 0.0;
  KernelKind kind = KernelKind::bump;
  bool enabled() const { return eps > 0.0; }
};

// Velocity u and magnetic induction B at time t, unit viscosity and
// resistivity.  The pressure is recovered on demand by pressure_solve.
struct MhdState {
  double t = 0.0;
  VectorField u;
  VectorField B;
  MhdVariant variant = MhdVariant::hmhd;
  Regularization reg;

  const Grid& grid() const { return u.grid(); }
};

using MhdTrajectory = std::vector<MhdState>;

struct MhdRates {
  VectorField du;
  VectorField dB;
};

// lap p_m = -div div(u (x) u - B (x) B) with mean-free p_m, and the
// kinematic pressure p = p_m - |B|^2 / 2 shifted to zero mean.
struct Pressure {
  ScalarField p_m;
  ScalarField p;
};
Pressure pressure_solve(const VectorField& u, const VectorField& B);

// du = -P div(u (x) u - B (x) B) + lap u
// dB = curl(u ^ B) - curl((curl B) ^ B) + lap B   (Hall term for hmhd only)
MhdRates rhs(const MhdState& state);
// Same momentum equation with the explicit pressure gradient instead of the
// projection: du = -div(u (x) u - B (x) B) - grad p_m + lap u.
MhdRates rhs_pressure_form(const MhdState& state);
// du = -P[(u_e . grad) u - (curl B) ^ B_e] + lap u
// dB = curl(u ^ B_e) - curl((curl B) ^ B_e) + lap B
MhdRates rhs_regularized(const MhdState& state, const MollifierKernel& kernel);

// hmhd: min(0.2 h^2 / max(1, max|B|), 0.25 h / max(1, max|u| + max|B|));
// mhd: the advective bound only.
double mhd_stable_dt(const MhdState& state);

// Integrating-factor RK4 step (exact heat factor on u and B), followed by
// projection of u and B.  Uses rhs_regularized when state.reg is enabled.
MhdState step(const MhdState& state, double dt, const StepOptions& options = {});

// E = 1/2 int |u|^2 + |B|^2, D = int |curl u|^2 + |curl B|^2.
BalanceReport energy_report(const MhdTrajectory& trajectory);
// magneto: H = int A.B,  D = 2 int B.curl B
// fluid:   H = int u.w,  D = 2 int w.(curl w + B ^ curl B)
// crossed: H = int u.B,  D = 2 int w.curl B              (mhd only)
// total:   H = int (u+A).(w+B), D = 2 int (w+B).curl(w+B)  (hmhd only)
BalanceReport helicity_report(const MhdTrajectory& trajectory, HelicityKind kind);
void require_helicity_variant(HelicityKind kind, MhdVariant variant);

// Streaming forms of the two reports.
BalanceSample energy_sample(const MhdState& state);
BalanceSample helicity_sample(const MhdState& state, HelicityKind kind);
std::string energy_law_name(MhdVariant variant);
std::string helicity_law_name(HelicityKind kind, MhdVariant variant);

// J(T) = 1/2 |dB|^2 + int_0^T |curl dB|^2 + 1/2 |du|^2 + int_0^T |curl du|^2
// for the differences du = u_A - u_B, dB = B_A - B_B.
GapSeries weak_strong_gap_hall(const MhdTrajectory& a, const MhdTrajectory& b);

const char* to_string(MhdVariant v);
const char* to_string(HelicityKind k);

}  // namespace olf
