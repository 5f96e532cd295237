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
#include <vector>

#include "olf/balance.hpp"
#include "olf/field.hpp"
#include "olf/lawson.hpp"

namespace olf {

enum class MllScheme { strong, penalized };
enum class GilbertSign { plus, minus };

// Magnetization m, electric field E and magnetic field H at time t.
struct MllState {
  double t = 0.0;
  VectorField m;
  VectorField E;
  VectorField H;
  MllScheme scheme = MllScheme::strong;
  // Ginzburg-Landau penalty parameter, penalized scheme only.
  double eps_pen = 0.0;

  const Grid& grid() const { return m.grid(); }
};

using MllTrajectory = std::vector<MllState>;

struct MllRates {
  VectorField dm;
  VectorField dE;
  VectorField dH;
};

// Solves x + s m ^ x = g (s = +1 for plus, -1 for minus) in closed form,
//   x = (g - s m ^ g + (m . g) m) / (1 + |m|^2).
std::array<double, 3> gilbert_solve(const std::array<double, 3>& m, const std::array<double, 3>& g,
                                    GilbertSign sign);
VectorField gilbert_solve(const VectorField& m, const VectorField& g, GilbertSign sign);

// Strong scheme:    dm + m ^ dm = 2 m ^ (lap m + H)
// Penalized scheme: dm - m ^ dm = 2 (lap m + H - (H.m) m - (|m|^2 - 1) m / eps)
// and in both cases dH = -curl E - dm, dE = curl H.
MllRates rhs_mll(const MllState& state);

// min(0.25 h^2, 0.5 h / max(1, max|H|)), further capped at 0.5 eps for the
// penalized scheme.
double mll_stable_dt(const MllState& state);

// Integrating-factor RK4 step, then E <- P E, H <- P(H + m) - m, and for the
// strong scheme m <- m / |m|.  Non-finite results raise a blow-up error.
MllState step(const MllState& state, double dt, const StepOptions& options = {});

struct MllMonitor {
  double max_m = 0.0;
  double unit_defect = 0.0;
  double div_e = 0.0;
  double div_h_plus_m = 0.0;
};
MllMonitor monitor(const MllState& state);

// E(t) = int |E|^2 + |H|^2 + |grad m|^2 and D(t) = int |dm/dt|^2.  Extra
// series: "gl_energy" (int (|m|^2 - 1)^2 / (2 eps)), "penalty_work"
// (cumulative int 2 (H.m)(m.dm/dt)) and "closed_residual"
// E + E_GL + cumD + work - E(0) - E_GL(0), the last three for the penalized
// scheme only.
BalanceReport energy_report(const MllTrajectory& trajectory);

// Scalar energy data of one state, for streaming runs that do not keep the
// whole trajectory.
struct MllEnergySample {
  double t = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
  double gl_energy = 0.0;
  double work_rate = 0.0;
  bool penalized = false;
};
MllEnergySample energy_sample(const MllState& state);
BalanceReport energy_report(const std::vector<MllEnergySample>& samples);

// L(T) = |E_A - E_B|^2 + |H_A - H_B|^2 + |grad(m_A - m_B)|^2
//        + int_0^T |d/dt (m_A - m_B)|^2.
GapSeries weak_strong_gap_mll(const MllTrajectory& a, const MllTrajectory& b);

// Dirichlet energy int |grad m|^2.
double exchange_energy(const VectorField& m);

}  // namespace olf
