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
#include "olf/mhd.hpp"
#include "olf/mll.hpp"
#include "olf/mollify.hpp"
#include "olf/window.hpp"

namespace olf {

enum class Law {
  mll_energy,
  hmhd_energy,
  mhd_energy,
  hmhd_magneto_helicity,
  mhd_magneto_helicity,
  fluid_helicity,
  crossed_helicity,
  total_helicity,
};

const char* to_string(Law law);
Law parse_law(const std::string& name);
std::vector<Law> all_laws();
bool has_anomalous_formula(Law law);
bool is_energy_law(Law law);

// Local balance dt(density) + dissipation + div(flux) = 0.
struct DensityTriple {
  ScalarField density;
  ScalarField dissipation;
  VectorField flux;
  Law law = Law::mll_energy;
};

// MLL (w = dm/dt from rhs_mll, X = lap m + H):
//   e = |E|^2 + |H|^2 + |grad m|^2,  d = |w|^2,
//   f = -2 (w . d_i m)_i - 2 H ^ E.
// The penalized scheme adds (|m|^2 - 1)^2 / (2 eps) to e and the penalty
// work 2 (H.m)(m.w) to d so that the local balance still closes.
DensityTriple local_densities(const MllState& state, Law law);

// MHD and HMHD (w = curl u, J = curl B, A = K[B], p kinematic pressure):
//   energy:   e = (|u|^2 + |B|^2) / 2,  d = |w|^2 + |J|^2,
//             f = (|u|^2/2 + p) u + B ^ (u ^ B) + w ^ u + J ^ B
//                 [+ (J ^ B) ^ B for hmhd]
//   magneto:  h = A.B,  d = 2 B.J,
//             f = (-2 (u - J) ^ B + 2 J + dA/dt) ^ A   (hmhd)
//             f = (-2 u ^ B + 2 J + dA/dt) ^ A         (mhd)
//   fluid:    h = u.w,  d = 2 w.(curl w + B ^ J),
//             f = (w.u) u + (p - |u|^2/2) w - u ^ (curl w + B ^ J)
//   crossed:  h = u.B,  d = 2 w.J,
//             f = (u.B) u + (p - |u|^2/2) B + w ^ B + J ^ u   (mhd only)
//   total:    h = (u+A).(w+B),  d = 2 (w+B).curl(w+B),
//             f = (d(u+A)/dt - 2 u ^ (w+B) + 2 curl(w+B)) ^ (u+A)  (hmhd only)
DensityTriple local_densities(const MhdState& state, Law law);

// The same triples built from mollified fields (p_eps = (p)_eps,
// dA_eps/dt = K[(dB/dt)_eps]).
DensityTriple mollified_densities(const MllState& state, Law law, const MollifierKernel& kernel);
DensityTriple mollified_densities(const MhdState& state, Law law, const MollifierKernel& kernel);

// Anomalous field d^{a,eps}, the right side of the mollified local balance.
//   mll-energy:  -B[m, Y] . Y_eps with Y = dm/dt - 2 (H + lap m)
//   energy:      -u_e.div(C[u,u] - C[B,B]) - u_e.grad A[B,B] / 2
//                + B_e.curl B[u,B]  [- B_e.curl div C[B,B] for hmhd]
//   magneto:     2 A_e.curl B[u,B]  [- 2 A_e.curl div C[B,B] for hmhd]
//   crossed:     -B_e.div(C[u,u] - C[B,B]) - B_e.grad A[B,B] / 2
//                + u_e.curl B[u,B]
// Fluid and total helicity have no formula (not-implemented error).
ScalarField anomalous_field(const MllState& state, Law law, const MollifierKernel& kernel);
ScalarField anomalous_field(const MhdState& state, Law law, const MollifierKernel& kernel);

// dt e_eps + d_eps + div f_eps - d^{a,eps} per stored sample, with dt e_eps
// from second-order differences over the samples (one-sided at the ends).
struct ResidualSample {
  double t = 0.0;
  double max_abs = 0.0;
  double l1 = 0.0;
  double anomalous_l1 = 0.0;
  double dissipation_l1 = 0.0;
};
std::vector<ResidualSample> identity_residual(const MllTrajectory& trajectory, Law law,
                                              const MollifierKernel& kernel);
std::vector<ResidualSample> identity_residual(const MhdTrajectory& trajectory, Law law,
                                              const MollifierKernel& kernel);

// Global balance from space integrals of the local triple.  When both a
// window and a kernel are supplied the windowed anomalous integral is
// attached.
BalanceReport global_balance(const MllTrajectory& trajectory, Law law,
                             const Window* window = nullptr,
                             const MollifierKernel* kernel = nullptr);
BalanceReport global_balance(const MhdTrajectory& trajectory, Law law,
                             const Window* window = nullptr,
                             const MollifierKernel* kernel = nullptr);

// Per window and kernel: int chi d^{a,eps} from the formula, the same
// quantity measured as the defect of the mollified balance along the stored
// trajectory, and int chi d_eps.  An entry is flagged when either anomalous
// value exceeds tolerance * int chi d_eps.
struct SuitabilityEntry {
  std::string window;
  double eps = 0.0;
  double anomalous = 0.0;
  double defect = 0.0;
  double dissipation = 0.0;
  bool flagged = false;
};
struct SuitabilitySummary {
  double tolerance = 1e-3;
  std::vector<SuitabilityEntry> entries;
  bool any_flagged = false;
};
SuitabilitySummary suitability_monitor(const MhdTrajectory& trajectory, Law law,
                                       const std::vector<MollifierKernel>& kernels,
                                       const std::vector<Window>& windows,
                                       double tolerance = 1e-3);
SuitabilitySummary suitability_monitor(const MllTrajectory& trajectory, Law law,
                                       const std::vector<MollifierKernel>& kernels,
                                       const std::vector<Window>& windows,
                                       double tolerance = 1e-3);

// Least-squares slope of log(int chi |d^{a,eps}|) against log(eps).  The
// signed integrals int chi d^{a,eps} are kept alongside.
struct SlopeRecord {
  std::vector<double> eps;
  std::vector<double> values;
  std::vector<double> signed_values;
  double slope = 0.0;
  double r2 = 0.0;
  bool exact_zero = false;
};
SlopeRecord convergence_study(const MllTrajectory& trajectory, Law law,
                              const std::vector<MollifierKernel>& kernels, const Window& window);
SlopeRecord convergence_study(const MhdTrajectory& trajectory, Law law,
                              const std::vector<MollifierKernel>& kernels, const Window& window);

// Least-squares line through (x, y): returns {slope, r2}.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Second-order derivative estimates at each sample of a scalar series.
std::vector<double> sample_derivative(const std::vector<double>& t, const std::vector<double>& f);

}  // namespace olf
