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
#include <string>
#include <vector>

#include "olf/spectral.hpp"

namespace olf {

using Shift = std::array<long, 3>;

// A field sampled at increasing times on (0, T).
struct FieldSeries {
  std::vector<double> times;
  std::vector<Field> values;
};

// || f_{alpha,p}[u](., y) ||_{L^r(0,T)} with
//   f_{alpha,p}[u](t, y) = ||u(t, . - y) - u(t, .)||_p / |y|^alpha,
// y = h * steps.  The time norm uses the trapezoid rule (r = infinity: max
// over samples); a single sample returns f at that instant.
double difference_seminorm(const FieldSeries& traj, const Shift& steps, double alpha, double p,
                           double r);
// Physical shift vector; off-lattice vectors raise a shift error.
double difference_seminorm(const FieldSeries& traj, const std::array<double, 3>& y, double alpha,
                           double p, double r);

struct ShellValue {
  double magnitude = 0.0;
  double value = 0.0;
};

struct BesovProfile {
  double alpha = 0.0;
  double p = 0.0;
  double r = 0.0;
  std::vector<ShellValue> shells;
  double slope = 0.0;
  double r2 = 0.0;
  // Largest shell value: a lower bound of the supremum over all shifts.
  double seminorm = 0.0;
  // Heuristic c0 indicator: slope over the three smallest shells > 0.05.
  double small_scale_slope = 0.0;
  bool c0_heuristic = false;
  bool exact_zero = false;
};

// Shell step counts: powers of two from 1 while s h <= L/8, or every
// integer up to L/(8h) when that gives fewer than four shells.
std::vector<long> default_shells(const Grid& grid);

// Supremum over the 26 lattice directions d in {-1,0,1}^3 \ {0} of the
// difference seminorm at y = s h d, for each shell s; at least four shells.
BesovProfile tilde_norm(const FieldSeries& traj, double alpha, double p, double r,
                        const std::vector<long>& shells = {});

enum class ExponentRule {
  // p = 9 / (3 alpha - 1), hypothesis alpha in (3/2, 2).
  mll_p_from_alpha,
  // q = 12 / (4 beta - 1), hypothesis beta in (9/8, 3/2).
  mll_q_from_beta,
  // beta = 3 alpha / 4, hypothesis alpha in (3/2, 2).
  interpolation_beta,
};

struct ExponentVerdict {
  double value = 0.0;
  bool admissible = false;
  std::string verdict;
};

ExponentVerdict exponent_map(double exponent, ExponentRule rule);

// Classification of an (alpha, p, r) triple against the conservation
// criteria.  Exponents outside (0, 1) u (1, 2) are reported as outside the
// theorem hypothesis; (1/3, 3, 3) is the critical energy-equality case.
struct HypothesisCheck {
  bool in_range = false;
  bool onsager_case = false;
  std::string verdict;
};
HypothesisCheck check_hypothesis(double alpha, double p, double r);

// MHD exponent conditions for u in B^alpha and B in B^beta.
struct MhdExponentConditions {
  bool energy = false;   // alpha + 2 beta >= 1
  bool crossed = false;  // 2 alpha + beta >= 1 and 3 beta >= 1
};
MhdExponentConditions mhd_conditions(double alpha, double beta);

// Smooth dyadic partition: chi(r) = 1 for r <= 3/4, 0 for r >= 4/3, with
// the step S(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}) in between, and
// phi(xi) = chi(xi / 2) - chi(xi) supported in 3/4 <= |xi| <= 8/3.  Block j
// applies phi(2^-j |k| / k0) to the mean-free part.
double dyadic_chi(double r);
double dyadic_phi(double xi);

struct DyadicDecomposition {
  std::vector<int> j;
  std::vector<ScalarField> blocks;
  double mean = 0.0;
};
DyadicDecomposition dyadic_blocks(const ScalarField& f);

struct EmbeddingRecord {
  double p_tilde = 0.0;
  double norm = 0.0;
  double norm_tilde = 0.0;
  double ratio = 0.0;
  bool zero_field = false;
};
// Both tilde profiles on the same shells and the ratio of their seminorms.
// Needs alpha_tilde < alpha, neither equal to 1, and the scaling relation
// alpha_tilde - 3/p_tilde = alpha - 3/p with p_tilde >= 1.
EmbeddingRecord embedding_check(const FieldSeries& traj, double alpha, double p,
                                double alpha_tilde, double r = 3.0,
                                const std::vector<long>& shells = {});

// Per-block Bernstein ratio ||D_j u||_{p_tilde} /
// ((2^j k0)^{3 (1/p - 1/p_tilde)} ||D_j u||_p), for blocks carrying energy.
struct BernsteinRatio {
  int j = 0;
  double ratio = 0.0;
};
std::vector<BernsteinRatio> bernstein_ratios(const ScalarField& f, double p, double p_tilde);

}  // namespace olf
