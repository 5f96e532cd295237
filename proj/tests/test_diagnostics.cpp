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

#include <gtest/gtest.h>

#include <cmath>

#include "olf/diagnostics.hpp"
#include "olf/error.hpp"
#include "olf/presets.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"
#include "oracles.hpp"

using namespace olf;

namespace {

constexpr double kDelta = 1e-3;

MhdState band_limited(MhdVariant v) {
  PresetParams p;
  p.kmax = 2;
  p.amplitude = 0.7;
  return mhd_preset(Grid(32), "random", v, p);
}

MhdState displaced(const MhdState& s, const MhdRates& r, double d) {
  MhdState out = s;
  axpy(out.u, d, r.du);
  axpy(out.B, d, r.dB);
  return out;
}

MllState displaced(const MllState& s, const MllRates& r, double d) {
  MllState out = s;
  axpy(out.m, d, r.dm);
  axpy(out.E, d, r.dE);
  axpy(out.H, d, r.dH);
  return out;
}

MhdRates rates(const MhdState& s) { return rhs(s); }
MllRates rates(const MllState& s) { return rhs_mll(s); }

// dt e + d + div f - anomalous, with dt e as a central difference along the
// exact rate, relative to max |d|.
template <class State, class Densities>
double balance_defect(const State& s, Densities&& densities, const ScalarField* anomalous = nullptr) {
  const auto r = rates(s);
  const DensityTriple mid = densities(s);
  // Five-point stencil: exact for the quartic Ginzburg-Landau density.
  const ScalarField up2 = densities(displaced(s, r, 2 * kDelta)).density;
  const ScalarField up = densities(displaced(s, r, kDelta)).density;
  const ScalarField dn = densities(displaced(s, r, -kDelta)).density;
  const ScalarField dn2 = densities(displaced(s, r, -2 * kDelta)).density;
  ScalarField res = (1.0 / (12 * kDelta)) * (dn2 - 8.0 * dn + 8.0 * up - up2) + mid.dissipation + div(mid.flux);
  if (anomalous) res -= *anomalous;
  return res.max_abs() / std::max(1e-300, mid.dissipation.max_abs());
}

std::vector<Law> laws_for(MhdVariant v) {
  if (v == MhdVariant::hmhd) {
    return {Law::hmhd_energy, Law::hmhd_magneto_helicity, Law::fluid_helicity, Law::total_helicity};
  }
  return {Law::mhd_energy, Law::mhd_magneto_helicity, Law::fluid_helicity, Law::crossed_helicity};
}

}  // namespace

TEST(LocalBalance, ClosesForEveryMhdLaw) {
  for (MhdVariant v : {MhdVariant::mhd, MhdVariant::hmhd}) {
    const MhdState s = band_limited(v);
    for (Law law : laws_for(v)) {
      const double d = balance_defect(s, [law](const MhdState& x) { return local_densities(x, law); });
      EXPECT_LT(d, 1e-9) << to_string(law);
    }
  }
}

TEST(LocalBalance, MollifiedIdentityLeavesTheAnomalousField) {
  for (MhdVariant v : {MhdVariant::mhd, MhdVariant::hmhd}) {
    const MhdState s = band_limited(v);
    const MollifierKernel k = make_mollifier(s.grid(), 4 * s.grid().spacing());
    for (Law law : laws_for(v)) {
      if (!has_anomalous_formula(law)) continue;
      const ScalarField a = anomalous_field(s, law, k);
      const double d = balance_defect(
          s, [&](const MhdState& x) { return mollified_densities(x, law, k); }, &a);
      EXPECT_LT(d, 1e-9) << to_string(law);
      EXPECT_GT(a.max_abs(), 1e-8) << to_string(law);
    }
  }
}

TEST(LocalBalance, MllEnergyClosesOnAResolvedState) {
  PresetParams p;
  p.kmax = 1;
  p.amplitude = 0.2;
  for (MllScheme scheme : {MllScheme::strong, MllScheme::penalized}) {
    const MllState s = mll_preset(Grid(64), "perturbed", scheme, 0.05, p);
    const double local = balance_defect(s, [](const MllState& x) { return local_densities(x, Law::mll_energy); });
    EXPECT_LT(local, 1e-8);
    if (scheme == MllScheme::strong) {
      const MollifierKernel k = make_mollifier(s.grid(), 4 * s.grid().spacing());
      const ScalarField a = anomalous_field(s, Law::mll_energy, k);
      const double moll = balance_defect(
          s, [&](const MllState& x) { return mollified_densities(x, Law::mll_energy, k); }, &a);
      EXPECT_LT(moll, 1e-8);
    }
  }
}

TEST(LocalBalance, HallFluxDiscrepancy) {
  MhdState h = band_limited(MhdVariant::hmhd);
  MhdState m = h;
  m.variant = MhdVariant::mhd;
  const VectorField diff = local_densities(h, Law::hmhd_energy).flux - local_densities(m, Law::mhd_energy).flux;
  const VectorField j = curl(h.B);
  const VectorField expect = cross(cross(j, h.B), h.B);
  EXPECT_LT(oracle::max_diff(diff, expect), 1e-12 * std::max(1.0, expect.max_norm()));
}

TEST(Diagnostics, ZeroStateGivesZeros) {
  for (MhdVariant v : {MhdVariant::mhd, MhdVariant::hmhd}) {
    const MhdState s = mhd_preset(Grid(16), "zero", v, {});
    const MollifierKernel k = make_mollifier(s.grid(), 4 * s.grid().spacing());
    for (Law law : laws_for(v)) {
      const DensityTriple t = local_densities(s, law);
      EXPECT_EQ(t.density.max_abs() + t.dissipation.max_abs() + t.flux.max_norm(), 0.0);
      if (has_anomalous_formula(law)) {
        EXPECT_EQ(anomalous_field(s, law, k).max_abs(), 0.0);
      }
    }
  }
}

TEST(Diagnostics, AnomalousFieldVanishesForConstants) {
  Grid g(16);
  MhdState s;
  s.variant = MhdVariant::hmhd;
  s.u = constant_vector(g, {0.3, -1.0, 2.0});
  s.B = constant_vector(g, {1.0, 0.5, 0.0});
  const MollifierKernel k = make_mollifier(g, 4 * g.spacing());
  EXPECT_LT(anomalous_field(s, Law::hmhd_energy, k).max_abs(), 1e-13);
  s.variant = MhdVariant::mhd;
  EXPECT_LT(anomalous_field(s, Law::crossed_helicity, k).max_abs(), 1e-13);
}

TEST(Diagnostics, LawGuards) {
  const MhdState h = mhd_preset(Grid(16), "abc", MhdVariant::hmhd, {});
  const MollifierKernel k = make_mollifier(h.grid(), 4 * h.grid().spacing());
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::io;
  };
  EXPECT_EQ(kind([&] { local_densities(h, Law::crossed_helicity); }), ErrorKind::usage);
  EXPECT_EQ(kind([&] { local_densities(h, Law::mll_energy); }), ErrorKind::usage);
  EXPECT_EQ(kind([&] { anomalous_field(h, Law::fluid_helicity, k); }), ErrorKind::not_implemented);
  EXPECT_EQ(kind([&] { anomalous_field(h, Law::total_helicity, k); }), ErrorKind::not_implemented);
  EXPECT_EQ(kind([] { parse_law("kinetic"); }), ErrorKind::usage);
  EXPECT_EQ(parse_law("hmhd-energy"), Law::hmhd_energy);
}

TEST(Diagnostics, GlobalBalanceWithWindow) {
  MhdState s = band_limited(MhdVariant::hmhd);
  MhdTrajectory traj{s};
  for (int i = 0; i < 4; ++i) traj.push_back(s = step(s, mhd_stable_dt(s)));
  const BalanceReport plain = global_balance(traj, Law::hmhd_energy);
  EXPECT_FALSE(plain.anomalous_integral.has_value());
  const BalanceReport streamed = energy_report(traj);
  for (std::size_t i = 0; i < plain.times.size(); ++i) {
    EXPECT_NEAR(plain.density[i], streamed.density[i], 1e-10 * streamed.density[0]);
  }
  const Window w = window_preset("center", traj.front().t, traj.back().t, s.grid().box());
  const MollifierKernel k = make_mollifier(s.grid(), 4 * s.grid().spacing());
  const BalanceReport win = global_balance(traj, Law::hmhd_energy, &w, &k);
  ASSERT_TRUE(win.anomalous_integral.has_value());
  EXPECT_TRUE(std::isfinite(*win.anomalous_integral));
}

TEST(Diagnostics, IdentityResidualConvergesOnBeltrami) {
  Grid g(16);
  const MollifierKernel k = make_mollifier(g, 4 * g.spacing());
  double err[2];
  int i = 0;
  for (double spacing : {0.1, 0.05}) {
    MhdState s = mhd_preset(g, "abc", MhdVariant::hmhd, {});
    MhdTrajectory traj{s};
    const int sub = static_cast<int>(std::ceil(spacing / mhd_stable_dt(s)));
    for (int n = 1; n <= static_cast<int>(std::lround(0.4 / spacing)); ++n) {
      for (int j = 0; j < sub; ++j) s = step(s, spacing / sub);
      s.t = n * spacing;
      traj.push_back(s);
    }
    double worst = 0.0;
    for (const ResidualSample& r : identity_residual(traj, Law::hmhd_energy, k)) worst = std::max(worst, r.l1);
    err[i++] = worst;
  }
  EXPECT_GT(std::log2(err[0] / err[1]), 1.8);
}

TEST(Numerics, LineFitAndDerivative) {
  const auto [slope, r2] = fit_line({0.0, 1.0, 2.0, 5.0}, {1.0, 3.0, 5.0, 11.0});
  EXPECT_NEAR(slope, 2.0, 1e-14);
  EXPECT_NEAR(r2, 1.0, 1e-14);
  const std::vector<double> t{0.0, 0.1, 0.35, 0.4, 1.0};
  std::vector<double> f;
  for (double x : t) f.push_back(3.0 * x * x - x + 2.0);
  const std::vector<double> d = sample_derivative(t, f);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(d[i], 6.0 * t[i] - 1.0, 1e-12);
}

TEST(Windows, WeightsAndIntegrals) {
  const Window w = window_preset("global", 0.0, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(w.time_weight(1.0), 1.0);
  EXPECT_DOUBLE_EQ(w.time_weight(0.0), 0.0);
  EXPECT_DOUBLE_EQ(w.time_weight(2.5), 0.0);
  EXPECT_DOUBLE_EQ(w.time_weight(0.5), 0.5625);
  Grid g(16, 1.0);
  const Window c = window_preset("center", 0.0, 1.0, 1.0);
  const ScalarField s = c.spatial_weight(g);
  EXPECT_NEAR(s.max_abs(), 1.0, 1e-14);
  EXPECT_GE(*std::min_element(s.data().begin(), s.data().end()), 0.0);
  // ((1 + cos)/2)^2 averages to 3/8 per axis.
  EXPECT_NEAR(integral(s), std::pow(3.0 / 8.0, 3), 1e-14);
  const ScalarField one(g, 1.0);
  EXPECT_NEAR(windowed_integral({0.3}, {one}, c), c.time_weight(0.3) * std::pow(3.0 / 8.0, 3), 1e-14);
  EXPECT_EQ(window_preset_names().size(), 12u);
  EXPECT_THROW(window_preset("nowhere", 0.0, 1.0, 1.0), Error);
}
