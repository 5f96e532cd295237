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

#include "olf/mhd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "olf/error.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"

namespace olf {

namespace {

SpectralState pack(const MhdState& s) {
  SpectralState y;
  for (const VectorField* v : {&s.u, &s.B})
    for (int c = 0; c < 3; ++c) y.push_back(forward((*v)[c]));
  return y;
}

SpectralVector slice(const SpectralState& y, std::size_t first) {
  return {y[first], y[first + 1], y[first + 2]};
}

SpectralVector filtered(const SpectralVector& v, const MollifierKernel& kernel) {
  SpectralVector out = v;
  for (auto& c : out)
    for (std::size_t q = 0; q < c.size(); ++q) c[q] *= kernel.spectrum[q].real();
  return out;
}

// Nonlinear remainder of the (optionally regularized) system on Fourier
// coefficients; the unit Laplacians are left to the integrating factor.
SpectralState remainder(const SpectralState& y, MhdVariant variant, const MollifierKernel* kernel) {
  const Grid& g = y[0].grid();
  const SpectralVector u_hat = slice(y, 0);
  const SpectralVector b_hat = slice(y, 3);
  const VectorField u = inverse(u_hat);
  const VectorField B = inverse(b_hat);
  const VectorField J = inverse(spectral_curl(b_hat));
  const Complex I(0.0, 1.0);
  SpectralVector mom{SpectralField(g), SpectralField(g), SpectralField(g)};
  VectorField emf(g);
  if (kernel == nullptr) {
    std::array<SpectralField, 6> t;
    const int pairs[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    for (int s = 0; s < 6; ++s) {
      const int i = pairs[s][0], j = pairs[s][1];
      t[static_cast<std::size_t>(s)] = forward(multiply(u[i], u[j]) - multiply(B[i], B[j]));
    }
    const int slot[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    for_each_mode(g, [&](const Mode& m) {
      for (int i = 0; i < 3; ++i) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < 3; ++j)
          acc += m.kd[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(slot[i][j])][m.index];
        mom[i][m.index] = -I * acc;
      }
    });
    emf = cross(u, B);
    if (variant == MhdVariant::hmhd) emf -= cross(J, B);
  } else {
    const VectorField u_e = inverse(filtered(u_hat, *kernel));
    const VectorField B_e = inverse(filtered(b_hat, *kernel));
    VectorField force = cross(J, B_e);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const ScalarField d = inverse(spectral_partial(u_hat[i], j));
        for (std::size_t q = 0; q < d.size(); ++q) force[i][q] -= u_e[j][q] * d[q];
      }
    }
    mom = forward(force);
    emf = cross(u, B_e);
    if (variant == MhdVariant::hmhd) emf -= cross(J, B_e);
  }
  spectral_leray(mom);
  const SpectralVector induction = spectral_curl(forward(emf));
  return {mom[0], mom[1], mom[2], induction[0], induction[1], induction[2]};
}

TensorField stress(const VectorField& u, const VectorField& B) {
  return outer(u, u) - outer(B, B);
}

double max_abs_diff(const VectorField& a, const VectorField& b) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < a[c].size(); ++i) m = std::max(m, std::abs(a[c][i] - b[c][i]));
  return m;
}

// (v . grad) u
VectorField advect(const VectorField& v, const VectorField& u) {
  VectorField out(u.grid());
  for (int i = 0; i < 3; ++i) {
    const VectorField g = grad(u[i]);
    out[i] = dot(v, g);
  }
  return out;
}

const MollifierKernel& cached_kernel(const Grid& grid, const Regularization& reg) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, double, double, int>, std::unique_ptr<MollifierKernel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(grid.n(), grid.box(), reg.eps, static_cast<int>(reg.kind));
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<MollifierKernel>(make_mollifier(grid, reg.eps, reg.kind)))
             .first;
  }
  return *it->second;
}

void require_comparable(const MhdTrajectory& a, const MhdTrajectory& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::data, "gap needs non-empty runs");
  if (!(a.front().grid() == b.front().grid())) throw Error(ErrorKind::comparison, "runs differ in grid");
  if (a.front().variant != b.front().variant) {
    throw Error(ErrorKind::comparison, "runs differ in system variant");
  }
  if (a.size() != b.size()) throw Error(ErrorKind::comparison, "runs differ in sample count");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].t - b[i].t) > 1e-9 * (1.0 + std::abs(a[i].t)))
      throw Error(ErrorKind::comparison, "runs differ in sample times");
  const double init = std::max(max_abs_diff(a[0].u, b[0].u), max_abs_diff(a[0].B, b[0].B));
  if (init > 1e-12) throw Error(ErrorKind::comparison, "runs differ in initial data");
}

}  // namespace

const char* to_string(MhdVariant v) { return v == MhdVariant::mhd ? "mhd" : "hmhd"; }

const char* to_string(HelicityKind k) {
  switch (k) {
    case HelicityKind::magneto: return "magneto";
    case HelicityKind::fluid: return "fluid";
    case HelicityKind::crossed: return "crossed";
    case HelicityKind::total: return "total";
  }
  return "unknown";
}

Pressure pressure_solve(const VectorField& u, const VectorField& B) {
  require_same_grid(u.grid(), B.grid(), "pressure_solve");
  const ScalarField source = div(div(stress(u, B)));
  Pressure out;
  out.p_m = inverse_laplacian(-source);
  out.p = out.p_m - 0.5 * norm2(B);
  const double mean = out.p.mean();
  for (auto& v : out.p.data()) v -= mean;
  return out;
}

MhdRates rhs(const MhdState& state) {
  const VectorField& u = state.u;
  const VectorField& B = state.B;
  MhdRates r;
  r.du = -leray_project(div(stress(u, B))) + laplacian(u);
  VectorField emf = cross(u, B);
  if (state.variant == MhdVariant::hmhd) emf -= cross(curl(B), B);
  r.dB = curl(emf) + laplacian(B);
  return r;
}

MhdRates rhs_pressure_form(const MhdState& state) {
  const Pressure p = pressure_solve(state.u, state.B);
  MhdRates r = rhs(state);
  r.du = -div(stress(state.u, state.B)) - grad(p.p_m) + laplacian(state.u);
  return r;
}

MhdRates rhs_regularized(const MhdState& state, const MollifierKernel& kernel) {
  require_same_grid(state.grid(), kernel.grid, "rhs_regularized");
  const VectorField& u = state.u;
  const VectorField& B = state.B;
  const VectorField u_e = smooth(u, kernel);
  const VectorField B_e = smooth(B, kernel);
  const VectorField J = curl(B);
  MhdRates r;
  r.du = -leray_project(advect(u_e, u) - cross(J, B_e)) + laplacian(u);
  VectorField emf = cross(u, B_e);
  if (state.variant == MhdVariant::hmhd) emf -= cross(J, B_e);
  r.dB = curl(emf) + laplacian(B);
  return r;
}

double mhd_stable_dt(const MhdState& state) {
  const double h = state.grid().spacing();
  const double bu = state.u.max_norm();
  const double bb = state.B.max_norm();
  double dt = 0.25 * h / std::max(1.0, bu + bb);
  if (state.variant == MhdVariant::hmhd) dt = std::min(dt, 0.2 * h * h / std::max(1.0, bb));
  return dt;
}

MhdState step(const MhdState& state, double dt, const StepOptions& options) {
  if (options.check_dt) {
    const double bound = mhd_stable_dt(state);
    if (dt > bound * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "dt=" << dt << " exceeds the MHD stability bound " << bound;
      throw Error(ErrorKind::parameter, msg.str());
    }
  }
  const MollifierKernel* kernel =
      state.reg.enabled() ? &cached_kernel(state.grid(), state.reg) : nullptr;
  LawsonSystem sys;
  sys.diffusive = std::vector<bool>(6, true);
  sys.dealias = options.dealias;
  const MhdVariant variant = state.variant;
  sys.remainder = [variant, kernel](const SpectralState& y) { return remainder(y, variant, kernel); };
  const SpectralState y = lawson_rk4(pack(state), dt, sys);
  SpectralVector u_hat = slice(y, 0);
  SpectralVector b_hat = slice(y, 3);
  spectral_leray(u_hat);
  spectral_leray(b_hat);
  MhdState next = state;
  next.t = state.t + dt;
  next.u = inverse(u_hat);
  next.B = inverse(b_hat);
  if (!next.u.finite() || !next.B.finite()) {
    std::ostringstream msg;
    msg << "non-finite MHD state at t=" << next.t;
    throw Error(ErrorKind::blow_up, msg.str());
  }
  return next;
}

std::string energy_law_name(MhdVariant variant) {
  return variant == MhdVariant::hmhd ? "hmhd-energy" : "mhd-energy";
}

std::string helicity_law_name(HelicityKind kind, MhdVariant variant) {
  switch (kind) {
    case HelicityKind::magneto:
      return variant == MhdVariant::hmhd ? "hmhd-magneto-helicity" : "mhd-magneto-helicity";
    case HelicityKind::fluid: return "fluid-helicity";
    case HelicityKind::crossed: return "crossed-helicity";
    case HelicityKind::total: return "total-helicity";
  }
  return "unknown";
}

BalanceSample energy_sample(const MhdState& s) {
  const VectorField w = curl(s.u);
  const VectorField J = curl(s.B);
  return {s.t, 0.5 * (inner_product(s.u, s.u) + inner_product(s.B, s.B)),
          inner_product(w, w) + inner_product(J, J)};
}

void require_helicity_variant(HelicityKind kind, MhdVariant variant) {
  if (kind == HelicityKind::crossed && variant != MhdVariant::mhd) {
    throw Error(ErrorKind::usage, "crossed helicity is an MHD-only law");
  }
  if (kind == HelicityKind::total && variant != MhdVariant::hmhd) {
    throw Error(ErrorKind::usage, "total helicity is an HMHD-only law");
  }
}

BalanceSample helicity_sample(const MhdState& s, HelicityKind kind) {
  require_helicity_variant(kind, s.variant);
  const VectorField J = curl(s.B);
  BalanceSample out;
  out.t = s.t;
  switch (kind) {
    case HelicityKind::magneto: {
      const VectorField A = biot_savart(s.B);
      out.density = inner_product(A, s.B);
      out.dissipation = 2.0 * inner_product(s.B, J);
      break;
    }
    case HelicityKind::fluid: {
      const VectorField w = curl(s.u);
      out.density = inner_product(s.u, w);
      out.dissipation = 2.0 * inner_product(w, curl(w) + cross(s.B, J));
      break;
    }
    case HelicityKind::crossed: {
      const VectorField w = curl(s.u);
      out.density = inner_product(s.u, s.B);
      out.dissipation = 2.0 * inner_product(w, J);
      break;
    }
    case HelicityKind::total: {
      const VectorField z = curl(s.u) + s.B;
      const VectorField v = s.u + biot_savart(s.B);
      out.density = inner_product(v, z);
      out.dissipation = 2.0 * inner_product(z, curl(z));
      break;
    }
  }
  return out;
}

BalanceReport energy_report(const MhdTrajectory& trajectory) {
  if (trajectory.size() < 2) throw Error(ErrorKind::data, "energy_report needs at least two samples");
  std::vector<BalanceSample> samples;
  for (const MhdState& s : trajectory) samples.push_back(energy_sample(s));
  return balance_report(energy_law_name(trajectory.front().variant), samples);
}

BalanceReport helicity_report(const MhdTrajectory& trajectory, HelicityKind kind) {
  if (trajectory.size() < 2) throw Error(ErrorKind::data, "helicity_report needs at least two samples");
  require_helicity_variant(kind, trajectory.front().variant);
  std::vector<BalanceSample> samples;
  for (const MhdState& s : trajectory) samples.push_back(helicity_sample(s, kind));
  return balance_report(helicity_law_name(kind, trajectory.front().variant), samples);
}

GapSeries weak_strong_gap_hall(const MhdTrajectory& a, const MhdTrajectory& b) {
  require_comparable(a, b);
  GapSeries gap;
  std::vector<double> state_part, rate;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const VectorField du = a[i].u - b[i].u;
    const VectorField dB = a[i].B - b[i].B;
    const VectorField cu = curl(du);
    const VectorField cb = curl(dB);
    gap.times.push_back(a[i].t);
    state_part.push_back(0.5 * (inner_product(du, du) + inner_product(dB, dB)));
    rate.push_back(inner_product(cu, cu) + inner_product(cb, cb));
  }
  const std::vector<double> cum = cumulative_trapezoid(gap.times, rate);
  for (std::size_t i = 0; i < cum.size(); ++i) gap.value.push_back(state_part[i] + cum[i]);
  return gap;
}

}  // namespace olf
