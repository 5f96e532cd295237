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

#include "olf/mll.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "olf/error.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"

namespace olf {

namespace {

double sign_of(GilbertSign s) { return s == GilbertSign::plus ? 1.0 : -1.0; }

SpectralState pack(const MllState& s) {
  SpectralState y;
  for (const VectorField* v : {&s.m, &s.E, &s.H})
    for (int c = 0; c < 3; ++c) y.push_back(forward((*v)[c]));
  return y;
}

SpectralVector slice(const SpectralState& y, std::size_t first) {
  return {y[first], y[first + 1], y[first + 2]};
}

// Time derivative of m from the Gilbert form of either scheme.
VectorField magnetization_rate(const VectorField& m, const VectorField& lap_m, const VectorField& H,
                               MllScheme scheme, double eps_pen) {
  VectorField field = lap_m + H;
  if (scheme == MllScheme::strong) return gilbert_solve(m, 2.0 * cross(m, field), GilbertSign::plus);
  const ScalarField hm = dot(H, m);
  const ScalarField m2 = norm2(m);
  ScalarField coeff(m.grid());
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = hm[i] + (m2[i] - 1.0) / eps_pen;
  field -= multiply(coeff, m);
  return gilbert_solve(m, 2.0 * field, GilbertSign::minus);
}

SpectralVector laplacian_modes(const SpectralVector& v) {
  SpectralVector out = v;
  for_each_mode(v[0].grid(), [&](const Mode& mode) {
    for (int c = 0; c < 3; ++c) out[c][mode.index] *= -mode.k2;
  });
  return out;
}

// Remainder dy/dt - (lap m, 0, 0) on Fourier coefficients.
SpectralState remainder(const SpectralState& y, MllScheme scheme, double eps_pen) {
  const SpectralVector m_hat = slice(y, 0);
  const SpectralVector e_hat = slice(y, 3);
  const SpectralVector h_hat = slice(y, 6);
  const SpectralVector lap_hat = laplacian_modes(m_hat);
  const VectorField dm =
      magnetization_rate(inverse(m_hat), inverse(lap_hat), inverse(h_hat), scheme, eps_pen);
  const SpectralVector dm_hat = forward(dm);
  const SpectralVector curl_e = spectral_curl(e_hat);
  const SpectralVector curl_h = spectral_curl(h_hat);
  SpectralState out(9, SpectralField(y[0].grid()));
  for (int c = 0; c < 3; ++c) {
    const std::size_t cc = static_cast<std::size_t>(c);
    for (std::size_t q = 0; q < y[0].size(); ++q) {
      out[cc][q] = dm_hat[c][q] - lap_hat[c][q];
      out[3 + cc][q] = curl_h[c][q];
      out[6 + cc][q] = -curl_e[c][q] - dm_hat[c][q];
    }
  }
  return out;
}

double max_div(const VectorField& v) { return div(v).max_abs(); }

double max_abs_diff(const VectorField& a, const VectorField& b) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < a[c].size(); ++i) m = std::max(m, std::abs(a[c][i] - b[c][i]));
  return m;
}

}  // namespace

std::array<double, 3> gilbert_solve(const std::array<double, 3>& m, const std::array<double, 3>& g,
                                    GilbertSign sign) {
  const double s = sign_of(sign);
  const std::array<double, 3> mg = {m[1] * g[2] - m[2] * g[1], m[2] * g[0] - m[0] * g[2],
                                    m[0] * g[1] - m[1] * g[0]};
  const double m_dot_g = m[0] * g[0] + m[1] * g[1] + m[2] * g[2];
  const double inv = 1.0 / (1.0 + m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
  return {(g[0] - s * mg[0] + m_dot_g * m[0]) * inv, (g[1] - s * mg[1] + m_dot_g * m[1]) * inv,
          (g[2] - s * mg[2] + m_dot_g * m[2]) * inv};
}

VectorField gilbert_solve(const VectorField& m, const VectorField& g, GilbertSign sign) {
  require_same_grid(m.grid(), g.grid(), "gilbert_solve");
  VectorField out(m.grid());
  for (std::size_t i = 0; i < m[0].size(); ++i) {
    const auto x = gilbert_solve({m[0][i], m[1][i], m[2][i]}, {g[0][i], g[1][i], g[2][i]}, sign);
    for (int c = 0; c < 3; ++c) out[c][i] = x[static_cast<std::size_t>(c)];
  }
  return out;
}

MllRates rhs_mll(const MllState& state) {
  MllRates r;
  r.dm = magnetization_rate(state.m, laplacian(state.m), state.H, state.scheme, state.eps_pen);
  r.dE = curl(state.H);
  r.dH = -curl(state.E) - r.dm;
  return r;
}

double mll_stable_dt(const MllState& state) {
  const double h = state.grid().spacing();
  double dt = std::min(0.25 * h * h, 0.5 * h / std::max(1.0, state.H.max_norm()));
  if (state.scheme == MllScheme::penalized) dt = std::min(dt, 0.5 * state.eps_pen);
  return dt;
}

MllState step(const MllState& state, double dt, const StepOptions& options) {
  if (state.scheme == MllScheme::penalized && !(state.eps_pen > 0.0)) {
    throw Error(ErrorKind::parameter, "penalized scheme needs eps_pen > 0");
  }
  if (options.check_dt) {
    const double bound = mll_stable_dt(state);
    if (dt > bound * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "dt=" << dt << " exceeds the MLL stability bound " << bound;
      throw Error(ErrorKind::parameter, msg.str());
    }
  }
  LawsonSystem sys;
  sys.diffusive = {true, true, true, false, false, false, false, false, false};
  sys.dealias = options.dealias;
  const MllScheme scheme = state.scheme;
  const double eps_pen = state.eps_pen;
  sys.remainder = [scheme, eps_pen](const SpectralState& y) { return remainder(y, scheme, eps_pen); };
  const SpectralState y = lawson_rk4(pack(state), dt, sys);
  MllState next = state;
  next.t = state.t + dt;
  next.m = inverse(slice(y, 0));
  if (state.scheme == MllScheme::strong) {
    for (std::size_t i = 0; i < next.m[0].size(); ++i) {
      const double r = std::sqrt(next.m[0][i] * next.m[0][i] + next.m[1][i] * next.m[1][i] +
                                 next.m[2][i] * next.m[2][i]);
      if (r > 0.0)
        for (int c = 0; c < 3; ++c) next.m[c][i] /= r;
    }
  }
  SpectralVector e_hat = slice(y, 3);
  spectral_leray(e_hat);
  next.E = inverse(e_hat);
  SpectralVector b_hat = slice(y, 6);
  const SpectralVector m_hat = forward(next.m);
  for (int c = 0; c < 3; ++c)
    for (std::size_t q = 0; q < b_hat[0].size(); ++q) b_hat[c][q] += m_hat[c][q];
  spectral_leray(b_hat);
  for (int c = 0; c < 3; ++c)
    for (std::size_t q = 0; q < b_hat[0].size(); ++q) b_hat[c][q] -= m_hat[c][q];
  next.H = inverse(b_hat);
  if (!next.m.finite() || !next.E.finite() || !next.H.finite()) {
    std::ostringstream msg;
    msg << "non-finite MLL state at t=" << next.t;
    throw Error(ErrorKind::blow_up, msg.str());
  }
  return next;
}

MllMonitor monitor(const MllState& state) {
  MllMonitor out;
  out.max_m = state.m.max_norm();
  const ScalarField m2 = norm2(state.m);
  for (std::size_t i = 0; i < m2.size(); ++i)
    out.unit_defect = std::max(out.unit_defect, std::abs(m2[i] - 1.0));
  out.div_e = max_div(state.E);
  out.div_h_plus_m = max_div(state.H + state.m);
  return out;
}

double exchange_energy(const VectorField& m) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) {
    const VectorField g = grad(m[c]);
    s += inner_product(g, g);
  }
  return s;
}

MllEnergySample energy_sample(const MllState& s) {
  const MllRates r = rhs_mll(s);
  MllEnergySample out;
  out.t = s.t;
  out.energy = inner_product(s.E, s.E) + inner_product(s.H, s.H) + exchange_energy(s.m);
  out.dissipation = inner_product(r.dm, r.dm);
  out.penalized = s.scheme == MllScheme::penalized;
  if (out.penalized) {
    const ScalarField m2 = norm2(s.m);
    double g = 0.0;
    for (std::size_t i = 0; i < m2.size(); ++i) g += (m2[i] - 1.0) * (m2[i] - 1.0);
    out.gl_energy = g * s.grid().cell_volume() / (2.0 * s.eps_pen);
    out.work_rate = 2.0 * inner_product(dot(s.H, s.m), dot(s.m, r.dm));
  }
  return out;
}

BalanceReport energy_report(const std::vector<MllEnergySample>& samples) {
  if (samples.size() < 2) throw Error(ErrorKind::data, "energy_report needs at least two samples");
  BalanceReport rep;
  rep.law = "mll-energy";
  std::vector<double> gl, work_rate;
  for (const MllEnergySample& s : samples) {
    rep.times.push_back(s.t);
    rep.density.push_back(s.energy);
    rep.dissipation.push_back(s.dissipation);
    gl.push_back(s.gl_energy);
    work_rate.push_back(s.work_rate);
  }
  close_balance(rep);
  if (samples.front().penalized) {
    const std::vector<double> work = cumulative_trapezoid(rep.times, work_rate);
    std::vector<double> closed(rep.times.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
      closed[i] = rep.density[i] + gl[i] + rep.cumulative[i] + work[i] - rep.density[0] - gl[0];
    rep.extra.emplace_back("gl_energy", gl);
    rep.extra.emplace_back("penalty_work", work);
    rep.extra.emplace_back("closed_residual", closed);
  }
  return rep;
}

BalanceReport energy_report(const MllTrajectory& trajectory) {
  std::vector<MllEnergySample> samples;
  for (const MllState& s : trajectory) samples.push_back(energy_sample(s));
  return energy_report(samples);
}

GapSeries weak_strong_gap_mll(const MllTrajectory& a, const MllTrajectory& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::data, "gap needs non-empty runs");
  if (!(a.front().grid() == b.front().grid())) {
    throw Error(ErrorKind::comparison, "runs differ in grid");
  }
  if (a.size() != b.size()) throw Error(ErrorKind::comparison, "runs differ in sample count");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].t - b[i].t) > 1e-9 * (1.0 + std::abs(a[i].t))) {
      throw Error(ErrorKind::comparison, "runs differ in sample times");
    }
  }
  const double init = std::max({max_abs_diff(a[0].m, b[0].m), max_abs_diff(a[0].E, b[0].E),
                                max_abs_diff(a[0].H, b[0].H)});
  if (init > 1e-12) throw Error(ErrorKind::comparison, "runs differ in initial data");
  GapSeries gap;
  std::vector<double> rate;
  std::vector<double> state_part;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const VectorField dE = a[i].E - b[i].E;
    const VectorField dH = a[i].H - b[i].H;
    const VectorField dm = a[i].m - b[i].m;
    const VectorField ddm = rhs_mll(a[i]).dm - rhs_mll(b[i]).dm;
    gap.times.push_back(a[i].t);
    state_part.push_back(inner_product(dE, dE) + inner_product(dH, dH) + exchange_energy(dm));
    rate.push_back(inner_product(ddm, ddm));
  }
  const std::vector<double> cum = cumulative_trapezoid(gap.times, rate);
  for (std::size_t i = 0; i < cum.size(); ++i) gap.value.push_back(state_part[i] + cum[i]);
  return gap;
}

}  // namespace olf
