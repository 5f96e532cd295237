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

#include "olf/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "olf/error.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"

namespace olf {

namespace {

struct LawInfo {
  Law law;
  const char* name;
};

constexpr LawInfo kLaws[] = {
    {Law::mll_energy, "mll-energy"},
    {Law::hmhd_energy, "hmhd-energy"},
    {Law::mhd_energy, "mhd-energy"},
    {Law::hmhd_magneto_helicity, "hmhd-magneto-helicity"},
    {Law::mhd_magneto_helicity, "mhd-magneto-helicity"},
    {Law::fluid_helicity, "fluid-helicity"},
    {Law::crossed_helicity, "crossed-helicity"},
    {Law::total_helicity, "total-helicity"},
};

void require_mhd_law(Law law, MhdVariant variant) {
  bool ok = false;
  switch (law) {
    case Law::mll_energy: ok = false; break;
    case Law::hmhd_energy:
    case Law::hmhd_magneto_helicity:
    case Law::total_helicity: ok = variant == MhdVariant::hmhd; break;
    case Law::mhd_energy:
    case Law::mhd_magneto_helicity:
    case Law::crossed_helicity: ok = variant == MhdVariant::mhd; break;
    case Law::fluid_helicity: ok = true; break;
  }
  if (!ok) {
    throw Error(ErrorKind::usage, std::string("law ") + to_string(law) +
                                      " does not apply to a " + to_string(variant) + " state");
  }
}

void require_mll_law(Law law) {
  if (law != Law::mll_energy) {
    throw Error(ErrorKind::usage, std::string("law ") + to_string(law) + " does not apply to MLL");
  }
}

MhdRates state_rates(const MhdState& s) {
  if (s.reg.enabled()) return rhs_regularized(s, make_mollifier(s.grid(), s.reg.eps, s.reg.kind));
  return rhs(s);
}

// Fields entering the MHD triples, optionally mollified.
struct MhdFields {
  VectorField u, B, w, J, du, dB;
  ScalarField p;
  std::optional<VectorField> A, dA;
};

bool needs_potential(Law law) {
  return law == Law::hmhd_magneto_helicity || law == Law::mhd_magneto_helicity ||
         law == Law::total_helicity;
}

bool needs_pressure(Law law) {
  return law == Law::hmhd_energy || law == Law::mhd_energy || law == Law::fluid_helicity ||
         law == Law::crossed_helicity;
}

MhdFields mhd_fields(const MhdState& s, Law law, const MollifierKernel* kernel) {
  MhdFields f;
  const bool want_rates = needs_potential(law) || law == Law::total_helicity;
  MhdRates r;
  if (want_rates) r = state_rates(s);
  ScalarField p;
  if (needs_pressure(law)) p = pressure_solve(s.u, s.B).p;
  if (kernel) {
    f.u = smooth(s.u, *kernel);
    f.B = smooth(s.B, *kernel);
    if (want_rates) {
      f.du = smooth(r.du, *kernel);
      f.dB = smooth(r.dB, *kernel);
    }
    if (needs_pressure(law)) f.p = smooth(p, *kernel);
  } else {
    f.u = s.u;
    f.B = s.B;
    if (want_rates) {
      f.du = std::move(r.du);
      f.dB = std::move(r.dB);
    }
    f.p = std::move(p);
  }
  f.w = curl(f.u);
  f.J = curl(f.B);
  if (needs_potential(law)) {
    f.A = biot_savart(f.B);
    f.dA = biot_savart(f.dB);
  }
  return f;
}

DensityTriple mhd_triple(const MhdFields& f, Law law) {
  DensityTriple t;
  t.law = law;
  switch (law) {
    case Law::hmhd_energy:
    case Law::mhd_energy: {
      const ScalarField u2 = norm2(f.u);
      t.density = 0.5 * (u2 + norm2(f.B));
      t.dissipation = norm2(f.w) + norm2(f.J);
      ScalarField coef = 0.5 * u2 + f.p;
      t.flux = multiply(coef, f.u) + cross(f.B, cross(f.u, f.B)) + cross(f.w, f.u) +
               cross(f.J, f.B);
      if (law == Law::hmhd_energy) t.flux += cross(cross(f.J, f.B), f.B);
      break;
    }
    case Law::hmhd_magneto_helicity:
    case Law::mhd_magneto_helicity: {
      const VectorField& A = *f.A;
      t.density = dot(A, f.B);
      t.dissipation = 2.0 * dot(f.B, f.J);
      const VectorField drift = law == Law::hmhd_magneto_helicity ? f.u - f.J : f.u;
      t.flux = cross(-2.0 * cross(drift, f.B) + 2.0 * f.J + *f.dA, A);
      break;
    }
    case Law::fluid_helicity: {
      const VectorField q = curl(f.w) + cross(f.B, f.J);
      t.density = dot(f.u, f.w);
      t.dissipation = 2.0 * dot(f.w, q);
      const ScalarField coef = f.p - 0.5 * norm2(f.u);
      t.flux = multiply(dot(f.w, f.u), f.u) + multiply(coef, f.w) - cross(f.u, q);
      break;
    }
    case Law::crossed_helicity: {
      t.density = dot(f.u, f.B);
      t.dissipation = 2.0 * dot(f.w, f.J);
      const ScalarField coef = f.p - 0.5 * norm2(f.u);
      t.flux = multiply(t.density, f.u) + multiply(coef, f.B) + cross(f.w, f.B) +
               cross(f.J, f.u);
      break;
    }
    case Law::total_helicity: {
      const VectorField v = f.u + *f.A;
      const VectorField z = f.w + f.B;
      const VectorField cz = curl(z);
      t.density = dot(v, z);
      t.dissipation = 2.0 * dot(z, cz);
      t.flux = cross(f.du + *f.dA - 2.0 * cross(f.u, z) + 2.0 * cz, v);
      break;
    }
    case Law::mll_energy:
      throw Error(ErrorKind::usage, "mll-energy needs an MLL state");
  }
  return t;
}

DensityTriple mll_triple(const VectorField& m, const VectorField& E, const VectorField& H,
                         const VectorField& w, const MllState& s, bool penalty_terms) {
  DensityTriple t;
  t.law = Law::mll_energy;
  const Grid& g = m.grid();
  std::array<VectorField, 3> gm = {grad(m[0]), grad(m[1]), grad(m[2])};
  t.density = norm2(E) + norm2(H);
  for (int c = 0; c < 3; ++c) t.density += norm2(gm[static_cast<std::size_t>(c)]);
  t.dissipation = norm2(w);
  t.flux = VectorField(g);
  for (int i = 0; i < 3; ++i) {
    ScalarField acc(g);
    for (int c = 0; c < 3; ++c) acc += multiply(w[c], gm[static_cast<std::size_t>(c)][i]);
    t.flux[i] = -2.0 * acc;
  }
  t.flux -= 2.0 * cross(H, E);
  if (penalty_terms) {
    const ScalarField m2 = norm2(m);
    ScalarField gl(g);
    for (std::size_t i = 0; i < gl.size(); ++i) gl[i] = (m2[i] - 1.0) * (m2[i] - 1.0) / (2.0 * s.eps_pen);
    t.density += gl;
    t.dissipation += 2.0 * multiply(dot(H, m), dot(m, w));
  }
  return t;
}

// Weights of the second-order derivative at sample i.
std::array<std::pair<std::size_t, double>, 3> derivative_weights(const std::vector<double>& t,
                                                                 std::size_t i) {
  const std::size_t n = t.size();
  std::size_t a = i == 0 ? 0 : (i == n - 1 ? n - 3 : i - 1);
  const std::array<std::size_t, 3> idx = {a, a + 1, a + 2};
  std::array<std::pair<std::size_t, double>, 3> out{};
  const double x = t[i];
  for (std::size_t j = 0; j < 3; ++j) {
    double num = 0.0;
    double den = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == j) continue;
      den *= t[idx[j]] - t[idx[k]];
      double prod = 1.0;
      for (std::size_t l = 0; l < 3; ++l)
        if (l != j && l != k) prod *= x - t[idx[l]];
      num += prod;
    }
    out[j] = {idx[j], num / den};
  }
  return out;
}

template <class Traj>
std::vector<double> times_of(const Traj& traj) {
  std::vector<double> t;
  for (const auto& s : traj) t.push_back(s.t);
  return t;
}

// Per-sample mollified triples and anomalous fields.
struct MollifiedSeries {
  std::vector<double> times;
  std::vector<DensityTriple> triples;
  std::vector<ScalarField> anomalous;
};

template <class Traj>
MollifiedSeries mollified_series(const Traj& traj, Law law, const MollifierKernel& kernel,
                                 bool with_anomalous) {
  MollifiedSeries out;
  out.times = times_of(traj);
  for (const auto& s : traj) {
    out.triples.push_back(mollified_densities(s, law, kernel));
    if (with_anomalous) out.anomalous.push_back(anomalous_field(s, law, kernel));
  }
  return out;
}

// dt e + d + div f at every sample.
std::vector<ScalarField> balance_defect(const MollifiedSeries& series) {
  const auto& t = series.times;
  if (t.size() < 3) {
    throw Error(ErrorKind::data, "time differencing needs at least three samples");
  }
  std::vector<ScalarField> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const DensityTriple& tr = series.triples[i];
    ScalarField r = tr.dissipation + div(tr.flux);
    for (const auto& [j, wgt] : derivative_weights(t, i)) axpy(r, wgt, series.triples[j].density);
    out.push_back(std::move(r));
  }
  return out;
}

template <class Traj>
std::vector<ResidualSample> residual_impl(const Traj& traj, Law law, const MollifierKernel& kernel) {
  if (!has_anomalous_formula(law)) {
    throw Error(ErrorKind::not_implemented,
                std::string("no anomalous-dissipation formula for ") + to_string(law));
  }
  const MollifiedSeries series = mollified_series(traj, law, kernel, true);
  const std::vector<ScalarField> defect = balance_defect(series);
  std::vector<ResidualSample> out;
  for (std::size_t i = 0; i < defect.size(); ++i) {
    const ScalarField r = defect[i] - series.anomalous[i];
    ResidualSample s;
    s.t = series.times[i];
    s.max_abs = r.max_abs();
    s.l1 = lp_norm(r, 1.0);
    s.anomalous_l1 = lp_norm(series.anomalous[i], 1.0);
    s.dissipation_l1 = lp_norm(series.triples[i].dissipation, 1.0);
    out.push_back(s);
  }
  return out;
}

template <class Traj>
BalanceReport balance_impl(const Traj& traj, Law law, const Window* window,
                           const MollifierKernel* kernel) {
  BalanceReport rep;
  rep.law = to_string(law);
  for (const auto& s : traj) {
    const DensityTriple t = local_densities(s, law);
    rep.times.push_back(s.t);
    rep.density.push_back(integral(t.density));
    rep.dissipation.push_back(integral(t.dissipation));
  }
  close_balance(rep);
  if (window && kernel) {
    std::vector<ScalarField> a;
    for (const auto& s : traj) a.push_back(anomalous_field(s, law, *kernel));
    rep.anomalous_integral = windowed_integral(rep.times, a, *window);
    rep.window = window->name;
    rep.eps = kernel->eps;
  }
  return rep;
}

template <class Traj>
SuitabilitySummary suitability_impl(const Traj& traj, Law law,
                                    const std::vector<MollifierKernel>& kernels,
                                    const std::vector<Window>& windows, double tolerance) {
  SuitabilitySummary out;
  out.tolerance = tolerance;
  for (const MollifierKernel& k : kernels) {
    const MollifiedSeries series = mollified_series(traj, law, k, true);
    std::vector<ScalarField> defect;
    if (series.times.size() >= 3) defect = balance_defect(series);
    std::vector<ScalarField> diss;
    for (const auto& t : series.triples) diss.push_back(t.dissipation);
    for (const Window& w : windows) {
      SuitabilityEntry e;
      e.window = w.name;
      e.eps = k.eps;
      e.anomalous = windowed_integral(series.times, series.anomalous, w);
      e.dissipation = windowed_integral(series.times, diss, w);
      e.defect = defect.empty() ? 0.0 : windowed_integral(series.times, defect, w);
      const double bound = tolerance * std::abs(e.dissipation);
      e.flagged = e.anomalous > bound || e.defect > bound;
      out.any_flagged = out.any_flagged || e.flagged;
      out.entries.push_back(e);
    }
  }
  return out;
}

template <class Traj>
SlopeRecord convergence_impl(const Traj& traj, Law law, const std::vector<MollifierKernel>& kernels,
                             const Window& window) {
  if (kernels.size() < 3) throw Error(ErrorKind::data, "convergence study needs at least three scales");
  SlopeRecord rec;
  const std::vector<double> times = times_of(traj);
  for (const MollifierKernel& k : kernels) {
    std::vector<ScalarField> a, a_abs;
    for (const auto& s : traj) {
      ScalarField f = anomalous_field(s, law, k);
      ScalarField g = f;
      for (double& v : g.data()) v = std::abs(v);
      a.push_back(std::move(f));
      a_abs.push_back(std::move(g));
    }
    rec.eps.push_back(k.eps);
    rec.signed_values.push_back(windowed_integral(times, a, window));
    rec.values.push_back(windowed_integral(times, a_abs, window));
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < rec.eps.size(); ++i) {
    if (rec.values[i] > 0.0) {
      lx.push_back(std::log(rec.eps[i]));
      ly.push_back(std::log(rec.values[i]));
    }
  }
  if (lx.size() < 2) {
    rec.exact_zero = true;
    rec.slope = std::numeric_limits<double>::quiet_NaN();
    rec.r2 = std::numeric_limits<double>::quiet_NaN();
    return rec;
  }
  std::tie(rec.slope, rec.r2) = fit_line(lx, ly);
  return rec;
}

}  // namespace

const char* to_string(Law law) {
  for (const auto& info : kLaws)
    if (info.law == law) return info.name;
  return "unknown";
}

Law parse_law(const std::string& name) {
  for (const auto& info : kLaws)
    if (name == info.name) return info.law;
  throw Error(ErrorKind::usage, "unknown law '" + name + "'");
}

std::vector<Law> all_laws() {
  std::vector<Law> out;
  for (const auto& info : kLaws) out.push_back(info.law);
  return out;
}

bool has_anomalous_formula(Law law) {
  return law != Law::fluid_helicity && law != Law::total_helicity;
}

bool is_energy_law(Law law) {
  return law == Law::mll_energy || law == Law::hmhd_energy || law == Law::mhd_energy;
}

DensityTriple local_densities(const MllState& state, Law law) {
  require_mll_law(law);
  const MllRates r = rhs_mll(state);
  return mll_triple(state.m, state.E, state.H, r.dm, state, state.scheme == MllScheme::penalized);
}

DensityTriple local_densities(const MhdState& state, Law law) {
  require_mhd_law(law, state.variant);
  return mhd_triple(mhd_fields(state, law, nullptr), law);
}

DensityTriple mollified_densities(const MllState& state, Law law, const MollifierKernel& kernel) {
  require_mll_law(law);
  const MllRates r = rhs_mll(state);
  return mll_triple(smooth(state.m, kernel), smooth(state.E, kernel), smooth(state.H, kernel),
                    smooth(r.dm, kernel), state, false);
}

DensityTriple mollified_densities(const MhdState& state, Law law, const MollifierKernel& kernel) {
  require_mhd_law(law, state.variant);
  return mhd_triple(mhd_fields(state, law, &kernel), law);
}

ScalarField anomalous_field(const MllState& state, Law law, const MollifierKernel& kernel) {
  require_mll_law(law);
  const MllRates r = rhs_mll(state);
  const VectorField y = r.dm - 2.0 * (state.H + laplacian(state.m));
  return -dot(commutator_wedge(state.m, y, kernel), smooth(y, kernel));
}

ScalarField anomalous_field(const MhdState& state, Law law, const MollifierKernel& kernel) {
  require_mhd_law(law, state.variant);
  if (!has_anomalous_formula(law)) {
    throw Error(ErrorKind::not_implemented,
                std::string("no anomalous-dissipation formula for ") + to_string(law));
  }
  const VectorField& u = state.u;
  const VectorField& B = state.B;
  const bool hall = state.variant == MhdVariant::hmhd;
  const VectorField curl_buB = curl(commutator_wedge(u, B, kernel));
  switch (law) {
    case Law::hmhd_energy:
    case Law::mhd_energy:
    case Law::crossed_helicity: {
      const VectorField u_e = smooth(u, kernel);
      const VectorField B_e = smooth(B, kernel);
      const TensorField c_bb = commutator_tensor(B, B, kernel);
      const VectorField div_c = div(commutator_tensor(u, u, kernel) - c_bb);
      const VectorField grad_a = grad(commutator_dot(B, B, kernel));
      const VectorField& lead = law == Law::crossed_helicity ? B_e : u_e;
      const VectorField& tail = law == Law::crossed_helicity ? u_e : B_e;
      ScalarField out = -dot(lead, div_c) - 0.5 * dot(lead, grad_a) + dot(tail, curl_buB);
      if (hall && law != Law::crossed_helicity) out -= dot(B_e, curl(div(c_bb)));
      return out;
    }
    case Law::hmhd_magneto_helicity:
    case Law::mhd_magneto_helicity: {
      const VectorField A_e = biot_savart(smooth(B, kernel));
      ScalarField out = 2.0 * dot(A_e, curl_buB);
      if (hall) out -= 2.0 * dot(A_e, curl(div(commutator_tensor(B, B, kernel))));
      return out;
    }
    default:
      break;
  }
  throw Error(ErrorKind::not_implemented, "no anomalous-dissipation formula");
}

std::vector<ResidualSample> identity_residual(const MllTrajectory& trajectory, Law law,
                                              const MollifierKernel& kernel) {
  return residual_impl(trajectory, law, kernel);
}

std::vector<ResidualSample> identity_residual(const MhdTrajectory& trajectory, Law law,
                                              const MollifierKernel& kernel) {
  return residual_impl(trajectory, law, kernel);
}

BalanceReport global_balance(const MllTrajectory& trajectory, Law law, const Window* window,
                             const MollifierKernel* kernel) {
  return balance_impl(trajectory, law, window, kernel);
}

BalanceReport global_balance(const MhdTrajectory& trajectory, Law law, const Window* window,
                             const MollifierKernel* kernel) {
  return balance_impl(trajectory, law, window, kernel);
}

SuitabilitySummary suitability_monitor(const MhdTrajectory& trajectory, Law law,
                                       const std::vector<MollifierKernel>& kernels,
                                       const std::vector<Window>& windows, double tolerance) {
  return suitability_impl(trajectory, law, kernels, windows, tolerance);
}

SuitabilitySummary suitability_monitor(const MllTrajectory& trajectory, Law law,
                                       const std::vector<MollifierKernel>& kernels,
                                       const std::vector<Window>& windows, double tolerance) {
  return suitability_impl(trajectory, law, kernels, windows, tolerance);
}

SlopeRecord convergence_study(const MllTrajectory& trajectory, Law law,
                              const std::vector<MollifierKernel>& kernels, const Window& window) {
  return convergence_impl(trajectory, law, kernels, window);
}

SlopeRecord convergence_study(const MhdTrajectory& trajectory, Law law,
                              const std::vector<MollifierKernel>& kernels, const Window& window) {
  return convergence_impl(trajectory, law, kernels, window);
}

std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::data, "line fit needs two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::data, "line fit needs distinct abscissae");
  const double slope = sxy / sxx;
  const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, r2};
}

std::vector<double> sample_derivative(const std::vector<double>& t, const std::vector<double>& f) {
  if (t.size() < 3 || f.size() != t.size()) {
    throw Error(ErrorKind::data, "derivative estimate needs at least three samples");
  }
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& [j, w] : derivative_weights(t, i)) out[i] += w * f[j];
  return out;
}

}  // namespace olf
