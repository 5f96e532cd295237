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

#include "olf/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "olf/balance.hpp"
#include "olf/diagnostics.hpp"
#include "olf/error.hpp"
#include "olf/mollify.hpp"
#include "olf/reduce.hpp"

namespace olf {

namespace {

const Grid& grid_of(const Field& f) {
  return std::visit([](const auto& x) -> const Grid& { return x.grid(); }, f);
}

double shifted_difference_norm(const Field& f, const Shift& steps, double p) {
  return std::visit([&](const auto& x) { return lp_norm(shifted(x, steps) - x, p); }, f);
}

double time_norm(const std::vector<double>& t, const std::vector<double>& f, double r) {
  if (f.size() == 1) return f.front();
  if (std::isinf(r)) return *std::max_element(f.begin(), f.end());
  std::vector<double> fr(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fr[i] = std::pow(f[i], r);
  return std::pow(trapezoid(t, fr), 1.0 / r);
}

void check_exponents(double alpha, double p, double r) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw Error(ErrorKind::parameter, "alpha must lie in (0, 2)");
  if (!(p >= 1.0) || !(r >= 1.0)) throw Error(ErrorKind::parameter, "p and r must be at least 1");
}

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

double difference_seminorm(const FieldSeries& traj, const Shift& steps, double alpha, double p,
                           double r) {
  check_exponents(alpha, p, r);
  if (traj.values.empty() || traj.values.size() != traj.times.size()) {
    throw Error(ErrorKind::data, "difference seminorm needs matching, non-empty samples");
  }
  const Grid& g = grid_of(traj.values.front());
  const double h = g.spacing();
  const double mag = h * std::sqrt(static_cast<double>(steps[0] * steps[0] + steps[1] * steps[1] +
                                                       steps[2] * steps[2]));
  const long cheb = std::max({std::labs(steps[0]), std::labs(steps[1]), std::labs(steps[2])});
  if (mag < h * (1.0 - 1e-12) || static_cast<double>(cheb) * h > g.box() / 8.0 * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "shift of length " << mag << " outside [h, L/8] per axis";
    throw Error(ErrorKind::shift, msg.str());
  }
  std::vector<double> f;
  for (const Field& v : traj.values) f.push_back(shifted_difference_norm(v, steps, p) / std::pow(mag, alpha));
  return time_norm(traj.times, f, r);
}

double difference_seminorm(const FieldSeries& traj, const std::array<double, 3>& y, double alpha,
                           double p, double r) {
  if (traj.values.empty()) throw Error(ErrorKind::data, "empty series");
  const double h = grid_of(traj.values.front()).spacing();
  Shift steps{};
  for (int i = 0; i < 3; ++i) {
    const double s = y[static_cast<std::size_t>(i)] / h;
    const double rs = std::round(s);
    if (std::abs(s - rs) > 1e-9 * std::max(1.0, std::abs(s))) {
      std::ostringstream msg;
      msg << "shift component " << y[static_cast<std::size_t>(i)] << " is not a multiple of h=" << h;
      throw Error(ErrorKind::shift, msg.str());
    }
    steps[static_cast<std::size_t>(i)] = static_cast<long>(rs);
  }
  return difference_seminorm(traj, steps, alpha, p, r);
}

std::vector<long> default_shells(const Grid& grid) {
  const long limit = static_cast<long>(std::floor(grid.box() / 8.0 / grid.spacing() + 1e-9));
  std::vector<long> out;
  for (long s = 1; s <= limit; s *= 2) out.push_back(s);
  if (out.size() < 4) {
    out.clear();
    for (long s = 1; s <= limit; ++s) out.push_back(s);
  }
  return out;
}

BesovProfile tilde_norm(const FieldSeries& traj, double alpha, double p, double r,
                        const std::vector<long>& shells_in) {
  check_exponents(alpha, p, r);
  if (traj.values.empty()) throw Error(ErrorKind::data, "empty series");
  const Grid& g = grid_of(traj.values.front());
  const std::vector<long> shells = shells_in.empty() ? default_shells(g) : shells_in;
  if (shells.size() < 4) throw Error(ErrorKind::data, "tilde_norm needs at least four shells");
  for (std::size_t i = 1; i < shells.size(); ++i)
    if (shells[i] <= shells[i - 1]) throw Error(ErrorKind::data, "shells must increase strictly");
  BesovProfile prof;
  prof.alpha = alpha;
  prof.p = p;
  prof.r = r;
  for (long s : shells) {
    double best = 0.0;
    for (long a = -1; a <= 1; ++a)
      for (long b = -1; b <= 1; ++b)
        for (long c = -1; c <= 1; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          best = std::max(best, difference_seminorm(traj, Shift{s * a, s * b, s * c}, alpha, p, r));
        }
    prof.shells.push_back({static_cast<double>(s) * g.spacing(), best});
    prof.seminorm = std::max(prof.seminorm, best);
  }
  std::vector<double> lx, ly;
  for (const auto& sv : prof.shells) {
    if (sv.value > 0.0) {
      lx.push_back(std::log(sv.magnitude));
      ly.push_back(std::log(sv.value));
    }
  }
  if (lx.size() < prof.shells.size()) {
    prof.exact_zero = true;
    prof.slope = prof.r2 = prof.small_scale_slope = std::numeric_limits<double>::quiet_NaN();
    return prof;
  }
  std::tie(prof.slope, prof.r2) = fit_line(lx, ly);
  prof.small_scale_slope = fit_line({lx.begin(), lx.begin() + 3}, {ly.begin(), ly.begin() + 3}).first;
  prof.c0_heuristic = prof.small_scale_slope > 0.05;
  return prof;
}

ExponentVerdict exponent_map(double exponent, ExponentRule rule) {
  ExponentVerdict v;
  switch (rule) {
    case ExponentRule::mll_p_from_alpha:
      v.value = 9.0 / (3.0 * exponent - 1.0);
      v.admissible = exponent > 1.5 && exponent < 2.0;
      break;
    case ExponentRule::mll_q_from_beta:
      v.value = 12.0 / (4.0 * exponent - 1.0);
      v.admissible = exponent > 9.0 / 8.0 && exponent < 1.5;
      break;
    case ExponentRule::interpolation_beta:
      v.value = 0.75 * exponent;
      v.admissible = exponent > 1.5 && exponent < 2.0;
      break;
  }
  v.verdict = v.admissible ? "within theorem hypothesis" : "outside theorem hypothesis";
  return v;
}

HypothesisCheck check_hypothesis(double alpha, double p, double r) {
  HypothesisCheck c;
  const bool alpha_ok = alpha > 0.0 && alpha < 2.0 && alpha != 1.0;
  const bool pr_ok = p >= 1.0 && r >= 1.0;
  c.in_range = alpha_ok && pr_ok;
  if (!c.in_range) {
    c.verdict = "outside theorem hypothesis";
    return c;
  }
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
  if (close(alpha, 1.0 / 3.0) && close(p, 3.0) && close(r, 3.0)) {
    c.onsager_case = true;
    c.verdict = "critical energy-equality case (alpha=1/3, p=r=3)";
    return c;
  }
  if (alpha > 1.5 && close(p, 9.0 / (3.0 * alpha - 1.0)) && close(r, 3.0)) {
    c.verdict = "MLL energy criterion exponents";
    return c;
  }
  c.verdict = "within range; no named criterion matched";
  return c;
}

MhdExponentConditions mhd_conditions(double alpha, double beta) {
  MhdExponentConditions c;
  c.energy = alpha + 2.0 * beta >= 1.0;
  c.crossed = 2.0 * alpha + beta >= 1.0 && 3.0 * beta >= 1.0;
  return c;
}

double dyadic_chi(double r) { return 1.0 - smooth_step((r - 0.75) / (4.0 / 3.0 - 0.75)); }

double dyadic_phi(double xi) { return dyadic_chi(0.5 * xi) - dyadic_chi(xi); }

DyadicDecomposition dyadic_blocks(const ScalarField& f) {
  const Grid& g = f.grid();
  DyadicDecomposition out;
  out.mean = f.mean();
  const SpectralField s = forward(f);
  const double kmax = std::sqrt(3.0) * static_cast<double>(g.n()) / 2.0;
  const int j_max = static_cast<int>(std::ceil(std::log2(kmax / 0.75))) - 1;
  for (int j = -1; j <= j_max; ++j) {
    SpectralField b(g);
    const double scale = std::ldexp(1.0, -j);
    for_each_mode(g, [&](const Mode& m) {
      if (m.k2 == 0.0) return;
      const double xi = std::sqrt(static_cast<double>(m.w[0] * m.w[0] + m.w[1] * m.w[1] +
                                                      m.w[2] * m.w[2]));
      b[m.index] = dyadic_phi(scale * xi) * s[m.index];
    });
    out.j.push_back(j);
    out.blocks.push_back(inverse(b));
  }
  return out;
}

EmbeddingRecord embedding_check(const FieldSeries& traj, double alpha, double p,
                                double alpha_tilde, double r, const std::vector<long>& shells) {
  if (!(alpha_tilde < alpha) || alpha == 1.0 || alpha_tilde == 1.0 || !(alpha_tilde > 0.0) ||
      !(alpha < 2.0)) {
    throw Error(ErrorKind::parameter, "embedding needs 0 < alpha_tilde < alpha < 2, both != 1");
  }
  const double inv = 1.0 / p - (alpha - alpha_tilde) / 3.0;
  if (inv < 0.0) throw Error(ErrorKind::parameter, "scaling relation gives p_tilde outside [1, inf]");
  EmbeddingRecord rec;
  rec.p_tilde = inv == 0.0 ? infinity : 1.0 / inv;
  const BesovProfile a = tilde_norm(traj, alpha, p, r, shells);
  const BesovProfile b = tilde_norm(traj, alpha_tilde, rec.p_tilde, r, shells);
  rec.norm = a.seminorm;
  rec.norm_tilde = b.seminorm;
  if (rec.norm == 0.0) {
    rec.zero_field = true;
    rec.ratio = std::numeric_limits<double>::quiet_NaN();
  } else {
    rec.ratio = rec.norm_tilde / rec.norm;
  }
  return rec;
}

std::vector<BernsteinRatio> bernstein_ratios(const ScalarField& f, double p, double p_tilde) {
  if (!(p_tilde >= p) || !(p >= 1.0)) throw Error(ErrorKind::parameter, "need 1 <= p <= p_tilde");
  const DyadicDecomposition d = dyadic_blocks(f);
  const double k0 = f.grid().k0();
  const double expo = 3.0 * (1.0 / p - (std::isinf(p_tilde) ? 0.0 : 1.0 / p_tilde));
  std::vector<BernsteinRatio> out;
  const double total = lp_norm(f, 2.0);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const double np = lp_norm(d.blocks[i], p);
    if (!(np > 1e-12 * std::max(total, 1e-300))) continue;
    const double factor = std::pow(std::ldexp(1.0, d.j[i]) * k0, expo);
    out.push_back({d.j[i], lp_norm(d.blocks[i], p_tilde) / (factor * np)});
  }
  return out;
}

}  // namespace olf
