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

#include "olf/error.hpp"
#include "olf/presets.hpp"
#include "olf/reduce.hpp"
#include "olf/spectral.hpp"
#include "oracles.hpp"

using namespace olf;

namespace {

VectorField smooth_field(const Grid& g, std::uint64_t seed) {
  PresetParams p;
  p.seed = seed;
  p.kmax = 3;
  return random_vector_field(g, p);
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

}  // namespace

TEST(Spectral, RoundTrip) {
  Grid g(16);
  const ScalarField f = random_scalar_field(g, {});
  EXPECT_LT(oracle::max_diff(inverse(forward(f)), f), 1e-14);
}

TEST(Spectral, ParsevalHoldsForRandomData) {
  Grid g(32);
  ScalarField f(g);
  std::uint64_t s = 88172645463325252ull;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    f[i] = static_cast<double>(s % 1000003) / 1000003.0 - 0.3;
  }
  const double direct = inner_product(f, f);
  EXPECT_LT(rel(std::abs(spectral_energy(forward(f)) - direct), direct), 1e-12);
}

TEST(Spectral, ExactDerivativesOfTrigonometricFields) {
  Grid g(16, 4.0);
  const double k = 2.0 * std::numbers::pi / 4.0;
  const ScalarField f = sample(g, [k](double x, double y, double z) {
    return std::sin(2 * k * x) * std::cos(k * y) + std::cos(3 * k * z);
  });
  const ScalarField dx = sample(g, [k](double x, double y, double) {
    return 2 * k * std::cos(2 * k * x) * std::cos(k * y);
  });
  const ScalarField dz = sample(g, [k](double, double, double z) { return -3 * k * std::sin(3 * k * z); });
  const ScalarField lap = sample(g, [k](double x, double y, double z) {
    return -5 * k * k * std::sin(2 * k * x) * std::cos(k * y) - 9 * k * k * std::cos(3 * k * z);
  });
  EXPECT_LT(oracle::max_diff(partial(f, 0), dx), 1e-12);
  EXPECT_LT(oracle::max_diff(partial(f, 2), dz), 1e-12);
  EXPECT_LT(oracle::max_diff(laplacian(f), lap), 1e-11);
}

TEST(Spectral, AgreesWithFourthOrderDifferences) {
  // The FD4 error shrinks by ~16 per grid doubling on a smooth field.
  double err[2];
  int i = 0;
  for (std::size_t n : {16u, 32u}) {
    Grid g(n);
    const ScalarField f = sample(g, [](double x, double y, double z) {
      return std::exp(std::sin(x) + 0.5 * std::cos(y - z));
    });
    err[i++] = oracle::max_diff(partial(f, 1), oracle::fd4(f, 1));
  }
  EXPECT_GT(err[0] / err[1], 12.0);
  EXPECT_LT(err[1], 1e-3);
}

TEST(Spectral, VectorCalculusIdentities) {
  Grid g(32);
  const VectorField v = smooth_field(g, 3);
  const ScalarField phi = random_scalar_field(g, {});
  const double scale = lp_norm(curl(v), infinity);
  EXPECT_LT(rel(div(curl(v)).max_abs(), scale), 1e-12);
  EXPECT_LT(rel(curl(grad(phi)).max_norm(), lp_norm(grad(phi), infinity)), 1e-12);
  // curl curl = grad div - lap
  const VectorField lhs = curl(curl(v));
  const VectorField rhs = grad(div(v)) - laplacian(v);
  EXPECT_LT(rel(oracle::max_diff(lhs, rhs), lhs.max_norm()), 1e-12);
}

TEST(Spectral, LerayProjection) {
  Grid g(32);
  const VectorField v = smooth_field(g, 5);
  const VectorField p = leray_project(v);
  EXPECT_LT(rel(div(p).max_abs(), div(v).max_abs()), 1e-12);
  EXPECT_LT(rel(oracle::max_diff(leray_project(p), p), p.max_norm()), 1e-13);
  EXPECT_LE(lp_norm(p, 2.0), lp_norm(v, 2.0));
  const auto mv = v.mean();
  const auto mp = p.mean();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(mp[i], mv[i], 1e-13);
}

TEST(Spectral, BiotSavartInvertsCurl) {
  Grid g(32);
  const VectorField a = random_solenoidal_field(g, {});
  EXPECT_LT(rel(oracle::max_diff(biot_savart(curl(a)), a), a.max_norm()), 1e-10);
  const VectorField b = curl(a);
  EXPECT_LT(rel(oracle::max_diff(curl(biot_savart(b)), b), b.max_norm()), 1e-10);
  EXPECT_LT(div(biot_savart(b)).max_abs(), 1e-10);
  const VectorField shifted = b + constant_vector(g, {0.0, 1.0, 0.0});
  try {
    biot_savart(shifted);
    FAIL() << "mean field accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::gauge);
  }
}

TEST(Spectral, InverseLaplacianIsMeanFree) {
  Grid g(16);
  const ScalarField f = random_scalar_field(g, {});
  const ScalarField u = inverse_laplacian(f);
  EXPECT_NEAR(u.mean(), 0.0, 1e-14);
  ScalarField mean_free = f;
  for (auto& x : mean_free.data()) x -= f.mean();
  EXPECT_LT(oracle::max_diff(laplacian(u), mean_free), 1e-12);
}

TEST(Spectral, DealiasingRule) {
  Grid g(32);
  EXPECT_TRUE(dealias_keeps(g, {10, 0, 0}));
  EXPECT_FALSE(dealias_keeps(g, {11, 0, 0}));
  EXPECT_TRUE(dealias_keeps(g, {6, 6, 6}));
  EXPECT_FALSE(dealias_keeps(g, {7, 7, 7}));
  const ScalarField low = sample(g, [](double x, double, double) { return std::cos(10 * x); });
  EXPECT_LT(oracle::max_diff(dealiased(low), low), 1e-13);
  const ScalarField high = sample(g, [](double x, double, double) { return std::cos(12 * x); });
  EXPECT_LT(dealiased(high).max_abs(), 1e-13);
}

TEST(Spectral, NonFiniteInputIsRejected) {
  Grid g(8);
  ScalarField f(g);
  f[3] = std::nan("");
  try {
    forward(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_field);
  }
}
