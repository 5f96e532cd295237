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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <vector>

#include "olf/error.hpp"
#include "olf/field.hpp"
#include "olf/grid.hpp"
#include "olf/reduce.hpp"
#include "olf/snapshot.hpp"
#include "oracles.hpp"

using namespace olf;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no olf::Error thrown";
  return ErrorKind::io;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST(Grid, RejectsBadSizes) {
  EXPECT_EQ(kind_of([] { Grid g(12); }), ErrorKind::parameter);
  EXPECT_EQ(kind_of([] { Grid g(4); }), ErrorKind::parameter);
  EXPECT_EQ(kind_of([] { Grid g(16, -1.0); }), ErrorKind::parameter);
}

TEST(Grid, SampleOrderIsXSlowest) {
  Grid g(8, 1.0);
  EXPECT_EQ(g.index(0, 0, 1), 1u);
  EXPECT_EQ(g.index(0, 1, 0), 8u);
  EXPECT_EQ(g.index(1, 0, 0), 64u);
  EXPECT_DOUBLE_EQ(g.coord(3), 3.0 / 8.0);
  EXPECT_EQ(g.wave_index(3), 3);
  EXPECT_EQ(g.wave_index(4), -4);
  EXPECT_EQ(g.wave_index(7), -1);
  EXPECT_EQ(g.spectral_size(), 8u * 8u * 5u);
  const ScalarField x = sample(g, [](double a, double, double) { return a; });
  EXPECT_DOUBLE_EQ(x.at(5, 0, 0), 5.0 / 8.0);
}

TEST(Field, PointwiseAlgebra) {
  Grid g(8);
  const VectorField a = constant_vector(g, {1.0, 2.0, 3.0});
  const VectorField b = constant_vector(g, {-2.0, 0.5, 4.0});
  const auto c = oracle::cross({1.0, 2.0, 3.0}, {-2.0, 0.5, 4.0});
  const VectorField x = cross(a, b);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(x[i][17], c[static_cast<std::size_t>(i)]);
  EXPECT_DOUBLE_EQ(dot(a, b)[5], -2.0 + 1.0 + 12.0);
  EXPECT_DOUBLE_EQ(norm2(a)[0], 14.0);
  EXPECT_DOUBLE_EQ(outer(a, b)(2, 0)[3], -6.0);
  VectorField y = a;
  axpy(y, 2.0, b);
  EXPECT_DOUBLE_EQ(y[2][9], 11.0);
}

TEST(Reduce, IntegralsAndNorms) {
  Grid g(16);
  const double vol = std::pow(2.0 * std::numbers::pi, 3);
  const ScalarField one(g, 1.0);
  EXPECT_NEAR(integral(one), vol, 1e-9);
  const ScalarField s = sample(g, [](double x, double, double) { return std::sin(x); });
  EXPECT_NEAR(integral(s), 0.0, 1e-12);
  // int sin^2 = vol / 2 exactly on the grid.
  EXPECT_NEAR(lp_norm(s, 2.0), std::sqrt(vol / 2.0), 1e-12);
  EXPECT_NEAR(lp_norm(s, infinity), 1.0, 1e-12);
  const VectorField v = constant_vector(g, {3.0, 4.0, 0.0});
  EXPECT_NEAR(lp_norm(v, 1.0), 5.0 * vol, 1e-9);
  EXPECT_EQ(kind_of([&] { lp_norm(s, 0.5); }), ErrorKind::parameter);
}

TEST(Snapshot, RoundTripIsBitExact) {
  Grid g(8, 3.0);
  const ScalarField a = sample(g, [](double x, double y, double z) { return std::exp(x) - y * z / 7.0; });
  const ScalarField b = sample(g, [](double x, double, double z) { return 1.0 / (1.0 + x + z); });
  const auto path = temp_file("olf_roundtrip.olf");
  write_snapshot(path, {a, b});
  const auto back = read_snapshot(path, 3.0);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].data(), a.data());
  EXPECT_EQ(back[1].data(), b.data());
  EXPECT_TRUE(back[0].grid() == g);
}

TEST(Snapshot, HeaderLayout) {
  Grid g(8);
  const auto path = temp_file("olf_header.olf");
  ScalarField f(g, 0.0);
  f[1] = 1.0;
  write_snapshot(path, std::vector<ScalarField>{f});
  std::ifstream in(path, std::ios::binary);
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  ASSERT_EQ(bytes.size(), 10u + 8u * 512u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "OLF1");
  EXPECT_EQ(bytes[4], 8);
  EXPECT_EQ(bytes[5] | bytes[6] | bytes[7], 0);
  EXPECT_EQ(bytes[8], 1);
  EXPECT_EQ(bytes[9], 0);
  // 1.0 = 0x3ff0000000000000, little endian, second sample.
  EXPECT_EQ(bytes[10 + 8 + 7], 0x3f);
  EXPECT_EQ(bytes[10 + 8 + 6], 0xf0);
}

TEST(Snapshot, CorruptFilesAreDataErrors) {
  const auto path = temp_file("olf_bad.olf");
  {
    std::ofstream out(path, std::ios::binary);
    out << "OLF2garbage";
  }
  EXPECT_EQ(kind_of([&] { read_snapshot(path, 1.0); }), ErrorKind::data);
  Grid g(8);
  write_snapshot(path, std::vector<ScalarField>{ScalarField(g, 2.0)});
  std::filesystem::resize_file(path, 100);
  EXPECT_EQ(kind_of([&] { read_snapshot(path, 1.0); }), ErrorKind::data);
  EXPECT_EQ(kind_of([&] { read_snapshot(temp_file("olf_missing.olf"), 1.0); }), ErrorKind::data);
}
