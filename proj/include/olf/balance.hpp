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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace olf {

// Global balance of one conservation law along a stored trajectory:
// density(t), dissipation(t), cumulative dissipation and the residual
// rho(t) = density(t) + cumulative(t) - density(0).
struct BalanceReport {
  std::string law;
  std::vector<double> times;
  std::vector<double> density;
  std::vector<double> dissipation;
  std::vector<double> cumulative;
  std::vector<double> residual;
  // Space-time integral of the windowed anomalous field, when requested.
  std::optional<double> anomalous_integral;
  std::string window;
  double eps = 0.0;
  // Additional named series sharing the same times.
  std::vector<std::pair<std::string, std::vector<double>>> extra;

  double final_residual() const { return residual.empty() ? 0.0 : residual.back(); }
  const std::vector<double>* find_extra(const std::string& name) const;
};

// Global density and dissipation at one instant.
struct BalanceSample {
  double t = 0.0;
  double density = 0.0;
  double dissipation = 0.0;
};

// Closes a balance from streamed samples.
BalanceReport balance_report(const std::string& law, const std::vector<BalanceSample>& samples);

// Time series of a two-run gap functional.
struct GapSeries {
  std::vector<double> times;
  std::vector<double> value;
};

// Cumulative trapezoid rule, starting at zero.
std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& f);
double trapezoid(const std::vector<double>& t, const std::vector<double>& f);

// Fills cumulative and residual from times, density and dissipation.
void close_balance(BalanceReport& report);

}  // namespace olf
