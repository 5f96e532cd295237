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

#include "olf/balance.hpp"

#include "olf/error.hpp"

namespace olf {

const std::vector<double>* BalanceReport::find_extra(const std::string& name) const {
  for (const auto& [key, series] : extra)
    if (key == name) return &series;
  return nullptr;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
  if (t.size() != f.size()) throw Error(ErrorKind::shape, "time and value series differ in length");
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 1; i < t.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (f[i] + f[i - 1]);
  return out;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
  const auto c = cumulative_trapezoid(t, f);
  return c.empty() ? 0.0 : c.back();
}

void close_balance(BalanceReport& report) {
  if (report.times.size() < 2) {
    throw Error(ErrorKind::data, "a balance needs at least two samples");
  }
  report.cumulative = cumulative_trapezoid(report.times, report.dissipation);
  report.residual.resize(report.times.size());
  for (std::size_t i = 0; i < report.times.size(); ++i)
    report.residual[i] = report.density[i] + report.cumulative[i] - report.density[0];
}

BalanceReport balance_report(const std::string& law, const std::vector<BalanceSample>& samples) {
  BalanceReport rep;
  rep.law = law;
  for (const BalanceSample& s : samples) {
    rep.times.push_back(s.t);
    rep.density.push_back(s.density);
    rep.dissipation.push_back(s.dissipation);
  }
  close_balance(rep);
  return rep;
}

}  // namespace olf
