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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "olf/config.hpp"
#include "olf/mhd.hpp"
#include "olf/mll.hpp"

namespace olf {

// Run directory layout:
//   config.cfg           verbatim copy of the config text
//   series.csv           energy balance, one row per sample
//   series_<law>.csv     further global balances (helicity laws)
//   snapshots/index.csv  index,t,file
//   snapshots/*.olf      OLF1 state snapshots (u,B or m,E,H)
//   report.json          run, balances[], anomalous[], besov[], flags[]
//
// Series files start with "# schema=olf-series/1 law=<law> config_hash=<h>"
// followed by the column header t,E,D,cumD,residual (H in place of E for
// helicity laws).  Floats use the shortest round-trip decimal form.
struct RunOutcome {
  std::filesystem::path directory;
  bool completed = true;
  std::string failure;
  std::size_t steps = 0;
  std::size_t samples = 0;
};

// Integrates the configured system and writes the run directory.  A blow-up
// or stability violation keeps the outputs written so far and records the
// failure in report.json.
RunOutcome simulate(const RunConfig& config);

// Snapshot trajectory of a run directory.
struct LoadedRun {
  RunConfig config;
  std::vector<double> times;
  MhdTrajectory mhd;
  MllTrajectory mll;
};
LoadedRun load_run(const std::filesystem::path& directory);

struct DiagnoseOptions {
  std::vector<std::string> laws;     // empty: the run's configured laws
  std::vector<std::string> eps;      // lengths, "4h" style allowed
  std::vector<std::string> windows;  // empty: the run's configured windows
  std::optional<double> tolerance;
};

// JSON document with the report keys and a CSV of law,window,eps,integral.
struct TextOutput {
  std::string json;
  std::string csv;
};

TextOutput diagnose(const std::filesystem::path& directory, const DiagnoseOptions& options);
// Profiles of the chosen field ("" selects the run's besov.field) for each
// exponent triple; the CSV lists alpha,p,r,shell,value.
TextOutput besov_scan(const std::filesystem::path& directory,
                      const std::vector<BesovExponents>& exponents, const std::string& field = "");
// CSV of t and the gap functional (L for MLL runs, J for MHD/HMHD runs).
std::string gap(const std::filesystem::path& run_a, const std::filesystem::path& run_b);

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace olf
