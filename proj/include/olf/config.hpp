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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "olf/mollify.hpp"
#include "olf/presets.hpp"

namespace olf {

enum class SystemKind { mll, mhd, hmhd };
enum class SchemeKind { strong, penalized, regularized };

enum class Law;

const char* to_string(SystemKind s);
const char* to_string(SchemeKind s);

struct BesovExponents {
  double alpha = 0.0;
  double p = 0.0;
  double r = 0.0;
};

// Run description.  The text format is one "key = value" pair per line,
// nested names joined by dots, '#' starting a comment:
//
//   system            mll | mhd | hmhd                          (required)
//   scheme            strong | penalized(eps) | regularized(eps[, gaussian])
//   grid.n            power of two >= 8                         (32)
//   grid.L            box length                                (2pi)
//   time.dt           step or "auto"                            (auto)
//   time.t_end        final time                                (required)
//   time.sample_every steps between recorded samples            (1)
//   init.preset       preset name                               (required)
//   init.seed, init.amplitude, init.sigma, init.kmin, init.kmax
//   mollifier.kind    bump | gaussian                           (bump)
//   mollifier.eps     comma-separated radius ladder             (empty)
//   diagnostics.laws  comma-separated law names       (energy + magneto)
//   diagnostics.windows  comma-separated window presets         (global)
//   diagnostics.tolerance  suitability tolerance                (1e-3)
//   besov.exponents   "alpha p r" triples separated by ';'      (empty)
//   besov.field       u | B | m | E | H                    (B, or m for mll)
//   output.directory  run directory                             (run)
//   output.snapshot_every  samples between snapshots, 0 = none  (10)
//
// Lengths accept the suffixes "h" (grid spacing) and "pi"; exponents accept
// fractions such as 1/3 and "inf".
struct RunConfig {
  SystemKind system = SystemKind::hmhd;
  SchemeKind scheme = SchemeKind::strong;
  double scheme_eps = 0.0;
  KernelKind scheme_kernel = KernelKind::bump;
  std::size_t n = 32;
  double box = 0.0;
  std::optional<double> dt;
  double t_end = 0.0;
  std::size_t sample_every = 1;
  std::string preset;
  PresetParams params;
  KernelKind mollifier_kind = KernelKind::bump;
  std::vector<double> eps_ladder;
  std::vector<std::string> laws;
  std::vector<std::string> windows;
  double tolerance = 1e-3;
  std::vector<BesovExponents> besov;
  std::string besov_field;
  std::filesystem::path output_dir = "run";
  std::size_t snapshot_every = 10;

  // Source text and its FNV-1a hash (16 hex digits).
  std::string source;
  std::string hash;
};

// Schema errors name the origin and line of the offending entry.
RunConfig parse_config(const std::string& text, const std::string& origin = "config");
RunConfig load_config(const std::filesystem::path& path);

std::string fnv1a_hex(const std::string& text);

// Whether a balance law is defined for runs of the given system.
bool law_applies(Law law, SystemKind system);

// "4h", "0.5", "2pi" -> length in box units.
double parse_length(const std::string& text, double spacing);
// "1/3", "3", "inf" -> value.
double parse_exponent(const std::string& text);
// Comma-separated list with surrounding blanks removed.
std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace olf
