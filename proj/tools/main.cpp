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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include <CLI11.hpp>

#include "olf/config.hpp"
#include "olf/error.hpp"
#include "olf/run.hpp"

namespace {

// Exit codes: 0 success, 1 runtime or data error, 2 bad arguments or
// config (usage, schema, parameter, resolution, shift), 3 simulation stopped
// by a blow-up or stability violation.
int exit_code(const olf::Error& e) {
  switch (e.kind()) {
    case olf::ErrorKind::usage:
    case olf::ErrorKind::schema:
    case olf::ErrorKind::parameter:
    case olf::ErrorKind::resolution:
    case olf::ErrorKind::shift: return 2;
    default: return 1;
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw olf::Error(olf::ErrorKind::io, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
#if defined(__GLIBC__)
  // Keep freed field buffers in the heap between solver stages.
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
  CLI::App app{"olf: energy and helicity balance diagnostics for MLL, MHD and Hall-MHD runs.\n"
               "FFT threads come from OLF_THREADS (default 1)."};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run a config and write its run directory");
  std::string config_path, out_dir;
  sim->add_option("config", config_path, "config file")->required();
  sim->add_option("-o,--output", out_dir, "override output.directory");

  auto* diag = app.add_subcommand("diagnose", "balance, anomalous and suitability records of a run");
  std::string run_dir, json_out, csv_out;
  olf::DiagnoseOptions dopts;
  double tolerance = -1.0;
  diag->add_option("run-dir", run_dir, "run directory")->required();
  diag->add_option("--law", dopts.laws, "law name (repeatable)");
  diag->add_option("--eps", dopts.eps, "mollifier radius, e.g. 4h (repeatable)");
  diag->add_option("--window", dopts.windows, "window preset (repeatable)");
  diag->add_option("--tolerance", tolerance, "suitability tolerance");
  diag->add_option("--json", json_out, "JSON output path (default stdout)");
  diag->add_option("--csv", csv_out, "CSV of law,window,eps,integral");

  auto* bes = app.add_subcommand("besov", "Besov difference-quotient profiles of a run");
  std::string alpha = "1/3", p = "3", r = "3", field;
  bes->add_option("run-dir", run_dir, "run directory")->required();
  bes->add_option("--alpha", alpha, "smoothness exponent (fractions allowed)");
  bes->add_option("--p", p, "space integrability exponent");
  bes->add_option("--r", r, "time integrability exponent");
  bes->add_option("--field", field, "field name (u, B, m, E, H)");
  bes->add_option("--json", json_out, "JSON output path (default stdout)");
  bes->add_option("--csv", csv_out, "CSV of alpha,p,r,shell,value");

  auto* gp = app.add_subcommand("gap", "weak-strong gap functional between two runs");
  std::string run_b, gap_out;
  gp->add_option("dir-a", run_dir, "first run directory")->required();
  gp->add_option("dir-b", run_b, "second run directory")->required();
  gp->add_option("-o,--output", gap_out, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      olf::RunConfig config = olf::load_config(config_path);
      if (!out_dir.empty()) config.output_dir = out_dir;
      const olf::RunOutcome res = olf::simulate(config);
      std::cerr << "olf: " << res.steps << " steps, " << res.samples << " samples -> "
                << res.directory.string() << "\n";
      if (!res.completed) {
        std::cerr << "olf: run stopped: " << res.failure << "\n";
        return 3;
      }
    } else if (*diag) {
      if (tolerance >= 0.0) dopts.tolerance = tolerance;
      const olf::TextOutput out = olf::diagnose(run_dir, dopts);
      emit(out.json, json_out);
      if (!csv_out.empty()) emit(out.csv, csv_out);
    } else if (*bes) {
      const olf::BesovExponents e{olf::parse_exponent(alpha), olf::parse_exponent(p), olf::parse_exponent(r)};
      const olf::TextOutput out = olf::besov_scan(run_dir, {e}, field);
      emit(out.json, json_out);
      if (!csv_out.empty()) emit(out.csv, csv_out);
    } else if (*gp) {
      emit(olf::gap(run_dir, run_b), gap_out);
    }
  } catch (const olf::Error& e) {
    std::cerr << "olf: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "olf: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
