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

#include "olf/run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "olf/besov.hpp"
#include "olf/diagnostics.hpp"
#include "olf/error.hpp"
#include "olf/presets.hpp"
#include "olf/snapshot.hpp"
#include "olf/spectral.hpp"
#include "olf/window.hpp"

namespace olf {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSeriesSchema = "olf-series/1";
constexpr const char* kReportSchema = "olf-report/1";

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::data, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json exponent_json(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

Json number_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

MhdVariant variant_of(SystemKind s) { return s == SystemKind::hmhd ? MhdVariant::hmhd : MhdVariant::mhd; }

// Rejects laws that belong to another system.
void require_law(Law law, SystemKind system) {
  const std::string name = to_string(law);
  const bool ok = law_applies(law, system);
  if (!ok) {
    std::string hint;
    if (law == Law::crossed_helicity) hint = " (MHD-only law)";
    if (law == Law::total_helicity) hint = " (HMHD-only law)";
    throw Error(ErrorKind::usage, "law " + name + " does not apply to a " + to_string(system) + " run" + hint);
  }
}

std::optional<HelicityKind> helicity_kind(Law law) {
  switch (law) {
    case Law::hmhd_magneto_helicity:
    case Law::mhd_magneto_helicity: return HelicityKind::magneto;
    case Law::fluid_helicity: return HelicityKind::fluid;
    case Law::crossed_helicity: return HelicityKind::crossed;
    case Law::total_helicity: return HelicityKind::total;
    default: return std::nullopt;
  }
}

std::vector<Law> parse_laws(const std::vector<std::string>& names, SystemKind system) {
  std::vector<Law> laws;
  for (const auto& n : names) {
    const Law law = parse_law(n);
    require_law(law, system);
    if (std::find(laws.begin(), laws.end(), law) == laws.end()) laws.push_back(law);
  }
  return laws;
}

std::string series_csv(const BalanceReport& rep, const std::string& hash) {
  const bool energy = is_energy_law(parse_law(rep.law));
  std::string out = std::string("# schema=") + kSeriesSchema + " law=" + rep.law + " config_hash=" + hash + "\n";
  out += energy ? "t,E,D,cumD,residual\n" : "t,H,D,cumD,residual\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    out += format_double(rep.times[i]) + "," + format_double(rep.density[i]) + "," +
           format_double(rep.dissipation[i]) + "," + format_double(rep.cumulative[i]) + "," +
           format_double(rep.residual[i]) + "\n";
  }
  return out;
}

Json balance_json(const BalanceReport& rep, const std::string& file) {
  Json j;
  j["law"] = rep.law;
  if (!file.empty()) j["series"] = file;
  j["samples"] = rep.times.size();
  if (rep.times.empty()) return j;
  double max_abs = 0.0;
  for (double r : rep.residual) max_abs = std::max(max_abs, std::abs(r));
  const double initial = rep.density.front();
  j["t_end"] = rep.times.back();
  j["initial"] = initial;
  j["final"] = rep.density.back();
  j["cumulative_dissipation"] = rep.cumulative.back();
  j["final_residual"] = rep.final_residual();
  j["max_abs_residual"] = max_abs;
  j["relative_residual"] = initial != 0.0 ? number_json(std::abs(rep.final_residual()) / std::abs(initial)) : Json(nullptr);
  if (!rep.extra.empty()) {
    Json extras = Json::object();
    for (const auto& [name, series] : rep.extra) extras[name] = series.empty() ? 0.0 : series.back();
    j["extras"] = extras;
  }
  return j;
}

Json empty_report(const RunConfig& c) {
  Json r;
  r["schema"] = kReportSchema;
  r["config_hash"] = c.hash;
  r["run"] = Json::object();
  r["balances"] = Json::array();
  r["anomalous"] = Json::array();
  r["besov"] = Json::array();
  r["flags"] = Json::array();
  return r;
}

Json run_json(const RunConfig& c) {
  Json j;
  j["system"] = to_string(c.system);
  j["scheme"] = to_string(c.scheme);
  if (c.scheme != SchemeKind::strong) j["scheme_eps"] = c.scheme_eps;
  j["n"] = c.n;
  j["L"] = c.box;
  j["t_end"] = c.t_end;
  j["sample_every"] = c.sample_every;
  j["snapshot_every"] = c.snapshot_every;
  j["preset"] = c.preset;
  j["seed"] = c.params.seed;
  j["threads"] = fft_threads();
  return j;
}

std::vector<ScalarField> components(const MhdState& s) {
  return {s.u[0], s.u[1], s.u[2], s.B[0], s.B[1], s.B[2]};
}

std::vector<ScalarField> components(const MllState& s) {
  return {s.m[0], s.m[1], s.m[2], s.E[0], s.E[1], s.E[2], s.H[0], s.H[1], s.H[2]};
}

double stable_dt(const MhdState& s) { return mhd_stable_dt(s); }
double stable_dt(const MllState& s) { return mll_stable_dt(s); }

std::vector<MollifierKernel> kernels_for(const Grid& grid, const std::vector<double>& ladder, KernelKind kind) {
  std::vector<MollifierKernel> out;
  for (double eps : ladder) out.push_back(make_mollifier(grid, eps, kind));
  return out;
}

const VectorField& pick(const MhdState& s, const std::string& f) {
  if (f == "u") return s.u;
  if (f == "B") return s.B;
  throw Error(ErrorKind::usage, "no field '" + f + "' in an MHD run (u, B)");
}

const VectorField& pick(const MllState& s, const std::string& f) {
  if (f == "m") return s.m;
  if (f == "E") return s.E;
  if (f == "H") return s.H;
  throw Error(ErrorKind::usage, "no field '" + f + "' in an MLL run (m, E, H)");
}

template <class Traj>
FieldSeries field_series(const Traj& traj, const std::string& field) {
  FieldSeries s;
  for (const auto& st : traj) {
    s.times.push_back(st.t);
    s.values.emplace_back(pick(st, field));
  }
  return s;
}

Json besov_json(const FieldSeries& series, const BesovExponents& e, const std::string& field,
                std::string* csv) {
  const HypothesisCheck hyp = check_hypothesis(e.alpha, e.p, e.r);
  Json j;
  j["field"] = field;
  j["alpha"] = e.alpha;
  j["p"] = exponent_json(e.p);
  j["r"] = exponent_json(e.r);
  j["verdict"] = hyp.verdict;
  j["in_range"] = hyp.in_range;
  j["onsager_case"] = hyp.onsager_case;
  if (!(e.alpha > 0.0 && e.alpha < 2.0 && e.p >= 1.0 && e.r >= 1.0)) {
    j["shells"] = Json::array();
    return j;
  }
  const BesovProfile prof = tilde_norm(series, e.alpha, e.p, e.r);
  Json shells = Json::array();
  for (const ShellValue& s : prof.shells) {
    shells.push_back({{"magnitude", s.magnitude}, {"value", s.value}});
    if (csv) {
      *csv += format_double(e.alpha) + "," + format_double(e.p) + "," + format_double(e.r) + "," +
              format_double(s.magnitude) + "," + format_double(s.value) + "\n";
    }
  }
  j["shells"] = shells;
  j["slope"] = prof.slope;
  j["r2"] = prof.r2;
  j["seminorm"] = prof.seminorm;
  j["small_scale_slope"] = prof.small_scale_slope;
  j["c0_heuristic"] = prof.c0_heuristic;
  j["exact_zero"] = prof.exact_zero;
  return j;
}

// Balance, anomalous-dissipation and suitability records over a snapshot
// trajectory.
template <class Traj>
void analyze(const Traj& traj, const std::vector<Law>& laws, const std::vector<double>& ladder,
             KernelKind kind, const std::vector<std::string>& windows, double tolerance,
             bool with_balances, Json& report, std::string& csv) {
  if (traj.empty()) return;
  const Grid& grid = traj.front().grid();
  const double t0 = traj.front().t;
  const double t1 = traj.back().t;
  if (with_balances && traj.size() >= 2) {
    for (Law law : laws) report["balances"].push_back(balance_json(global_balance(traj, law), ""));
  }
  if (ladder.empty()) return;
  const std::vector<MollifierKernel> kernels = kernels_for(grid, ladder, kind);
  std::vector<Window> wins;
  for (const auto& w : windows) wins.push_back(window_preset(w, t0, t1, grid.box()));
  for (Law law : laws) {
    if (!has_anomalous_formula(law)) {
      report["flags"].push_back({{"kind", "not_implemented"},
                                 {"law", to_string(law)},
                                 {"message", "no anomalous-dissipation formula for this law"}});
      continue;
    }
    for (const Window& w : wins) {
      Json rec;
      rec["kind"] = "convergence";
      rec["law"] = to_string(law);
      rec["window"] = w.name;
      rec["eps"] = ladder;
      if (kernels.size() >= 3) {
        const SlopeRecord s = convergence_study(traj, law, kernels, w);
        rec["integral"] = s.signed_values;
        rec["abs_integral"] = s.values;
        rec["slope"] = number_json(s.slope);
        rec["r2"] = number_json(s.r2);
        rec["exact_zero"] = s.exact_zero;
        for (std::size_t i = 0; i < ladder.size(); ++i) {
          csv += std::string(to_string(law)) + "," + w.name + "," + format_double(ladder[i]) + "," +
                 format_double(s.signed_values[i]) + "\n";
        }
      } else {
        Json vals = Json::array();
        for (std::size_t i = 0; i < kernels.size(); ++i) {
          const BalanceReport b = global_balance(traj, law, &w, &kernels[i]);
          const double v = b.anomalous_integral.value_or(0.0);
          vals.push_back(v);
          csv += std::string(to_string(law)) + "," + w.name + "," + format_double(ladder[i]) + "," +
                 format_double(v) + "\n";
        }
        rec["integral"] = vals;
      }
      report["anomalous"].push_back(rec);
    }
    if (traj.size() >= 3) {
      const SuitabilitySummary sum = suitability_monitor(traj, law, kernels, wins, tolerance);
      Json rec;
      rec["kind"] = "suitability";
      rec["law"] = to_string(law);
      rec["tolerance"] = tolerance;
      rec["any_flagged"] = sum.any_flagged;
      Json entries = Json::array();
      for (const SuitabilityEntry& e : sum.entries) {
        Json ej{{"window", e.window}, {"eps", e.eps}, {"anomalous", e.anomalous},
                {"defect", e.defect}, {"dissipation", e.dissipation}, {"flagged", e.flagged}};
        if (e.flagged) {
          Json flag = ej;
          flag["kind"] = "suitability";
          flag["law"] = to_string(law);
          report["flags"].push_back(flag);
        }
        entries.push_back(ej);
      }
      rec["entries"] = entries;
      report["anomalous"].push_back(rec);
    }
  }
}

std::size_t step_count(double t_end, double dt) {
  const double ratio = t_end / dt;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio - 1e-9 * ratio)));
}

// Shared time loop.  `record` receives each sampled state, `snapshot` each
// state on the snapshot cadence.
template <class State, class Record, class Snap>
void integrate(State state, const RunConfig& c, RunOutcome& outcome, Json& run, Json& report,
               Record&& record, Snap&& snapshot) {
  const double dt0 = c.dt ? *c.dt : stable_dt(state);
  const std::size_t steps = step_count(c.t_end, dt0);
  const double dt = c.t_end / static_cast<double>(steps);
  run["dt"] = dt;
  run["dt_mode"] = c.dt ? "fixed" : "auto";
  run["steps"] = steps;
  std::size_t sample = 0;
  auto take = [&](const State& s) {
    record(s);
    if (c.snapshot_every > 0 && (sample % c.snapshot_every == 0 || outcome.steps == steps)) snapshot(s);
    ++sample;
    outcome.samples = sample;
  };
  take(state);
  try {
    for (std::size_t k = 1; k <= steps; ++k) {
      state = step(state, dt);
      state.t = dt * static_cast<double>(k);
      outcome.steps = k;
      if (k % c.sample_every == 0 || k == steps) take(state);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::blow_up && e.kind() != ErrorKind::parameter) throw;
    outcome.completed = false;
    outcome.failure = e.what();
    report["flags"].push_back({{"kind", to_string(e.kind())},
                               {"t", state.t},
                               {"step", outcome.steps + 1},
                               {"message", e.what()}});
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

RunOutcome simulate(const RunConfig& c) {
  RunOutcome outcome;
  outcome.directory = c.output_dir;
  const fs::path dir = c.output_dir;
  const std::vector<Law> laws = parse_laws(c.laws, c.system);
  const Grid grid(c.n, c.box);
  fs::create_directories(dir);
  write_text(dir / "config.cfg", c.source);
  const fs::path snaps = dir / "snapshots";
  if (c.snapshot_every > 0) fs::create_directories(snaps);

  Json report = empty_report(c);
  Json run = run_json(c);
  std::string index = "index,t,file\n";
  std::size_t snap_count = 0;
  auto write_snap = [&](const auto& s) {
    char name[32];
    std::snprintf(name, sizeof name, "state_%06zu.olf", snap_count++);
    write_snapshot(snaps / name, components(s));
    index += std::to_string(snap_count - 1) + "," + format_double(s.t) + "," + name + "\n";
  };
  const bool keep = !c.eps_ladder.empty() || !c.besov.empty();
  std::string anomalous_csv;
  Json besov = Json::array();

  if (c.system == SystemKind::mll) {
    const MllScheme scheme = c.scheme == SchemeKind::penalized ? MllScheme::penalized : MllScheme::strong;
    const MllState init = mll_preset(grid, c.preset, scheme, c.scheme_eps, c.params);
    std::vector<MllEnergySample> samples;
    MllTrajectory traj;
    double max_m = 0.0;
    integrate(
        init, c, outcome, run, report,
        [&](const MllState& s) {
          samples.push_back(energy_sample(s));
          max_m = std::max(max_m, monitor(s).max_m);
        },
        [&](const MllState& s) {
          write_snap(s);
          if (keep) traj.push_back(s);
        });
    run["max_abs_m"] = max_m;
    if (samples.size() >= 2) {
      const BalanceReport rep = energy_report(samples);
      write_text(dir / "series.csv", series_csv(rep, c.hash));
      report["balances"].push_back(balance_json(rep, "series.csv"));
    }
    if (outcome.completed) {
      analyze(traj, laws, c.eps_ladder, c.mollifier_kind, c.windows, c.tolerance, false, report, anomalous_csv);
      if (!traj.empty())
        for (const auto& e : c.besov) besov.push_back(besov_json(field_series(traj, c.besov_field), e, c.besov_field, nullptr));
    }
  } else {
    const MhdVariant variant = variant_of(c.system);
    MhdState init = mhd_preset(grid, c.preset, variant, c.params);
    if (c.scheme == SchemeKind::regularized) {
      init.reg = {c.scheme_eps, c.scheme_kernel};
      make_mollifier(grid, c.scheme_eps, c.scheme_kernel);
    }
    std::vector<Law> series_laws;
    std::vector<std::optional<HelicityKind>> kinds;
    for (Law law : laws) {
      if (is_energy_law(law)) continue;
      series_laws.push_back(law);
      kinds.push_back(helicity_kind(law));
    }
    std::vector<BalanceSample> energy;
    std::vector<std::vector<BalanceSample>> helicity(series_laws.size());
    MhdTrajectory traj;
    integrate(
        init, c, outcome, run, report,
        [&](const MhdState& s) {
          energy.push_back(energy_sample(s));
          for (std::size_t i = 0; i < kinds.size(); ++i) helicity[i].push_back(helicity_sample(s, *kinds[i]));
        },
        [&](const MhdState& s) {
          write_snap(s);
          if (keep) traj.push_back(s);
        });
    if (energy.size() >= 2) {
      const BalanceReport rep = balance_report(energy_law_name(variant), energy);
      write_text(dir / "series.csv", series_csv(rep, c.hash));
      report["balances"].push_back(balance_json(rep, "series.csv"));
      for (std::size_t i = 0; i < series_laws.size(); ++i) {
        const BalanceReport h = balance_report(to_string(series_laws[i]), helicity[i]);
        const std::string file = std::string("series_") + to_string(series_laws[i]) + ".csv";
        write_text(dir / file, series_csv(h, c.hash));
        report["balances"].push_back(balance_json(h, file));
      }
    }
    if (outcome.completed) {
      analyze(traj, laws, c.eps_ladder, c.mollifier_kind, c.windows, c.tolerance, false, report, anomalous_csv);
      if (!traj.empty())
        for (const auto& e : c.besov) besov.push_back(besov_json(field_series(traj, c.besov_field), e, c.besov_field, nullptr));
    }
  }

  run["samples"] = outcome.samples;
  run["snapshots"] = snap_count;
  run["status"] = outcome.completed ? "completed" : "failed";
  report["run"] = run;
  report["besov"] = besov;
  if (c.snapshot_every > 0) write_text(snaps / "index.csv", index);
  if (!anomalous_csv.empty()) {
    write_text(dir / "anomalous.csv", "# schema=olf-anomalous/1 config_hash=" + c.hash +
                                          "\nlaw,window,eps,integral\n" + anomalous_csv);
  }
  write_text(dir / "report.json", report.dump(2) + "\n");
  return outcome;
}

LoadedRun load_run(const fs::path& directory) {
  LoadedRun run;
  const fs::path cfg = directory / "config.cfg";
  if (!fs::exists(cfg)) throw Error(ErrorKind::data, "no config.cfg in run directory " + directory.string());
  run.config = parse_config(read_text(cfg), cfg.string());
  const RunConfig& c = run.config;
  const fs::path index = directory / "snapshots" / "index.csv";
  if (!fs::exists(index)) {
    throw Error(ErrorKind::data, "run " + directory.string() +
                                     " has no snapshots; rerun with output.snapshot_every >= 1");
  }
  std::istringstream is(read_text(index));
  std::string line;
  std::getline(is, line);
  const Grid grid(c.n, c.box);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto parts = split_list(line);
    if (parts.size() != 3) throw Error(ErrorKind::data, "malformed snapshot index line '" + line + "'");
    double t = 0.0;
    const auto res = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), t);
    if (res.ec != std::errc()) throw Error(ErrorKind::data, "bad snapshot time '" + parts[1] + "'");
    const auto comps = read_snapshot(directory / "snapshots" / parts[2], c.box);
    if (comps.empty() || !(comps.front().grid() == grid)) {
      throw Error(ErrorKind::data, "snapshot " + parts[2] + " does not match the configured grid");
    }
    run.times.push_back(t);
    if (c.system == SystemKind::mll) {
      if (comps.size() != 9) throw Error(ErrorKind::data, "MLL snapshot " + parts[2] + " needs 9 components");
      MllState s;
      s.t = t;
      s.m = VectorField(comps[0], comps[1], comps[2]);
      s.E = VectorField(comps[3], comps[4], comps[5]);
      s.H = VectorField(comps[6], comps[7], comps[8]);
      s.scheme = c.scheme == SchemeKind::penalized ? MllScheme::penalized : MllScheme::strong;
      s.eps_pen = c.scheme_eps;
      run.mll.push_back(std::move(s));
    } else {
      if (comps.size() != 6) throw Error(ErrorKind::data, "MHD snapshot " + parts[2] + " needs 6 components");
      MhdState s;
      s.t = t;
      s.u = VectorField(comps[0], comps[1], comps[2]);
      s.B = VectorField(comps[3], comps[4], comps[5]);
      s.variant = variant_of(c.system);
      if (c.scheme == SchemeKind::regularized) s.reg = {c.scheme_eps, c.scheme_kernel};
      run.mhd.push_back(std::move(s));
    }
  }
  return run;
}

TextOutput diagnose(const fs::path& directory, const DiagnoseOptions& options) {
  const LoadedRun run = load_run(directory);
  const RunConfig& c = run.config;
  const std::vector<Law> laws = parse_laws(options.laws.empty() ? c.laws : options.laws, c.system);
  if (run.times.size() < 3) {
    std::string cadence = "output.snapshot_every >= 1";
    const fs::path rep = directory / "report.json";
    if (fs::exists(rep)) {
      const Json j = Json::parse(read_text(rep), nullptr, false);
      if (!j.is_discarded() && j.contains("run") && j["run"].contains("samples")) {
        const std::size_t samples = j["run"]["samples"].get<std::size_t>();
        cadence = "output.snapshot_every <= " + std::to_string(std::max<std::size_t>(1, (samples - 1) / 2));
      }
    }
    throw Error(ErrorKind::data, "run " + directory.string() + " has " + std::to_string(run.times.size()) +
                                     " snapshot(s); diagnostics need at least 3 (" + cadence + ")");
  }
  const Grid grid(c.n, c.box);
  std::vector<double> ladder = c.eps_ladder;
  if (!options.eps.empty()) {
    ladder.clear();
    for (const auto& e : options.eps) ladder.push_back(parse_length(e, grid.spacing()));
  }
  const std::vector<std::string> windows = options.windows.empty() ? c.windows : options.windows;
  for (const auto& w : windows) window_preset(w, 0.0, 1.0, c.box);
  const double tol = options.tolerance.value_or(c.tolerance);

  Json report = empty_report(c);
  Json r = run_json(c);
  r["snapshots"] = run.times.size();
  r["eps"] = ladder;
  r["windows"] = windows;
  report["run"] = r;
  std::string csv;
  if (c.system == SystemKind::mll) {
    analyze(run.mll, laws, ladder, c.mollifier_kind, windows, tol, true, report, csv);
  } else {
    analyze(run.mhd, laws, ladder, c.mollifier_kind, windows, tol, true, report, csv);
  }
  return {report.dump(2) + "\n", "law,window,eps,integral\n" + csv};
}

TextOutput besov_scan(const fs::path& directory, const std::vector<BesovExponents>& exponents,
                      const std::string& field) {
  const LoadedRun run = load_run(directory);
  const RunConfig& c = run.config;
  if (run.times.empty()) throw Error(ErrorKind::data, "run " + directory.string() + " has no snapshots");
  const std::string f = field.empty() ? c.besov_field : field;
  const FieldSeries series = c.system == SystemKind::mll ? field_series(run.mll, f) : field_series(run.mhd, f);
  Json report = empty_report(c);
  Json r = run_json(c);
  r["snapshots"] = run.times.size();
  report["run"] = r;
  std::string csv = "alpha,p,r,shell,value\n";
  for (const auto& e : exponents) report["besov"].push_back(besov_json(series, e, f, &csv));
  return {report.dump(2) + "\n", csv};
}

std::string gap(const fs::path& run_a, const fs::path& run_b) {
  const LoadedRun a = load_run(run_a);
  const LoadedRun b = load_run(run_b);
  if (a.config.system != b.config.system) {
    throw Error(ErrorKind::comparison, std::string("runs differ in system: ") + to_string(a.config.system) +
                                           " vs " + to_string(b.config.system));
  }
  if (a.config.n != b.config.n) {
    throw Error(ErrorKind::comparison, "runs differ in grid size n: " + std::to_string(a.config.n) + " vs " +
                                           std::to_string(b.config.n));
  }
  if (a.config.box != b.config.box) throw Error(ErrorKind::comparison, "runs differ in box length L");
  const bool mll = a.config.system == SystemKind::mll;
  const GapSeries g = mll ? weak_strong_gap_mll(a.mll, b.mll) : weak_strong_gap_hall(a.mhd, b.mhd);
  std::string out = "# schema=olf-gap/1 run_a=" + a.config.hash + " run_b=" + b.config.hash + "\n";
  out += mll ? "t,L\n" : "t,J\n";
  for (std::size_t i = 0; i < g.times.size(); ++i) out += format_double(g.times[i]) + "," + format_double(g.value[i]) + "\n";
  return out;
}

}  // namespace olf
