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

#include "olf/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "olf/diagnostics.hpp"
#include "olf/error.hpp"
#include "olf/grid.hpp"
#include "olf/window.hpp"

namespace olf {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "system",          "scheme",          "grid.n",          "grid.L",
      "time.dt",         "time.t_end",      "time.sample_every",
      "init.preset",     "init.seed",       "init.amplitude",  "init.sigma",
      "init.kmin",       "init.kmax",       "mollifier.kind",  "mollifier.eps",
      "diagnostics.laws", "diagnostics.windows", "diagnostics.tolerance",
      "besov.exponents", "besov.field",     "output.directory", "output.snapshot_every",
  };
  return keys;
}

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries, std::string origin)
      : entries_(std::move(entries)), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    auto it = entries_.find(key);
    std::ostringstream os;
    os << origin_;
    if (it != entries_.end()) os << ":" << it->second.line;
    os << ": " << key << ": " << msg;
    throw Error(ErrorKind::schema, os.str());
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string text(const std::string& key, const std::string& fallback, bool required = false) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (required) fail(key, "missing required key");
      return fallback;
    }
    return it->second.value;
  }

  template <class F>
  auto guarded(const std::string& key, F&& f) const {
    try {
      return f(text(key, ""));
    } catch (const Error& e) {
      fail(key, e.what());
    }
  }

  double number(const std::string& key, double fallback, bool required = false) const {
    if (!has(key)) {
      if (required) fail(key, "missing required key");
      return fallback;
    }
    return guarded(key, [](const std::string& v) { return parse_exponent(v); });
  }

  std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string v = text(key, "");
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
      fail(key, "expected a non-negative integer, got '" + v + "'");
    }
    return out;
  }

 private:
  std::map<std::string, Entry> entries_;
  std::string origin_;
};

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::parameter, "expected a number, got '" + s + "'");
  }
  return v;
}

KernelKind parse_kernel(const std::string& s) {
  if (s == "bump") return KernelKind::bump;
  if (s == "gaussian") return KernelKind::gaussian;
  throw Error(ErrorKind::parameter, "unknown kernel '" + s + "' (bump, gaussian)");
}

bool contains(const std::vector<std::string>& names, const std::string& s) {
  for (const auto& n : names)
    if (n == s) return true;
  return false;
}

}  // namespace

const char* to_string(SystemKind s) {
  switch (s) {
    case SystemKind::mll: return "mll";
    case SystemKind::mhd: return "mhd";
    case SystemKind::hmhd: return "hmhd";
  }
  return "unknown";
}

const char* to_string(SchemeKind s) {
  switch (s) {
    case SchemeKind::strong: return "strong";
    case SchemeKind::penalized: return "penalized";
    case SchemeKind::regularized: return "regularized";
  }
  return "unknown";
}

bool law_applies(Law law, SystemKind system) {
  switch (system) {
    case SystemKind::mll: return law == Law::mll_energy;
    case SystemKind::mhd:
      return law == Law::mhd_energy || law == Law::mhd_magneto_helicity || law == Law::fluid_helicity ||
             law == Law::crossed_helicity;
    case SystemKind::hmhd:
      return law == Law::hmhd_energy || law == Law::hmhd_magneto_helicity || law == Law::fluid_helicity ||
             law == Law::total_helicity;
  }
  return false;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_length(const std::string& raw, double spacing) {
  std::string s = trim(raw);
  double unit = 1.0;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    unit = std::numbers::pi;
    s = trim(s.substr(0, s.size() - 2));
    if (s.empty()) return unit;
  } else if (s.size() > 1 && s.back() == 'h') {
    unit = spacing;
    s = trim(s.substr(0, s.size() - 1));
  }
  const double v = parse_number(s) * unit;
  if (!(v > 0.0)) throw Error(ErrorKind::parameter, "length must be positive, got '" + raw + "'");
  return v;
}

double parse_exponent(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const double num = parse_number(s.substr(0, slash));
    const double den = parse_number(s.substr(slash + 1));
    if (den == 0.0) throw Error(ErrorKind::parameter, "zero denominator in '" + s + "'");
    return num / den;
  }
  return parse_number(s);
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  std::map<std::string, Entry> entries;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw Error(ErrorKind::schema, where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys().count(key)) throw Error(ErrorKind::schema, where + "unknown key '" + key + "'");
    if (value.empty()) throw Error(ErrorKind::schema, where + key + ": empty value");
    if (entries.count(key)) {
      throw Error(ErrorKind::schema, where + key + ": duplicate key (first set on line " +
                                         std::to_string(entries[key].line) + ")");
    }
    entries[key] = {value, lineno};
  }
  const Reader r(std::move(entries), origin);

  RunConfig c;
  c.source = text;
  c.hash = fnv1a_hex(text);

  const std::string sys = r.text("system", "", true);
  if (sys == "mll") c.system = SystemKind::mll;
  else if (sys == "mhd") c.system = SystemKind::mhd;
  else if (sys == "hmhd") c.system = SystemKind::hmhd;
  else r.fail("system", "expected mll, mhd or hmhd, got '" + sys + "'");
  const bool mll = c.system == SystemKind::mll;

  c.n = static_cast<std::size_t>(r.integer("grid.n", 32));
  c.box = r.has("grid.L") ? r.guarded("grid.L", [](const std::string& v) { return parse_length(v, 1.0); })
                          : 2.0 * std::numbers::pi;
  const Grid grid = r.guarded("grid.n", [&](const std::string&) { return Grid(c.n, c.box); });
  const double h = grid.spacing();

  const std::string scheme = r.text("scheme", "strong");
  const auto open = scheme.find('(');
  const std::string head = trim(scheme.substr(0, open));
  if (head == "strong") {
    c.scheme = SchemeKind::strong;
    if (open != std::string::npos) r.fail("scheme", "strong takes no argument");
  } else if (head == "penalized" || head == "regularized") {
    c.scheme = head == "penalized" ? SchemeKind::penalized : SchemeKind::regularized;
    if (mll != (c.scheme == SchemeKind::penalized)) {
      r.fail("scheme", head + " does not apply to system " + sys);
    }
    if (open == std::string::npos || scheme.back() != ')') r.fail("scheme", head + "(eps) expected");
    const auto args = split_list(scheme.substr(open + 1, scheme.size() - open - 2));
    if (args.empty() || args.size() > (mll ? 1u : 2u)) r.fail("scheme", "bad argument list");
    c.scheme_eps = r.guarded("scheme", [&](const std::string&) {
      return mll ? parse_exponent(args[0]) : parse_length(args[0], h);
    });
    if (!(c.scheme_eps > 0.0)) r.fail("scheme", "eps must be positive");
    if (args.size() == 2) c.scheme_kernel = r.guarded("scheme", [&](const std::string&) { return parse_kernel(args[1]); });
  } else {
    r.fail("scheme", "expected strong, penalized(eps) or regularized(eps), got '" + scheme + "'");
  }

  const std::string dt = r.text("time.dt", "auto");
  if (dt != "auto") {
    c.dt = r.number("time.dt", 0.0);
    if (!(*c.dt > 0.0)) r.fail("time.dt", "must be positive or auto");
  }
  c.t_end = r.number("time.t_end", 0.0, true);
  if (!(c.t_end > 0.0)) r.fail("time.t_end", "must be positive");
  c.sample_every = static_cast<std::size_t>(r.integer("time.sample_every", 1));
  if (c.sample_every == 0) r.fail("time.sample_every", "must be at least 1");

  c.preset = r.text("init.preset", "", true);
  const auto names = mll ? mll_preset_names() : mhd_preset_names();
  if (!contains(names, c.preset)) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    r.fail("init.preset", "unknown preset '" + c.preset + "' (" + list + ")");
  }
  c.params.seed = r.integer("init.seed", c.params.seed);
  c.params.amplitude = r.number("init.amplitude", c.params.amplitude);
  c.params.sigma = r.number("init.sigma", c.params.sigma);
  c.params.kmin = static_cast<long>(r.integer("init.kmin", static_cast<std::uint64_t>(c.params.kmin)));
  c.params.kmax = static_cast<long>(r.integer("init.kmax", static_cast<std::uint64_t>(c.params.kmax)));
  if (c.params.kmin > c.params.kmax) r.fail("init.kmax", "must not be below init.kmin");

  c.mollifier_kind = r.guarded("mollifier.kind", [](const std::string& v) { return v.empty() ? KernelKind::bump : parse_kernel(v); });
  if (r.has("mollifier.eps")) {
    for (const auto& item : split_list(r.text("mollifier.eps", ""))) {
      c.eps_ladder.push_back(r.guarded("mollifier.eps", [&](const std::string&) { return parse_length(item, h); }));
    }
  }

  if (r.has("diagnostics.laws")) {
    c.laws = split_list(r.text("diagnostics.laws", ""));
  } else if (mll) {
    c.laws = {"mll-energy"};
  } else {
    c.laws = {std::string(sys) + "-energy", std::string(sys) + "-magneto-helicity"};
  }
  for (const auto& l : c.laws) {
    const Law law = r.guarded("diagnostics.laws", [&](const std::string&) { return parse_law(l); });
    if (!law_applies(law, c.system)) {
      r.fail("diagnostics.laws", "law " + l + " does not apply to a " + sys + " run");
    }
  }
  c.windows = r.has("diagnostics.windows") ? split_list(r.text("diagnostics.windows", ""))
                                           : std::vector<std::string>{"global"};
  for (const auto& w : c.windows) {
    if (!contains(window_preset_names(), w)) r.fail("diagnostics.windows", "unknown window '" + w + "'");
  }
  c.tolerance = r.number("diagnostics.tolerance", c.tolerance);

  if (r.has("besov.exponents")) {
    for (const auto& triple : split_list(r.text("besov.exponents", ""), ';')) {
      std::istringstream ts(triple);
      std::vector<std::string> parts;
      std::string tok;
      while (ts >> tok) parts.push_back(tok);
      if (parts.size() != 3) r.fail("besov.exponents", "expected 'alpha p r', got '" + triple + "'");
      c.besov.push_back(r.guarded("besov.exponents", [&](const std::string&) {
        return BesovExponents{parse_exponent(parts[0]), parse_exponent(parts[1]), parse_exponent(parts[2])};
      }));
    }
  }
  c.besov_field = r.text("besov.field", mll ? "m" : "B");
  const std::vector<std::string> fields = mll ? std::vector<std::string>{"m", "E", "H"}
                                              : std::vector<std::string>{"u", "B"};
  if (!contains(fields, c.besov_field)) r.fail("besov.field", "no field '" + c.besov_field + "' in system " + sys);

  c.output_dir = r.text("output.directory", "run");
  c.snapshot_every = static_cast<std::size_t>(r.integer("output.snapshot_every", 10));
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read config " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str(), path.string());
}

}  // namespace olf
