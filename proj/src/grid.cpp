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

#include "olf/grid.hpp"

#include <cmath>
#include <sstream>

#include "olf/error.hpp"

namespace olf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_field: return "invalid-field";
    case ErrorKind::shape: return "shape";
    case ErrorKind::gauge: return "gauge";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::wraparound: return "wraparound";
    case ErrorKind::blow_up: return "blow-up";
    case ErrorKind::data: return "data";
    case ErrorKind::usage: return "usage";
    case ErrorKind::comparison: return "comparison";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::shift: return "shift";
    case ErrorKind::schema: return "schema";
    case ErrorKind::not_implemented: return "not-implemented";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Grid::Grid(std::size_t n, double box) : n_(n), box_(box) {
  if (n < 8 || (n & (n - 1)) != 0) {
    std::ostringstream msg;
    msg << "grid size n=" << n << " must be a power of two and at least 8";
    throw Error(ErrorKind::parameter, msg.str());
  }
  if (!(box > 0.0) || !std::isfinite(box)) {
    throw Error(ErrorKind::parameter, "box length must be positive and finite");
  }
}

double Grid::cell_volume() const {
  const double h = spacing();
  return h * h * h;
}

double Grid::k0() const { return 2.0 * std::numbers::pi / box_; }

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << where << ": grid mismatch (n=" << a.n() << ", L=" << a.box()
        << " vs n=" << b.n() << ", L=" << b.box() << ")";
    throw Error(ErrorKind::shape, msg.str());
  }
}

}  // namespace olf
