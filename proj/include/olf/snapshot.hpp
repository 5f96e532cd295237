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
#include <vector>

#include "olf/field.hpp"

namespace olf {

// OLF1 raw snapshot: the bytes "OLF1", u32 little-endian n, u8 component
// count c, u8 reserved zero, then c * n^3 little-endian float64 samples,
// component by component, each in grid sample order (x1 slowest).
void write_snapshot(const std::filesystem::path& path, const std::vector<ScalarField>& comps);
void write_snapshot(const std::filesystem::path& path, const VectorField& v);

// The box length is not stored in the file and has to be supplied.
std::vector<ScalarField> read_snapshot(const std::filesystem::path& path, double box);

}  // namespace olf
