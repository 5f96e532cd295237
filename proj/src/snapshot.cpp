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

#include "olf/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "olf/error.hpp"

namespace olf {

namespace {

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return v;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const std::vector<ScalarField>& comps) {
  if (comps.empty() || comps.size() > 255) {
    throw Error(ErrorKind::shape, "snapshot needs between 1 and 255 components");
  }
  const Grid& g = comps.front().grid();
  for (const auto& c : comps) require_same_grid(g, c.grid(), "write_snapshot");
  std::vector<unsigned char> bytes = {'O', 'L', 'F', '1'};
  const auto n = static_cast<std::uint32_t>(g.n());
  for (int b = 0; b < 4; ++b) bytes.push_back(static_cast<unsigned char>(n >> (8 * b)));
  bytes.push_back(static_cast<unsigned char>(comps.size()));
  bytes.push_back(0);
  bytes.reserve(bytes.size() + comps.size() * g.size() * 8);
  for (const auto& c : comps)
    for (double v : c.data()) put_u64(bytes, std::bit_cast<std::uint64_t>(v));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::io, "short write to " + path.string());
}

void write_snapshot(const std::filesystem::path& path, const VectorField& v) {
  write_snapshot(path, std::vector<ScalarField>{v[0], v[1], v[2]});
}

std::vector<ScalarField> read_snapshot(const std::filesystem::path& path, double box) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::data, "cannot open snapshot " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 10 || std::memcmp(bytes.data(), "OLF1", 4) != 0) {
    throw Error(ErrorKind::data, path.string() + " is not an OLF1 snapshot");
  }
  std::uint32_t n = 0;
  for (int b = 0; b < 4; ++b) n |= static_cast<std::uint32_t>(bytes[4 + b]) << (8 * b);
  const std::size_t comps = bytes[8];
  if (bytes[9] != 0) throw Error(ErrorKind::data, path.string() + ": reserved byte is not zero");
  const Grid g(n, box);
  if (bytes.size() != 10 + comps * g.size() * 8) {
    throw Error(ErrorKind::data, path.string() + ": payload length does not match header");
  }
  std::vector<ScalarField> out;
  const unsigned char* p = bytes.data() + 10;
  for (std::size_t c = 0; c < comps; ++c) {
    ScalarField f(g);
    for (std::size_t i = 0; i < g.size(); ++i, p += 8) f[i] = std::bit_cast<double>(get_u64(p));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace olf
