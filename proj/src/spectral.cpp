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

#include "olf/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "olf/error.hpp"

namespace olf {

namespace {

struct Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex mu;
  return mu;
}

int read_thread_env() {
  const char* env = std::getenv("OLF_THREADS");
  if (env == nullptr) return 1;
  const int t = std::atoi(env);
  return t > 0 ? t : 1;
}

// Plans are created once per grid size under a lock and then executed through
// the new-array interface, which is safe to call concurrently.
const Plans& plans_for(std::size_t n) {
  static std::map<std::size_t, Plans> cache;
  static bool threads_ready = false;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (!threads_ready) {
    const int t = fft_threads();
    if (t > 1) {
      fftw_init_threads();
      fftw_plan_with_nthreads(t);
    }
    threads_ready = true;
  }
  const int ni = static_cast<int>(n);
  const std::size_t real_size = n * n * n;
  const std::size_t cplx_size = n * n * (n / 2 + 1);
  double* r = fftw_alloc_real(real_size);
  fftw_complex* c = fftw_alloc_complex(cplx_size);
  Plans p;
  const unsigned flags = FFTW_ESTIMATE;
  p.r2c = fftw_plan_dft_r2c_3d(ni, ni, ni, r, c, flags);
  p.c2r = fftw_plan_dft_c2r_3d(ni, ni, ni, c, r, flags);
  fftw_free(r);
  fftw_free(c);
  return cache.emplace(n, p).first->second;
}

// Aligned per-thread transform buffers; plans are created for aligned data.
struct Workspace {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  ~Workspace() {
    fftw_free(real);
    fftw_free(cplx);
  }
};

Workspace& workspace(std::size_t n) {
  thread_local Workspace w;
  if (w.n != n) {
    fftw_free(w.real);
    fftw_free(w.cplx);
    w.real = fftw_alloc_real(n * n * n);
    w.cplx = fftw_alloc_complex(n * n * (n / 2 + 1));
    w.n = n;
  }
  return w;
}

void require_finite(const ScalarField& f) {
  if (!f.finite()) throw Error(ErrorKind::invalid_field, "field contains non-finite samples");
}

template <class F>
SpectralField multiplied(const SpectralField& f, F&& factor) {
  SpectralField out(f.grid());
  for_each_mode(f.grid(), [&](const Mode& m) { out[m.index] = factor(m) * f[m.index]; });
  return out;
}

}  // namespace

int fft_threads() {
  static const int t = read_thread_env();
  return t;
}

Complex SpectralField::mode(long w1, long w2, long w3) const {
  const long n = static_cast<long>(grid_.n());
  bool conj = false;
  if (w3 < 0) {
    w1 = -w1;
    w2 = -w2;
    w3 = -w3;
    conj = true;
  }
  auto fold = [n](long w) { return static_cast<std::size_t>(((w % n) + n) % n); };
  if (w3 > n / 2) return Complex(0.0, 0.0);
  const Complex c = coeffs_[index(fold(w1), fold(w2), static_cast<std::size_t>(w3))];
  return conj ? std::conj(c) : c;
}

SpectralField forward(const ScalarField& f) {
  require_finite(f);
  SpectralField out(f.grid());
  const std::size_t n = f.grid().n();
  const Plans& p = plans_for(n);
  Workspace& w = workspace(n);
  std::copy(f.data().begin(), f.data().end(), w.real);
  fftw_execute_dft_r2c(p.r2c, w.real, w.cplx);
  const Complex* c = reinterpret_cast<const Complex*>(w.cplx);
  std::copy(c, c + out.size(), out.coeffs().begin());
  return out;
}

SpectralVector forward(const VectorField& v) {
  return {forward(v[0]), forward(v[1]), forward(v[2])};
}

ScalarField inverse(const SpectralField& f) {
  const std::size_t n = f.grid().n();
  const Plans& p = plans_for(n);
  Workspace& w = workspace(n);
  std::copy(f.coeffs().begin(), f.coeffs().end(), reinterpret_cast<Complex*>(w.cplx));
  fftw_execute_dft_c2r(p.c2r, w.cplx, w.real);
  ScalarField out(f.grid());
  const double scale = 1.0 / static_cast<double>(f.grid().size());
  std::vector<double>& d = out.data();
  for (std::size_t q = 0; q < d.size(); ++q) d[q] = w.real[q] * scale;
  return out;
}

VectorField inverse(const SpectralVector& v) {
  return VectorField(inverse(v[0]), inverse(v[1]), inverse(v[2]));
}

double spectral_energy(const SpectralField& f) {
  const std::size_t n = f.grid().n();
  double s = 0.0;
  for_each_mode(f.grid(), [&](const Mode& m) {
    const double weight = (m.w[2] == 0 || m.w[2] == static_cast<long>(n / 2)) ? 1.0 : 2.0;
    s += weight * std::norm(f[m.index]);
  });
  return s * f.grid().cell_volume() / static_cast<double>(f.grid().size());
}

SpectralField spectral_partial(const SpectralField& f, int axis) {
  return multiplied(f, [axis](const Mode& m) {
    return Complex(0.0, m.kd[static_cast<std::size_t>(axis)]);
  });
}

SpectralVector spectral_curl(const SpectralVector& v) {
  const Grid& g = v[0].grid();
  SpectralVector out{SpectralField(g), SpectralField(g), SpectralField(g)};
  const Complex I(0.0, 1.0);
  for_each_mode(g, [&](const Mode& m) {
    const std::size_t q = m.index;
    out[0][q] = I * (m.kd[1] * v[2][q] - m.kd[2] * v[1][q]);
    out[1][q] = I * (m.kd[2] * v[0][q] - m.kd[0] * v[2][q]);
    out[2][q] = I * (m.kd[0] * v[1][q] - m.kd[1] * v[0][q]);
  });
  return out;
}

void spectral_leray(SpectralVector& v) {
  for_each_mode(v[0].grid(), [&](const Mode& m) {
    const std::size_t q = m.index;
    if (m.k2 == 0.0) return;
    if (m.kd2 == 0.0) {
      for (int c = 0; c < 3; ++c) v[c][q] = 0.0;
      return;
    }
    const Complex s = (m.kd[0] * v[0][q] + m.kd[1] * v[1][q] + m.kd[2] * v[2][q]) / m.kd2;
    for (int c = 0; c < 3; ++c) v[c][q] -= m.kd[static_cast<std::size_t>(c)] * s;
  });
}

bool dealias_keeps(const Grid& grid, const std::array<long, 3>& w) {
  const double cut = static_cast<double>(grid.n()) / 3.0;
  const double r2 = static_cast<double>(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  return r2 <= cut * cut;
}

void dealias(SpectralField& f) {
  const Grid& g = f.grid();
  for_each_mode(g, [&](const Mode& m) {
    if (!dealias_keeps(g, m.w)) f[m.index] = 0.0;
  });
}

void dealias(SpectralVector& v) {
  for (auto& c : v) dealias(c);
}

ScalarField partial(const ScalarField& f, int axis) {
  return inverse(spectral_partial(forward(f), axis));
}

VectorField grad(const ScalarField& f) {
  const SpectralField s = forward(f);
  return VectorField(inverse(spectral_partial(s, 0)), inverse(spectral_partial(s, 1)),
                     inverse(spectral_partial(s, 2)));
}

ScalarField div(const VectorField& v) {
  const Grid& g = v.grid();
  const SpectralVector s = forward(v);
  SpectralField out(g);
  const Complex I(0.0, 1.0);
  for_each_mode(g, [&](const Mode& m) {
    const std::size_t q = m.index;
    out[q] = I * (m.kd[0] * s[0][q] + m.kd[1] * s[1][q] + m.kd[2] * s[2][q]);
  });
  return inverse(out);
}

VectorField div(const TensorField& t) {
  const Grid& g = t.grid();
  VectorField out(g);
  const Complex I(0.0, 1.0);
  for (int i = 0; i < 3; ++i) {
    SpectralField acc(g);
    for (int j = 0; j < 3; ++j) {
      const SpectralField s = forward(t(i, j));
      for_each_mode(g, [&](const Mode& m) {
        acc[m.index] += I * m.kd[static_cast<std::size_t>(j)] * s[m.index];
      });
    }
    out[i] = inverse(acc);
  }
  return out;
}

VectorField curl(const VectorField& v) { return inverse(spectral_curl(forward(v))); }

ScalarField laplacian(const ScalarField& f) {
  return inverse(multiplied(forward(f), [](const Mode& m) { return Complex(-m.k2, 0.0); }));
}

VectorField laplacian(const VectorField& v) {
  return VectorField(laplacian(v[0]), laplacian(v[1]), laplacian(v[2]));
}

Field differential(const Field& f, DiffOp op) {
  const bool scalar = std::holds_alternative<ScalarField>(f);
  switch (op) {
    case DiffOp::grad:
      if (!scalar) throw Error(ErrorKind::shape, "grad expects a scalar field");
      return grad(std::get<ScalarField>(f));
    case DiffOp::div:
      if (scalar) throw Error(ErrorKind::shape, "div expects a vector field");
      return div(std::get<VectorField>(f));
    case DiffOp::curl:
      if (scalar) throw Error(ErrorKind::shape, "curl expects a vector field");
      return curl(std::get<VectorField>(f));
    case DiffOp::laplacian:
      if (scalar) return laplacian(std::get<ScalarField>(f));
      return laplacian(std::get<VectorField>(f));
  }
  throw Error(ErrorKind::shape, "unknown differential operator");
}

VectorField leray_project(const VectorField& v) {
  SpectralVector s = forward(v);
  spectral_leray(s);
  return inverse(s);
}

VectorField biot_savart(const VectorField& b) {
  const Grid& g = b.grid();
  for (int c = 0; c < 3; ++c) {
    const double tol = 1e-10 * (1.0 + b[c].max_abs());
    const double mean = b[c].mean();
    if (std::abs(mean) > tol) {
      std::ostringstream msg;
      msg << "biot_savart needs a mean-free field; component " << c + 1
          << " has mean " << mean;
      throw Error(ErrorKind::gauge, msg.str());
    }
  }
  const SpectralVector s = forward(b);
  SpectralVector a{SpectralField(g), SpectralField(g), SpectralField(g)};
  const Complex I(0.0, 1.0);
  for_each_mode(g, [&](const Mode& m) {
    if (m.kd2 == 0.0) return;
    const std::size_t q = m.index;
    const Complex f = I / m.kd2;
    a[0][q] = f * (m.kd[1] * s[2][q] - m.kd[2] * s[1][q]);
    a[1][q] = f * (m.kd[2] * s[0][q] - m.kd[0] * s[2][q]);
    a[2][q] = f * (m.kd[0] * s[1][q] - m.kd[1] * s[0][q]);
  });
  return inverse(a);
}

ScalarField inverse_laplacian(const ScalarField& f) {
  return inverse(multiplied(forward(f), [](const Mode& m) {
    return m.k2 == 0.0 ? Complex(0.0, 0.0) : Complex(-1.0 / m.k2, 0.0);
  }));
}

ScalarField dealiased(const ScalarField& f) {
  SpectralField s = forward(f);
  dealias(s);
  return inverse(s);
}

VectorField dealiased(const VectorField& v) {
  return VectorField(dealiased(v[0]), dealiased(v[1]), dealiased(v[2]));
}

}  // namespace olf
