#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sobolab/rng.hpp"
#include "sobolab/spectral.hpp"

namespace sobolab {

// Fourier synthesis of a real field with coefficient magnitudes
// (1 + |n|)^{-s} and seeded uniform random phases.  The phase of each mode
// depends only on (seed, component, mode), never on the resolution, so the
// same seed at a finer grid extends the same function with new modes; that
// is what makes refinement sweeps meaningful.
inline DiscreteField synth_field(double s, std::uint64_t seed, const GridSpec& grid,
                                 int target_dim = 1) {
  if (grid.domain != Domain::torus) throw domain_error("synth_field: torus grids only");
  if (!(s > 1.0)) throw domain_error("synth_field: decay exponent s must be > 1");
  const int n = grid.resolution;
  DiscreteField out(grid, target_dim);
  std::vector<cplx> spec(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < target_dim; ++c) {
    const std::uint64_t cseed = derive_seed(seed, static_cast<std::uint64_t>(c) + 1);
    std::fill(spec.begin(), spec.end(), cplx(0.0, 0.0));
    const double scale = static_cast<double>(n) * n;  // inverse FFT carries 1/n^2
    for (int k2 = -(n / 2 - 1); k2 <= n / 2 - 1; ++k2) {
      for (int k1 = -(n / 2 - 1); k1 <= n / 2 - 1; ++k1) {
        // Fill the half-plane; mirror the conjugate for Hermitian symmetry.
        const bool half = (k1 > 0) || (k1 == 0 && k2 > 0);
        if (!half && !(k1 == 0 && k2 == 0)) continue;
        const double mag = std::pow(1.0 + std::hypot(k1, k2), -s);
        cplx v(mag, 0.0);
        if (!(k1 == 0 && k2 == 0)) {
          const std::uint64_t key = (static_cast<std::uint64_t>(k1 + (1 << 15)) << 32) |
                                    static_cast<std::uint64_t>(k2 + (1 << 15));
          SplitMix64 rng(derive_seed(cseed, key));
          v = std::polar(mag, rng.next_double() * kTwoPi);
        }
        const int ix = (k1 >= 0) ? k1 : n + k1;
        const int iy = (k2 >= 0) ? k2 : n + k2;
        spec[static_cast<std::size_t>(iy) * n + ix] = v * scale;
        if (!(k1 == 0 && k2 == 0)) {
          const int jx = (-k1 >= 0) ? -k1 : n - k1;
          const int jy = (-k2 >= 0) ? -k2 : n - k2;
          spec[static_cast<std::size_t>(jy) * n + jx] = std::conj(v) * scale;
        }
      }
    }
    auto tmp = spec;
    detail::fft2(tmp, n, /*inverse=*/true);
    for (int node = 0; node < grid.nodes(); ++node) out.at(node, c) = tmp[node].real();
  }
  out.require_finite("synth_field");
  return out;
}

// Random direction field with unit Sobolev norm; used by probes.
inline DiscreteField synth_unit_direction(double s, std::uint64_t seed, const GridSpec& grid,
                                          int target_dim, const SobolevIndex& idx) {
  DiscreteField h = synth_field(s, seed, grid, target_dim);
  const double nrm = sobolev_norm(h, idx, 0);
  if (nrm == 0.0) throw invariant_violation("synth_unit_direction: zero field");
  h *= 1.0 / nrm;
  return h;
}

}  // namespace sobolab
