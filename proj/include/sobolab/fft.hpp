#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sobolab/errors.hpp"

namespace sobolab {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey.  n must be a power of two.  Forward is
// unnormalized; the inverse carries the 1/n factor, so ifft(fft(x)) == x.
inline void fft_pow2(cplx* a, int n, bool inverse) {
  if (!is_pow2(n)) throw domain_error("fft: length must be a power of two");
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / len * (inverse ? 1.0 : -1.0);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (int j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) a[i] *= inv;
  }
}

// 2D transform of an n x n row-major array: rows, then columns.
inline void fft2(std::vector<cplx>& a, int n, bool inverse) {
  if (static_cast<int>(a.size()) != n * n) throw domain_error("fft2: size mismatch");
  for (int row = 0; row < n; ++row) fft_pow2(a.data() + static_cast<std::size_t>(row) * n, n, inverse);
  std::vector<cplx> col(n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) col[r] = a[static_cast<std::size_t>(r) * n + c];
    fft_pow2(col.data(), n, inverse);
    for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r) * n + c] = col[r];
  }
}

// Signed wavenumber of DFT bin i for transform length n: 0,1,...,n/2,-n/2+1,...,-1.
inline int wavenumber(int i, int n) { return (i <= n / 2) ? i : i - n; }

}  // namespace detail

}  // namespace sobolab
