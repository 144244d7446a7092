// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "fso/kernels.hpp"

namespace fso {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void fft_pow2(double* re, double* im, std::size_t n, bool inverse) {
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: length must be a power of two");
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const double wr = std::cos(ang), wi = std::sin(ang);
    for (std::size_t i = 0; i < n; i += len) {
      double cr = 1.0, ci = 0.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::size_t a = i + k, b = i + k + len / 2;
        const double tr = re[b] * cr - im[b] * ci;
        const double ti = re[b] * ci + im[b] * cr;
        re[b] = re[a] - tr;
        im[b] = im[a] - ti;
        re[a] += tr;
        im[a] += ti;
        const double ncr = cr * wr - ci * wi;
        ci = cr * wi + ci * wr;
        cr = ncr;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    kernels::scale(re, re, n, inv);
    kernels::scale(im, im, n, inv);
  }
}

void dft(std::vector<double>& re, std::vector<double>& im, bool inverse) {
  const std::size_t n = re.size();
  if (im.size() != n) throw std::invalid_argument("dft: re/im length mismatch");
  if (n == 0) return;
  if (is_pow2(n)) {
    fft_pow2(re.data(), im.data(), n, inverse);
    return;
  }

  // Bluestein: X_k = c_k * (a (*) b)_k with a_n = x_n c_n, c_n = w^(n^2),
  // b_n = conj(c_n), w = exp(-i*pi/n) for the forward transform. n^2 is
  // taken mod 2n before computing the angle so large n stays accurate.
  const std::size_t m = next_pow2(2 * n - 1);
  const double angle_sign = inverse ? 1.0 : -1.0;

  std::vector<double> cr(n), ci(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t sq = (static_cast<std::uint64_t>(k) * k) % (2 * n);
    const double ang = angle_sign * std::numbers::pi * static_cast<double>(sq) /
                       static_cast<double>(n);
    cr[k] = std::cos(ang);
    ci[k] = std::sin(ang);
  }

  std::vector<double> ar(m, 0.0), ai(m, 0.0), br(m, 0.0), bi(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    ar[k] = re[k] * cr[k] - im[k] * ci[k];
    ai[k] = re[k] * ci[k] + im[k] * cr[k];
  }
  br[0] = cr[0];
  bi[0] = -ci[0];
  for (std::size_t k = 1; k < n; ++k) {
    br[k] = br[m - k] = cr[k];
    bi[k] = bi[m - k] = -ci[k];
  }

  fft_pow2(ar.data(), ai.data(), m, false);
  fft_pow2(br.data(), bi.data(), m, false);
  kernels::complex_multiply(ar.data(), ai.data(), br.data(), bi.data(), m);
  fft_pow2(ar.data(), ai.data(), m, true);

  for (std::size_t k = 0; k < n; ++k) {
    re[k] = ar[k] * cr[k] - ai[k] * ci[k];
    im[k] = ar[k] * ci[k] + ai[k] * cr[k];
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    kernels::scale(re.data(), re.data(), n, inv);
    kernels::scale(im.data(), im.data(), n, inv);
  }
}

}  // namespace fso
