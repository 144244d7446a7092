// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "kernels_internal.hpp"

// Reference implementations. Written as the plainest possible loops; the
// vector variants are checked against these.

namespace fso::kernels::scalar {

void scale(const double* x, double* y, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction) {
  const double swing = 1.0 - floor_fraction;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sin(0.5 * std::numbers::pi * drive[i]);
    out[i] = peak_w * (swing * (s * s) + floor_fraction);
  }
}

void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2) {
  for (std::size_t i = 0; i < n; ++i) {
    current_a[i] = amps_per_watt * p_w[i];
    sigma_a[i] = std::sqrt(shot_a2_per_w * p_w[i] + var_floor_a2);
  }
}

void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double r = re[i] * h_re[i] - im[i] * h_im[i];
    const double s = re[i] * h_im[i] + im[i] * h_re[i];
    re[i] = r;
    im[i] = s;
  }
}

}  // namespace fso::kernels::scalar
