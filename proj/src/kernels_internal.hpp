// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

// Per-backend kernel entry points; only the dispatcher includes this.

namespace fso::kernels::scalar {
void scale(const double* x, double* y, std::size_t n, double a);
void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction);
void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2);
void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n);
}  // namespace fso::kernels::scalar

#if defined(FSOLINK_HAVE_AVX2)
namespace fso::kernels::avx2 {
void scale(const double* x, double* y, std::size_t n, double a);
void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction);
void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2);
void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n);
}  // namespace fso::kernels::avx2
#endif
