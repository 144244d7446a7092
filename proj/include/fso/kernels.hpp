// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

// Elementwise inner loops of the waveform pipeline. Every kernel has a
// scalar reference implementation and, on x86-64 with AVX2, a vector
// variant selected once at startup. The two are equivalence-tested; pick a
// backend explicitly only in tests.

namespace fso::kernels {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Backend currently in use (auto-detected on first call).
Backend active_backend();

/// Override the auto-detected backend. Throws if unavailable on this CPU.
void set_backend(Backend b);

/// y[i] = a * x[i]
void scale(const double* x, double* y, std::size_t n, double a);

/// out[i] = peak_w * ((1 - floor_fraction) * sin^2(pi*drive[i]/2) + floor_fraction)
/// drive values are expected in [0, 1].
void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction);

/// current[i] = amps_per_watt * p[i]
/// sigma[i]   = sqrt(shot_a2_per_w * p[i] + var_floor_a2)
void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2);

/// (re[i] + j*im[i]) *= (h_re[i] + j*h_im[i])
void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n);

}  // namespace fso::kernels
