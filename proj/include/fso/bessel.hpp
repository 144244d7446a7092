// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace fso {

/// Delay-normalized Bessel-Thomson lowpass prototype of a given order:
/// H(s) = theta_n(0) / theta_n(s) with theta_n the reverse Bessel
/// polynomial. Solved once per order and cached.
struct BesselPrototype {
  int order = 0;
  std::vector<double> coeffs;   // theta_n, ascending powers, exact integers
  double w3db = 0.0;            // prototype -3 dB frequency [rad/s]
  double neb_over_cutoff = 0.0; // one-sided noise bandwidth / f_3dB

  static const BesselPrototype& get(int order);  // order in [1, 8]
};

/// Frequency response of the cutoff-scaled filter, with the DC group delay
/// removed so filtered waveforms stay time-aligned with their inputs.
/// |H| is untouched: exactly 1 at DC and 1/sqrt(2) at cutoff_hz.
std::complex<double> bessel_response(int order, double f_hz, double cutoff_hz);

/// One-sided noise-equivalent bandwidth of the filter in Hz
/// (integral of |H(f)|^2 over f >= 0).
double bessel_noise_bandwidth_hz(double cutoff_hz, int order);

}  // namespace fso
