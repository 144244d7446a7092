// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fso/units.hpp"

// Sample-level simulation of a 10 Gbps OOK chain: PRBS source, NRZ driver,
// Bessel drive filter, Mach-Zehnder modulator, lumped channel loss, APD
// detection and a Bessel receive filter, analyzed into Q-factor/BER eye
// metrics. Noise is handled semi-analytically: the signal stays noiseless
// and per-sample Gaussian sigmas are propagated instead, which keeps runs
// deterministic and makes tail BERs (1e-20 and far below) computable.

namespace fso {

enum class SignalKind { ElectricalDrive, OpticalPower, PhotoCurrent };

struct Waveform {
  std::vector<double> samples;
  double sample_rate_hz = 0.0;
  SignalKind kind = SignalKind::ElectricalDrive;
};

struct BitSequence {
  std::vector<std::uint8_t> bits;
  std::uint32_t seed = 1;
  int generator_order = 7;
};

/// Avalanche photodiode parameters. Ionization ratio and dark current match
/// the usual 1550 nm APD datasheet figures; the load resistance acts as an
/// effective thermal-noise knob and defaults high enough that the receiver
/// is shot-noise-limited.
struct ApdParams {
  double responsivity_a_per_w = 1.0;
  double gain = 3.0;
  double ionization_ratio = 0.9;
  double dark_current_a = 10e-9;
  double temperature_k = 293.0;
  double load_resistance_ohm = 1e6;
};

/// Defaults are the reference system: 10 Gbps, 128-bit PRBS, 64 samples/bit
/// (8192 samples), 5 dBm laser at 1550 nm, order-4 receive Bessel filter at
/// 0.75 x bit rate.
struct SimConfig {
  double bit_rate_hz = 10e9;
  int sequence_length = 128;
  int samples_per_bit = 64;
  PowerDbm laser_power{5.0};
  WavelengthNm wavelength{1550.0};
  double mzm_extinction_db = 30.0;
  double channel_loss_db = 0.0;
  ApdParams apd;
  double rx_filter_cutoff_hz = 0.75 * 10e9;
  int rx_filter_order = 4;
  int prbs_order = 7;
  std::uint32_t seed = 1;
};

/// The drive-side low-pass ahead of the modulator is fixed: order 4, cutoff
/// equal to the bit rate.
inline constexpr double kDriveFilterCutoffRatio = 1.0;
inline constexpr int kDriveFilterOrder = 4;

struct EyeMetrics {
  double mu1_a = 0.0;
  double mu0_a = 0.0;
  double sigma1_a = 0.0;
  double sigma0_a = 0.0;
  double q_factor = 0.0;
  double ber = 0.5;
  double decision_phase = 0.0;  // fraction of a bit period
};

struct EyeDiagram {
  int samples_per_bit = 0;
  std::vector<std::vector<double>> traces;  // each 2 x samples_per_bit long
};

/// Maximal-length LFSR bit stream. Order in [3, 31]; the all-zero state is
/// absorbing, so the (masked) seed must be nonzero.
BitSequence prbs_generate(int order, std::uint32_t seed, int n_bits);

/// Rectangular 0/1 hold of each bit for samples_per_bit samples.
Waveform nrz_encode(const BitSequence& bits, int samples_per_bit,
                    double bit_rate_hz);

/// Analog Bessel-Thomson response applied in the discrete-frequency domain.
/// DC gain is exactly 1 and |H| = 1/sqrt(2) at the cutoff; the filter's DC
/// group delay is removed so the output stays aligned with the input.
Waveform bessel_lowpass(const Waveform& w, double cutoff_hz, int order);

/// Quadrature-biased intensity transfer
///   P(t) = P_laser * ((1 - r) sin^2(pi d(t)/2) + r),  r = 10^(-ER/10).
/// Drive samples must lie in [0, 1].
Waveform mzm_modulate(const Waveform& drive, PowerDbm laser_power,
                      double extinction_db);

Waveform apply_channel(const Waveform& w, double loss_db);

/// McIntyre excess noise factor F = kM + (1 - k)(2 - 1/M).
double excess_noise_factor(double gain, double k);

struct DetectedSignal {
  Waveform current;                  // noiseless M*R*P(t)
  std::vector<double> noise_sigma_a; // per-sample Gaussian sigma
};

/// Semi-analytic APD front end: returns the noiseless photocurrent plus the
/// per-sample sigma of shot (with excess noise), dark and thermal terms
/// integrated over noise_bandwidth_hz.
DetectedSignal apd_detect(const Waveform& optical, const ApdParams& p,
                          double noise_bandwidth_hz);

/// 0.5 * erfc(q / sqrt(2)), switching to a log-domain asymptotic evaluation
/// deep in the tail so values like 1e-144 come out instead of underflowing.
/// Doubles bottom out near q = 38.5; beyond that the true BER is below the
/// smallest subnormal and 0 is returned.
double ber_from_q(double q);

/// Monotone inverse of ber_from_q on (0, 0.5], bisected to 1e-6 relative.
double q_from_ber(double ber);

/// Scans every decision phase, splits interior bits into marks and spaces,
/// and combines per-sample noise sigma with the pattern-induced (ISI) level
/// spread in quadrature. Reports the phase that maximizes Q. The first and
/// last bits are excluded as filter edge transients.
EyeMetrics eye_metrics(const Waveform& signal,
                       const std::vector<double>& noise_sigma,
                       const BitSequence& bits, int samples_per_bit);

/// Folds the waveform into consecutive two-bit-period traces offset by half
/// a bit period (so bit centers sit at the quarter points); the trailing
/// partial window is dropped. 8192 samples at 64 samples/bit give 63 traces
/// of 128 samples.
EyeDiagram export_eye(const Waveform& signal, int samples_per_bit);

struct SimResult {
  EyeMetrics metrics;
  EyeDiagram eye;
};

/// Full pipeline: prbs -> nrz -> bessel(drive) -> mzm -> channel -> apd ->
/// bessel(rx) -> eye analysis. Deterministic in the config.
SimResult simulate_link(const SimConfig& cfg);

/// One trace per row, header t0..t{2*spb-1}.
void write_eye_csv(const EyeDiagram& eye, std::ostream& os);

/// Flat object with keys mu1, mu0, sigma1, sigma0, q_factor, ber,
/// decision_phase.
std::string eye_metrics_json(const EyeMetrics& m);

}  // namespace fso
