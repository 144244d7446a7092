// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/physim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "fso/bessel.hpp"
#include "fso/fft.hpp"
#include "fso/kernels.hpp"

namespace fso {

namespace {

constexpr double kElectronCharge = 1.602176634e-19;  // C
constexpr double kBoltzmann = 1.380649e-23;          // J/K

// One primitive feedback polynomial per register length (XNOR/XOR tap sets
// from the standard maximal-length tables). Index = order - 3.
constexpr std::uint32_t kLfsrTapMask[] = {
    (1u << 2) | (1u << 1),                          //  3: x^3+x^2+1
    (1u << 3) | (1u << 2),                          //  4
    (1u << 4) | (1u << 2),                          //  5
    (1u << 5) | (1u << 4),                          //  6
    (1u << 6) | (1u << 5),                          //  7: x^7+x^6+1
    (1u << 7) | (1u << 5) | (1u << 4) | (1u << 3),  //  8
    (1u << 8) | (1u << 4),                          //  9
    (1u << 9) | (1u << 6),                          // 10
    (1u << 10) | (1u << 8),                         // 11
    (1u << 11) | (1u << 5) | (1u << 3) | (1u << 0), // 12
    (1u << 12) | (1u << 3) | (1u << 2) | (1u << 0), // 13
    (1u << 13) | (1u << 4) | (1u << 2) | (1u << 0), // 14
    (1u << 14) | (1u << 13),                        // 15
    (1u << 15) | (1u << 14) | (1u << 12) | (1u << 3),  // 16
    (1u << 16) | (1u << 13),                        // 17
    (1u << 17) | (1u << 10),                        // 18
    (1u << 18) | (1u << 5) | (1u << 1) | (1u << 0), // 19
    (1u << 19) | (1u << 16),                        // 20
    (1u << 20) | (1u << 18),                        // 21
    (1u << 21) | (1u << 20),                        // 22
    (1u << 22) | (1u << 17),                        // 23
    (1u << 23) | (1u << 22) | (1u << 21) | (1u << 16),  // 24
    (1u << 24) | (1u << 21),                        // 25
    (1u << 25) | (1u << 5) | (1u << 1) | (1u << 0), // 26
    (1u << 26) | (1u << 4) | (1u << 1) | (1u << 0), // 27
    (1u << 27) | (1u << 24),                        // 28
    (1u << 28) | (1u << 26),                        // 29
    (1u << 29) | (1u << 5) | (1u << 3) | (1u << 0), // 30
    (1u << 30) | (1u << 27),                        // 31
};

void check_kind(const Waveform& w, SignalKind expected, const char* op) {
  if (w.kind != expected)
    throw std::invalid_argument(std::string(op) + ": unexpected waveform kind");
}

void validate_apd(const ApdParams& p) {
  if (!(p.responsivity_a_per_w > 0.0))
    throw std::domain_error("APD responsivity must be > 0");
  if (!(p.gain >= 1.0)) throw std::domain_error("APD gain must be >= 1");
  if (!(p.ionization_ratio >= 0.0) || !(p.ionization_ratio <= 1.0))
    throw std::domain_error("APD ionization ratio must be in [0, 1]");
  if (!(p.dark_current_a >= 0.0))
    throw std::domain_error("APD dark current must be >= 0");
  if (!(p.temperature_k > 0.0))
    throw std::domain_error("APD temperature must be > 0");
  if (!(p.load_resistance_ohm > 0.0))
    throw std::domain_error("APD load resistance must be > 0");
}

}  // namespace

BitSequence prbs_generate(int order, std::uint32_t seed, int n_bits) {
  if (order < 3 || order > 31)
    throw std::invalid_argument("prbs_generate: order must be in [3, 31]");
  if (n_bits < 0) throw std::invalid_argument("prbs_generate: negative length");
  const std::uint32_t mask =
      order == 31 ? 0x7fffffffu : ((1u << order) - 1u);
  std::uint32_t state = seed & mask;
  if (state == 0)
    throw std::invalid_argument(
        "prbs_generate: seed reduces to the all-zero LFSR state");
  const std::uint32_t taps = kLfsrTapMask[order - 3];

  BitSequence seq;
  seq.seed = seed;
  seq.generator_order = order;
  seq.bits.resize(static_cast<std::size_t>(n_bits));
  for (auto& b : seq.bits) {
    b = static_cast<std::uint8_t>((state >> (order - 1)) & 1u);
    const std::uint32_t fb =
        static_cast<std::uint32_t>(std::popcount(state & taps) & 1);
    state = ((state << 1) | fb) & mask;
  }
  return seq;
}

Waveform nrz_encode(const BitSequence& bits, int samples_per_bit,
                    double bit_rate_hz) {
  if (samples_per_bit < 2)
    throw std::invalid_argument("nrz_encode: samples_per_bit must be >= 2");
  if (!(bit_rate_hz > 0.0))
    throw std::invalid_argument("nrz_encode: bit rate must be > 0");
  Waveform w;
  w.kind = SignalKind::ElectricalDrive;
  w.sample_rate_hz = bit_rate_hz * samples_per_bit;
  w.samples.reserve(bits.bits.size() * samples_per_bit);
  for (const auto b : bits.bits)
    w.samples.insert(w.samples.end(), samples_per_bit, b ? 1.0 : 0.0);
  return w;
}

Waveform bessel_lowpass(const Waveform& w, double cutoff_hz, int order) {
  if (!(cutoff_hz > 0.0))
    throw std::invalid_argument("bessel_lowpass: cutoff must be > 0");
  if (!(w.sample_rate_hz > 0.0))
    throw std::invalid_argument("bessel_lowpass: waveform has no sample rate");
  if (cutoff_hz >= 0.5 * w.sample_rate_hz)
    throw std::invalid_argument("bessel_lowpass: cutoff at or above Nyquist");

  const std::size_t n = w.samples.size();
  if (n == 0) return w;

  std::vector<double> re(w.samples);
  std::vector<double> im(n, 0.0);
  dft(re, im, false);

  std::vector<double> h_re(n), h_im(n);
  const double df = w.sample_rate_hz / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f =
        (k <= n / 2) ? k * df : (static_cast<double>(k) - static_cast<double>(n)) * df;
    const std::complex<double> h = bessel_response(order, f, cutoff_hz);
    h_re[k] = h.real();
    h_im[k] = h.imag();
  }
  h_re[0] = 1.0;  // DC gain exactly 1
  h_im[0] = 0.0;
  if (n % 2 == 0) h_im[n / 2] = 0.0;  // shared +/- Nyquist bin must be real

  kernels::complex_multiply(re.data(), im.data(), h_re.data(), h_im.data(), n);
  dft(re, im, true);

  Waveform out;
  out.kind = w.kind;
  out.sample_rate_hz = w.sample_rate_hz;
  out.samples = std::move(re);
  return out;
}

Waveform mzm_modulate(const Waveform& drive, PowerDbm laser_power,
                      double extinction_db) {
  check_kind(drive, SignalKind::ElectricalDrive, "mzm_modulate");
  if (!(extinction_db > 0.0))
    throw std::invalid_argument("mzm_modulate: extinction ratio must be > 0 dB");
  for (std::size_t i = 0; i < drive.samples.size(); ++i) {
    const double d = drive.samples[i];
    if (!(d >= 0.0) || !(d <= 1.0))
      throw std::invalid_argument("mzm_modulate: drive sample " +
                                  std::to_string(i) + " outside [0, 1]");
  }
  const double peak = dbm_to_watts(laser_power).watts;
  const double floor = std::pow(10.0, -extinction_db / 10.0);

  Waveform out;
  out.kind = SignalKind::OpticalPower;
  out.sample_rate_hz = drive.sample_rate_hz;
  out.samples.resize(drive.samples.size());
  kernels::mzm_transfer(drive.samples.data(), out.samples.data(),
                        drive.samples.size(), peak, floor);
  return out;
}

Waveform apply_channel(const Waveform& w, double loss_db) {
  if (!(loss_db >= 0.0))
    throw std::domain_error("apply_channel: loss must be >= 0 dB");
  Waveform out;
  out.kind = w.kind;
  out.sample_rate_hz = w.sample_rate_hz;
  out.samples.resize(w.samples.size());
  kernels::scale(w.samples.data(), out.samples.data(), w.samples.size(),
                 std::pow(10.0, -loss_db / 10.0));
  return out;
}

double excess_noise_factor(double gain, double k) {
  if (!(gain >= 1.0)) throw std::domain_error("excess_noise_factor: gain < 1");
  if (!(k >= 0.0) || !(k <= 1.0))
    throw std::domain_error("excess_noise_factor: k outside [0, 1]");
  return k * gain + (1.0 - k) * (2.0 - 1.0 / gain);
}

DetectedSignal apd_detect(const Waveform& optical, const ApdParams& p,
                          double noise_bandwidth_hz) {
  check_kind(optical, SignalKind::OpticalPower, "apd_detect");
  validate_apd(p);
  if (!(noise_bandwidth_hz > 0.0))
    throw std::invalid_argument("apd_detect: noise bandwidth must be > 0");

  const double m = p.gain;
  const double f_excess = excess_noise_factor(m, p.ionization_ratio);
  const double shot_per_watt = 2.0 * kElectronCharge * m * m * f_excess *
                               p.responsivity_a_per_w * noise_bandwidth_hz;
  const double dark_var = 2.0 * kElectronCharge * m * m * f_excess *
                          p.dark_current_a * noise_bandwidth_hz;
  const double thermal_var = 4.0 * kBoltzmann * p.temperature_k *
                             noise_bandwidth_hz / p.load_resistance_ohm;

  DetectedSignal out;
  out.current.kind = SignalKind::PhotoCurrent;
  out.current.sample_rate_hz = optical.sample_rate_hz;
  out.current.samples.resize(optical.samples.size());
  out.noise_sigma_a.resize(optical.samples.size());
  kernels::apd_response(optical.samples.data(), out.current.samples.data(),
                        out.noise_sigma_a.data(), optical.samples.size(),
                        m * p.responsivity_a_per_w, shot_per_watt,
                        dark_var + thermal_var);
  return out;
}

double ber_from_q(double q) {
  if (!(q >= 0.0)) throw std::domain_error("ber_from_q: q must be >= 0");
  const double x = q / std::numbers::sqrt2;
  if (x < 25.0) return 0.5 * std::erfc(x);
  // erfc(x) ~ exp(-x^2)/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6)),
  // evaluated in the log domain; relative error < 1e-10 at the switch point.
  const double inv2 = 1.0 / (x * x);
  const double series = 1.0 + inv2 * (-0.5 + inv2 * (0.75 - inv2 * 1.875));
  const double log_ber = -x * x - std::log(x) -
                         0.5 * std::log(std::numbers::pi) + std::log(series) -
                         std::numbers::ln2;
  return std::exp(log_ber);
}

double q_from_ber(double ber) {
  if (!(ber > 0.0) || !(ber <= 0.5))
    throw std::domain_error("q_from_ber: ber must be in (0, 0.5]");
  double lo = 0.0, hi = 60.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ber_from_q(mid) > ber)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

EyeMetrics eye_metrics(const Waveform& signal,
                       const std::vector<double>& noise_sigma,
                       const BitSequence& bits, int samples_per_bit) {
  const std::size_t n_bits = bits.bits.size();
  if (samples_per_bit < 1)
    throw std::invalid_argument("eye_metrics: samples_per_bit must be >= 1");
  if (signal.samples.size() != n_bits * static_cast<std::size_t>(samples_per_bit) ||
      noise_sigma.size() != signal.samples.size())
    throw std::invalid_argument("eye_metrics: length mismatch");
  if (n_bits < 3)
    throw std::invalid_argument("eye_metrics: need at least three bits");

  std::size_t marks = 0, spaces = 0;
  for (std::size_t k = 1; k + 1 < n_bits; ++k)
    (bits.bits[k] ? marks : spaces)++;
  if (marks == 0 || spaces == 0)
    throw std::domain_error("eye_metrics: degenerate all-same-bit pattern");

  EyeMetrics best;
  double best_q = -std::numeric_limits<double>::infinity();
  for (int phase = 0; phase < samples_per_bit; ++phase) {
    double sum[2] = {0.0, 0.0}, sum2[2] = {0.0, 0.0}, var_noise[2] = {0.0, 0.0};
    std::size_t count[2] = {0, 0};
    for (std::size_t k = 1; k + 1 < n_bits; ++k) {
      const std::size_t idx = k * samples_per_bit + phase;
      const int b = bits.bits[k] ? 1 : 0;
      const double s = signal.samples[idx];
      sum[b] += s;
      sum2[b] += s * s;
      var_noise[b] += noise_sigma[idx] * noise_sigma[idx];
      count[b]++;
    }
    const double mu0 = sum[0] / count[0];
    const double mu1 = sum[1] / count[1];
    const double isi_var0 = std::max(0.0, sum2[0] / count[0] - mu0 * mu0);
    const double isi_var1 = std::max(0.0, sum2[1] / count[1] - mu1 * mu1);
    const double sigma0 = std::sqrt(var_noise[0] / count[0] + isi_var0);
    const double sigma1 = std::sqrt(var_noise[1] / count[1] + isi_var1);
    const double denom = sigma1 + sigma0;
    const double q = denom > 0.0 ? (mu1 - mu0) / denom
                                 : std::numeric_limits<double>::infinity();
    if (q > best_q) {
      best_q = q;
      best.mu1_a = mu1;
      best.mu0_a = mu0;
      best.sigma1_a = sigma1;
      best.sigma0_a = sigma0;
      best.q_factor = q;
      best.decision_phase =
          static_cast<double>(phase) / static_cast<double>(samples_per_bit);
    }
  }
  best.ber = std::isfinite(best.q_factor)
                 ? ber_from_q(std::max(0.0, best.q_factor))
                 : 0.0;
  return best;
}

EyeDiagram export_eye(const Waveform& signal, int samples_per_bit) {
  if (samples_per_bit < 2)
    throw std::invalid_argument("export_eye: samples_per_bit must be >= 2");
  const std::size_t n = signal.samples.size();
  const std::size_t spb = static_cast<std::size_t>(samples_per_bit);
  if (n % spb != 0)
    throw std::invalid_argument(
        "export_eye: signal length is not a multiple of samples_per_bit");

  EyeDiagram eye;
  eye.samples_per_bit = samples_per_bit;
  const std::size_t offset = spb / 2;
  const std::size_t window = 2 * spb;
  if (n < offset + window) return eye;
  const std::size_t count = (n - offset) / window;
  eye.traces.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto begin = signal.samples.begin() + offset + t * window;
    eye.traces.emplace_back(begin, begin + window);
  }
  return eye;
}

SimResult simulate_link(const SimConfig& cfg) {
  if (!(cfg.bit_rate_hz > 0.0))
    throw std::invalid_argument("simulate_link: bit rate must be > 0");
  if (cfg.sequence_length < 3)
    throw std::invalid_argument("simulate_link: sequence length must be >= 3");
  if (cfg.samples_per_bit < 2)
    throw std::invalid_argument("simulate_link: samples_per_bit must be >= 2");
  if (!(cfg.channel_loss_db >= 0.0))
    throw std::domain_error("simulate_link: channel loss must be >= 0 dB");

  const BitSequence bits =
      prbs_generate(cfg.prbs_order, cfg.seed, cfg.sequence_length);
  Waveform drive = nrz_encode(bits, cfg.samples_per_bit, cfg.bit_rate_hz);
  drive = bessel_lowpass(drive, kDriveFilterCutoffRatio * cfg.bit_rate_hz,
                         kDriveFilterOrder);
  // The Bessel step response overshoots by a fraction of a percent; the
  // modulator contract wants [0, 1].
  for (auto& s : drive.samples) s = std::clamp(s, 0.0, 1.0);

  Waveform optical =
      mzm_modulate(drive, cfg.laser_power, cfg.mzm_extinction_db);
  optical = apply_channel(optical, cfg.channel_loss_db);

  const double noise_bw =
      bessel_noise_bandwidth_hz(cfg.rx_filter_cutoff_hz, cfg.rx_filter_order);
  DetectedSignal detected = apd_detect(optical, cfg.apd, noise_bw);
  const Waveform filtered = bessel_lowpass(
      detected.current, cfg.rx_filter_cutoff_hz, cfg.rx_filter_order);

  SimResult result;
  result.metrics = eye_metrics(filtered, detected.noise_sigma_a, bits,
                               cfg.samples_per_bit);
  result.eye = export_eye(filtered, cfg.samples_per_bit);
  return result;
}

void write_eye_csv(const EyeDiagram& eye, std::ostream& os) {
  const int width = 2 * eye.samples_per_bit;
  for (int i = 0; i < width; ++i) os << (i ? ",t" : "t") << i;
  os << '\n';
  char buf[32];
  for (const auto& trace : eye.traces) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", trace[i]);
      if (i) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

std::string eye_metrics_json(const EyeMetrics& m) {
  nlohmann::json j;
  j["mu1"] = m.mu1_a;
  j["mu0"] = m.mu0_a;
  j["sigma1"] = m.sigma1_a;
  j["sigma0"] = m.sigma0_a;
  j["q_factor"] = m.q_factor;
  j["ber"] = m.ber;
  j["decision_phase"] = m.decision_phase;
  return j.dump(2);
}

}  // namespace fso
