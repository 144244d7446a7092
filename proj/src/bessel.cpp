// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/bessel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fso {

namespace {

std::vector<double> reverse_bessel_coeffs(int order) {
  // theta_0 = 1, theta_1 = s + 1, theta_n = (2n-1) theta_{n-1} + s^2 theta_{n-2}
  std::vector<double> prev{1.0};
  std::vector<double> cur{1.0, 1.0};
  if (order == 0) return prev;
  for (int m = 2; m <= order; ++m) {
    std::vector<double> next(m + 1, 0.0);
    for (std::size_t k = 0; k < cur.size(); ++k)
      next[k] += (2.0 * m - 1.0) * cur[k];
    for (std::size_t k = 0; k < prev.size(); ++k) next[k + 2] += prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::complex<double> eval_poly(const std::vector<double>& c,
                               std::complex<double> s) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double mag2(const std::vector<double>& c, double w) {
  const std::complex<double> th = eval_poly(c, {0.0, w});
  return (c[0] * c[0]) / std::norm(th);
}

double solve_w3db(const std::vector<double>& c) {
  double lo = 0.0, hi = 1.0;
  while (mag2(c, hi) > 0.5) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mag2(c, mid) > 0.5)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double simpson(const std::vector<double>& c, double a, double b, int n) {
  // n must be even
  const double h = (b - a) / n;
  double acc = mag2(c, a) + mag2(c, b);
  for (int i = 1; i < n; ++i) acc += mag2(c, a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

double prototype_power_integral(const std::vector<double>& c, int order) {
  const double w_cut = 2000.0;
  double integral = simpson(c, 0.0, 20.0, 40000) + simpson(c, 20.0, w_cut, 39600);
  // |H|^2 ~ (a0 / w^n)^2 beyond the numeric window
  const double a0 = c[0];
  integral += a0 * a0 * std::pow(w_cut, 1.0 - 2.0 * order) / (2.0 * order - 1.0);
  return integral;
}

}  // namespace

const BesselPrototype& BesselPrototype::get(int order) {
  if (order < 1 || order > 8)
    throw std::invalid_argument("Bessel filter order must be in [1, 8]");
  static std::map<int, BesselPrototype> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    BesselPrototype p;
    p.order = order;
    p.coeffs = reverse_bessel_coeffs(order);
    p.w3db = solve_w3db(p.coeffs);
    p.neb_over_cutoff = prototype_power_integral(p.coeffs, order) / p.w3db;
    it = cache.emplace(order, std::move(p)).first;
  }
  return it->second;
}

std::complex<double> bessel_response(int order, double f_hz, double cutoff_hz) {
  if (!(cutoff_hz > 0.0))
    throw std::invalid_argument("bessel_response: cutoff must be > 0");
  const BesselPrototype& p = BesselPrototype::get(order);
  // Map cutoff_hz onto the prototype's -3 dB point; tau is then the filter's
  // DC group delay in seconds (the prototype is delay-normalized to 1 s).
  const double tau = p.w3db / (2.0 * std::numbers::pi * cutoff_hz);
  const double w = 2.0 * std::numbers::pi * f_hz * tau;
  const std::complex<double> h = p.coeffs[0] / eval_poly(p.coeffs, {0.0, w});
  return h * std::polar(1.0, w);  // strip the DC group delay
}

double bessel_noise_bandwidth_hz(double cutoff_hz, int order) {
  const BesselPrototype& p = BesselPrototype::get(order);
  return p.neb_over_cutoff * cutoff_hz;
}

}  // namespace fso
