// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
// Run all with no arguments, or a single criterion with --only N.
// The exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "fso/attenuation.hpp"
#include "fso/bessel.hpp"
#include "fso/linkbudget.hpp"
#include "fso/physim.hpp"
#include "fso/scenarios.hpp"
#include "fso/units.hpp"

using namespace fso;

namespace {

struct Criterion {
  int id;
  const char* title;
  bool (*fn)(std::string& detail);
};

// [1] BER-Q relation reproduces the reference Q=9.17 / BER=2.28e-20 pair.
bool c1_ber_q_oracle(std::string& detail) {
  const double got = ber_from_q(9.17);
  const double ref = 2.28e-20;
  const double rel = std::abs(got - ref) / ref;
  char buf[128];
  std::snprintf(buf, sizeof buf, "ber(9.17)=%.5g, ref %.3g, rel err %.2f%% (tol 5%%)",
                got, ref, 100.0 * rel);
  detail = buf;
  return rel <= 0.05;
}

// [2] Inverting BER=1.33e-144 lands in [25, 26]; the reference Q=25 quoted
// for that BER is a rounded value.
bool c2_ber_q_inversion(std::string& detail) {
  const double q = q_from_ber(1.33e-144);
  char buf[96];
  std::snprintf(buf, sizeof buf, "q_from_ber(1.33e-144)=%.6f, window [25, 26]", q);
  detail = buf;
  return q >= 25.0 && q <= 26.0;
}

// [3] The rain curve reproduces its defining points exactly.
bool c3_rain_curve(std::string& detail) {
  const auto curve = RainCurve::milan_reference();
  const double rates[] = {25.0, 50.0, 100.0, 150.0};
  const double want[] = {7.3, 14.6, 23.8, 30.38};
  bool ok = true;
  for (int i = 0; i < 4; ++i)
    ok = ok && rain_specific_attenuation(RainRateMmHr(rates[i]), curve)
                       .db_per_km == want[i];
  detail = "25/50/100/150 mm/hr -> 7.3/14.6/23.8/30.38 dB/km, exact";
  return ok;
}

// [4] The Kim model brackets and crosses 88.43 dB/km for some visibility in
// [0.15, 0.25] km; located by bisection.
bool c4_kim_peak(std::string& detail) {
  const WavelengthNm lambda(1550.0);
  const double target = 88.43;
  const auto atten = [&](double v) {
    return fog_specific_attenuation(VisibilityKm(v), lambda, FogModel::Kim)
        .db_per_km;
  };
  const double at_lo = atten(0.15), at_hi = atten(0.25);
  if (!(at_lo > target && target > at_hi)) {
    detail = "bracket failed";
    return false;
  }
  double lo = 0.15, hi = 0.25;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (atten(mid) > target ? lo : hi) = mid;
  }
  const double v_star = 0.5 * (lo + hi);
  const double residual = std::abs(atten(v_star) - target);
  // continuity: no jumps along a fine visibility grid
  double max_jump = 0.0, prev = at_lo;
  for (double v = 0.15; v <= 0.25 + 1e-12; v += 0.0005) {
    const double a = atten(v);
    max_jump = std::max(max_jump, std::abs(a - prev));
    prev = a;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "88.43 dB/km at v=%.6f km (expected ~0.192), residual %.2g dB/km, "
                "max grid jump %.3g",
                v_star, residual, max_jump);
  detail = buf;
  return residual <= 1.0 && std::abs(v_star - 0.192) <= 0.002 && max_jump < 1.0;
}

// [5] Reference rain scenario: defaults with geometric capture composed into
// the loss (full capture) plus 30.38 dB/km over 1 km; Q within a factor-2
// band of the reference value 25.
bool c5_rain_end_to_end(std::string& detail) {
  SimConfig cfg;
  cfg.channel_loss_db = path_loss_db(/*full capture*/ 1.0,
                                     SpecificAttenuationDbPerKm(30.38),
                                     LengthKm(1.0), 0.0);
  const double q = simulate_link(cfg).metrics.q_factor;
  char buf[96];
  std::snprintf(buf, sizeof buf, "Q=%.3f, band [12.5, 50]", q);
  detail = buf;
  return q >= 12.5 && q <= 50.0;
}

// [6] Dense-fog scenario: 100 dB/km over 500 m; band [4.6, 18.4] around the
// reference value 9.17 and strictly below the rain-case Q. That reference
// point sits above the shot-noise ceiling for -45 dBm received power at this
// bandwidth (see README), so the band check is expected to record a FAIL
// rather than hide the discrepancy behind a loosened tolerance.
bool c6_fog_end_to_end(std::string& detail) {
  SimConfig cfg;
  cfg.channel_loss_db = path_loss_db(1.0, SpecificAttenuationDbPerKm(100.0),
                                     LengthKm(0.5), 0.0);
  const double q_fog = simulate_link(cfg).metrics.q_factor;

  SimConfig rain;
  rain.channel_loss_db = path_loss_db(1.0, SpecificAttenuationDbPerKm(30.38),
                                      LengthKm(1.0), 0.0);
  const double q_rain = simulate_link(rain).metrics.q_factor;

  const bool in_band = q_fog >= 4.6 && q_fog <= 18.4;
  const bool ordered = q_fog < q_rain;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "Q=%.3f, band [4.6, 18.4] %s; below rain Q=%.3f %s",
                q_fog, in_band ? "ok" : "MISSED", q_rain, ordered ? "ok" : "NO");
  detail = buf;
  return in_band && ordered;
}

// [7] 50 dB budget against 100 dB/km solves to 500 m.
bool c7_max_range(std::string& detail) {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.sensitivity = PowerDbm(-45.0);
  in.alpha = SpecificAttenuationDbPerKm(100.0);
  const auto r = max_range(in, 0.0);
  if (!r) {
    detail = "no feasible range";
    return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max range %.6f km (want 0.500 +/- 0.001)", r->km);
  detail = buf;
  return std::abs(r->km - 0.5) <= 1e-3;
}

// [8] The bundled topology matches the reference 13 rows.
bool c8_topology(std::string& detail) {
  const auto links = builtin_topology();
  const bool ok = links.size() == 13 && links[0].distance.km == 0.047 &&
                  links[6].distance.km == 1.452 && links[12].distance.km == 1.728;
  detail = "13 links; rows 1/7/13 at 0.047/1.452/1.728 km";
  return ok;
}

// [9] Property bundle: PRBS period, filter DC gain and -3 dB point,
// transmittance multiplicativity, Q monotone in loss, batch determinism,
// dBm round trip.
bool c9_properties(std::string& detail) {
  std::ostringstream log;
  bool ok = true;

  {  // PRBS-7 period by brute force
    const auto seq = prbs_generate(7, 1, 262);
    int period = -1;
    for (int p = 1; p <= 127; ++p) {
      bool repeat = true;
      for (int i = 0; i < 127; ++i)
        if (seq.bits[i] != seq.bits[i + p]) {
          repeat = false;
          break;
        }
      if (repeat) {
        period = p;
        break;
      }
    }
    ok = ok && period == 127;
    log << "prbs7 period " << period << "; ";
  }
  {  // filter DC gain and cutoff magnitude
    const double dc = std::abs(bessel_response(4, 0.0, 7.5e9));
    const double cut = std::abs(bessel_response(4, 7.5e9, 7.5e9));
    const double want = 1.0 / std::sqrt(2.0);
    ok = ok && std::abs(dc - 1.0) <= 1e-9 && std::abs(cut - want) <= 0.01 * want;
    log << "dc gain err " << std::abs(dc - 1.0) << ", cutoff mag " << cut << "; ";
  }
  {  // transmittance multiplicativity
    double worst = 0.0;
    for (double sigma : {0.3, 2.33, 11.0})
      for (double l1 : {0.1, 0.7, 2.0})
        for (double l2 : {0.4, 1.6}) {
          const double whole =
              transmittance(ExtinctionPerKm(sigma), LengthKm(l1 + l2));
          const double split =
              transmittance(ExtinctionPerKm(sigma), LengthKm(l1)) *
              transmittance(ExtinctionPerKm(sigma), LengthKm(l2));
          worst = std::max(worst, std::abs(whole - split) / whole);
        }
    ok = ok && worst <= 1e-12;
    log << "transmittance split err " << worst << "; ";
  }
  {  // Q strictly decreasing over a 0..60 dB sweep
    double prev = 1e300;
    bool monotone = true;
    for (int loss = 0; loss <= 60; loss += 5) {
      SimConfig cfg;
      cfg.channel_loss_db = loss;
      const double q = simulate_link(cfg).metrics.q_factor;
      if (!(q < prev)) monotone = false;
      prev = q;
    }
    ok = ok && monotone;
    log << "loss sweep monotone " << (monotone ? "yes" : "NO") << "; ";
  }
  {  // batch determinism
    std::istringstream w1(
        "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km\n"
        "jul,Rain,100,,\ndec,Fog,,0.2,\n");
    const auto records = weather_from_csv(w1);
    ScenarioParams params;
    params.run_physim = true;
    std::ostringstream a, b;
    report_to_csv(evaluate_matrix(builtin_topology(), records, params), a);
    report_to_csv(evaluate_matrix(builtin_topology(), records, params), b);
    ok = ok && a.str() == b.str();
    log << "matrix rerun identical " << (a.str() == b.str() ? "yes" : "NO") << "; ";
  }
  {  // dBm round trip
    double worst = 0.0;
    for (double dbm = -70.0; dbm <= 30.0; dbm += 1.7) {
      const double back = watts_to_dbm(dbm_to_watts(PowerDbm(dbm))).dbm;
      worst = std::max(worst, std::abs(back - dbm) / std::max(1.0, std::abs(dbm)));
    }
    ok = ok && worst <= 1e-12;
    log << "dbm round-trip err " << worst;
  }
  detail = log.str();
  return ok;
}

// [10] 25 dB margin classifies Feasible, 24.99 dB Marginal.
bool c10_classification(std::string& detail) {
  detail = "margin 25 -> Feasible, 24.99 -> Marginal at default thresholds";
  return classify(25.0) == LinkClass::Feasible &&
         classify(24.99) == LinkClass::Marginal;
}

const Criterion kCriteria[] = {
    {1, "BER-Q relation at the fog reference operating point", c1_ber_q_oracle},
    {2, "BER-Q inversion of the rain reference BER", c2_ber_q_inversion},
    {3, "Rain curve fidelity", c3_rain_curve},
    {4, "Kim fog peak location", c4_kim_peak},
    {5, "End-to-end rain case", c5_rain_end_to_end},
    {6, "End-to-end fog case", c6_fog_end_to_end},
    {7, "Max-range solution", c7_max_range},
    {8, "Bundled topology fixture", c8_topology},
    {9, "Property suite", c9_properties},
    {10, "Margin classification rule", c10_classification},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%2d] %-52s %s  %s\n", c.id, c.title, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++failures;
  }
  if (only == 0)
    std::printf("\n%d of %zu criteria passed\n",
                static_cast<int>(std::size(kCriteria)) - failures,
                std::size(kCriteria));
  return failures;
}
