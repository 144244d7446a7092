// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fso/units.hpp"

namespace fso {

/// Visibility-to-attenuation fog models. Kim and Kruse share the 3.91/V
/// form and differ in the wavelength exponent q; the Al Naboulsi model has
/// separate coefficient sets for advection and convection fog.
enum class FogModel { Kim, Kruse, NaboulsiAdvection, NaboulsiConvection };

FogModel fog_model_from_string(std::string_view name);
std::string to_string(FogModel model);

struct RainPoint {
  double rate_mm_hr = 0.0;
  double atten_db_km = 0.0;
};

/// Piecewise-linear rain-rate -> specific-attenuation curve. Rates must be
/// strictly increasing and attenuations non-decreasing; at least two points.
class RainCurve {
 public:
  explicit RainCurve(std::vector<RainPoint> points);

  /// The Milan reference curve: 7.3 / 14.6 / 23.8 / 30.38 dB/km at
  /// 25 / 50 / 100 / 150 mm/hr.
  static RainCurve milan_reference();

  /// Two-column CSV, header `rate_mm_hr,atten_db_km`.
  static RainCurve from_csv(std::istream& in);

  const std::vector<RainPoint>& points() const { return points_; }

 private:
  std::vector<RainPoint> points_;
};

/// Transmit/receive aperture diameters plus full-angle divergence.
struct GeometryParams {
  ApertureM d_tx;
  ApertureM d_rx;
  DivergenceMrad divergence;

  GeometryParams(ApertureM tx, ApertureM rx, DivergenceMrad div);
};

/// Fraction of transmitted power captured by the receive aperture,
/// [d_rx / (d_tx + theta*l)]^2 clamped to 1 (mrad * km = m, so the beam
/// diameter comes out directly in meters).
double geometric_capture_fraction(const GeometryParams& g, LengthKm l);

/// Beer's-law transmittance e^(-sigma*l).
double transmittance(ExtinctionPerKm sigma, LengthKm l);

/// Wavelength exponent q of the Kim or Kruse relation. The Al Naboulsi
/// variants do not use q and are rejected.
double fog_q_exponent(VisibilityKm v, FogModel model);

SpecificAttenuationDbPerKm fog_specific_attenuation(VisibilityKm v,
                                                    WavelengthNm lambda,
                                                    FogModel model);

/// Interpolates the curve at rate r. Below the first point the segment from
/// the origin to the first point is used; above the last point the last
/// segment is extended.
SpecificAttenuationDbPerKm rain_specific_attenuation(RainRateMmHr r,
                                                     const RainCurve& curve);

/// A = k * R^a fitted by least squares in log-log space.
struct RainPowerLaw {
  double k = 0.0;
  double a = 0.0;
  double at(double rate_mm_hr) const;
};

RainPowerLaw fit_rain_powerlaw(const RainCurve& curve);

/// Total positive path loss in dB: -10*log10(geo_fraction) + alpha*l + extra.
double path_loss_db(double geo_fraction, SpecificAttenuationDbPerKm alpha,
                    LengthKm l, double extra_db = 0.0);

}  // namespace fso
