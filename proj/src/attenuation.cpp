// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/attenuation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "parse_util.hpp"

namespace fso {

FogModel fog_model_from_string(std::string_view name) {
  if (name == "kim") return FogModel::Kim;
  if (name == "kruse") return FogModel::Kruse;
  if (name == "naboulsi-advection") return FogModel::NaboulsiAdvection;
  if (name == "naboulsi-convection") return FogModel::NaboulsiConvection;
  throw std::invalid_argument("unknown fog model '" + std::string(name) +
                              "' (expected kim, kruse, naboulsi-advection or "
                              "naboulsi-convection)");
}

std::string to_string(FogModel model) {
  switch (model) {
    case FogModel::Kim: return "kim";
    case FogModel::Kruse: return "kruse";
    case FogModel::NaboulsiAdvection: return "naboulsi-advection";
    case FogModel::NaboulsiConvection: return "naboulsi-convection";
  }
  throw std::logic_error("unreachable fog model");
}

RainCurve::RainCurve(std::vector<RainPoint> points) : points_(std::move(points)) {
  if (points_.size() < 2)
    throw std::invalid_argument("RainCurve needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i].rate_mm_hr >= 0.0) || !(points_[i].atten_db_km >= 0.0))
      throw std::invalid_argument("RainCurve points must be non-negative");
    if (i > 0) {
      if (!(points_[i].rate_mm_hr > points_[i - 1].rate_mm_hr))
        throw std::invalid_argument("RainCurve rates must be strictly increasing");
      if (points_[i].atten_db_km < points_[i - 1].atten_db_km)
        throw std::invalid_argument("RainCurve attenuations must be non-decreasing");
    }
  }
}

RainCurve RainCurve::milan_reference() {
  return RainCurve({{25.0, 7.3}, {50.0, 14.6}, {100.0, 23.8}, {150.0, 30.38}});
}

RainCurve RainCurve::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("rain curve CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "rate_mm_hr,atten_db_km")
    throw std::invalid_argument(
        "rain curve CSV: expected header 'rate_mm_hr,atten_db_km', got '" +
        line + "'");
  std::vector<RainPoint> pts;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("rain curve CSV: row " + std::to_string(row) +
                                  " has no comma");
    const auto rate = detail::parse_double(std::string_view(line).substr(0, comma));
    const auto atten =
        detail::parse_double(std::string_view(line).substr(comma + 1));
    if (!rate || !atten)
      throw std::invalid_argument("rain curve CSV: row " + std::to_string(row) +
                                  " is not numeric: '" + line + "'");
    pts.push_back({*rate, *atten});
  }
  return RainCurve(std::move(pts));
}

GeometryParams::GeometryParams(ApertureM tx, ApertureM rx, DivergenceMrad div)
    : d_tx(tx), d_rx(rx), divergence(div) {
  if (!(d_tx.m > 0.0) || !(d_rx.m > 0.0) || !(divergence.mrad > 0.0))
    throw std::domain_error("GeometryParams fields must all be > 0");
}

double geometric_capture_fraction(const GeometryParams& g, LengthKm l) {
  const double beam_diameter_m = g.d_tx.m + g.divergence.mrad * l.km;
  const double ratio = g.d_rx.m / beam_diameter_m;
  return std::min(1.0, ratio * ratio);
}

double transmittance(ExtinctionPerKm sigma, LengthKm l) {
  return std::exp(-sigma.per_km * l.km);
}

double fog_q_exponent(VisibilityKm v, FogModel model) {
  const double vk = v.km;
  switch (model) {
    case FogModel::Kruse:
      if (vk > 50.0) return 1.6;
      if (vk > 6.0) return 1.3;
      return 0.585 * std::cbrt(vk);
    case FogModel::Kim:
      if (vk > 50.0) return 1.6;
      if (vk > 6.0) return 1.3;
      if (vk > 1.0) return 0.16 * vk + 0.34;
      if (vk > 0.5) return vk - 0.5;
      return 0.0;
    default:
      throw std::invalid_argument(
          "fog_q_exponent: the Al Naboulsi models have no q exponent");
  }
}

SpecificAttenuationDbPerKm fog_specific_attenuation(VisibilityKm v,
                                                    WavelengthNm lambda,
                                                    FogModel model) {
  double sigma_per_km = 0.0;
  switch (model) {
    case FogModel::Kim:
    case FogModel::Kruse: {
      const double q = fog_q_exponent(v, model);
      sigma_per_km = (3.91 / v.km) * std::pow(lambda.nm / 550.0, -q);
      break;
    }
    case FogModel::NaboulsiAdvection: {
      const double lambda_um = lambda.nm * 1e-3;
      sigma_per_km = (0.11478 * lambda_um + 3.8367) / v.km;
      break;
    }
    case FogModel::NaboulsiConvection: {
      const double lambda_um = lambda.nm * 1e-3;
      sigma_per_km =
          (0.18126 * lambda_um * lambda_um + 0.13709 * lambda_um + 3.7502) / v.km;
      break;
    }
  }
  return extinction_to_db(ExtinctionPerKm(sigma_per_km));
}

SpecificAttenuationDbPerKm rain_specific_attenuation(RainRateMmHr r,
                                                     const RainCurve& curve) {
  const auto& pts = curve.points();
  const double rate = r.mm_per_hr;

  // Below the first point: line from the origin through the first point.
  if (rate <= pts.front().rate_mm_hr) {
    const double a =
        pts.front().atten_db_km * (rate / pts.front().rate_mm_hr);
    return SpecificAttenuationDbPerKm(a);
  }
  // Interior: plain piecewise-linear interpolation; curve points come back
  // bit-exact.
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (rate == pts[i].rate_mm_hr)
      return SpecificAttenuationDbPerKm(pts[i].atten_db_km);
    if (rate <= pts[i].rate_mm_hr) {
      const double t = (rate - pts[i - 1].rate_mm_hr) /
                       (pts[i].rate_mm_hr - pts[i - 1].rate_mm_hr);
      return SpecificAttenuationDbPerKm(
          pts[i - 1].atten_db_km +
          t * (pts[i].atten_db_km - pts[i - 1].atten_db_km));
    }
  }
  // Above the last point: extend the final segment.
  const auto& p0 = pts[pts.size() - 2];
  const auto& p1 = pts.back();
  const double slope =
      (p1.atten_db_km - p0.atten_db_km) / (p1.rate_mm_hr - p0.rate_mm_hr);
  return SpecificAttenuationDbPerKm(p1.atten_db_km +
                                    slope * (rate - p1.rate_mm_hr));
}

double RainPowerLaw::at(double rate_mm_hr) const {
  return k * std::pow(rate_mm_hr, a);
}

RainPowerLaw fit_rain_powerlaw(const RainCurve& curve) {
  const auto& pts = curve.points();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(pts.size());
  for (const auto& p : pts) {
    if (!(p.rate_mm_hr > 0.0) || !(p.atten_db_km > 0.0))
      throw std::domain_error("fit_rain_powerlaw: points must be > 0");
    const double x = std::log(p.rate_mm_hr);
    const double y = std::log(p.atten_db_km);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (!(denom > 1e-12))
    throw std::domain_error("fit_rain_powerlaw: degenerate curve, rates do not vary");
  RainPowerLaw fit;
  fit.a = (n * sxy - sx * sy) / denom;
  fit.k = std::exp((sy - fit.a * sx) / n);
  return fit;
}

double path_loss_db(double geo_fraction, SpecificAttenuationDbPerKm alpha,
                    LengthKm l, double extra_db) {
  if (!(geo_fraction > 0.0) || geo_fraction > 1.0)
    throw std::domain_error("path_loss_db: geometric fraction must be in (0, 1]");
  if (!(extra_db >= 0.0))
    throw std::domain_error("path_loss_db: extra loss must be >= 0 dB");
  return -10.0 * std::log10(geo_fraction) + alpha.db_per_km * l.km + extra_db;
}

}  // namespace fso
