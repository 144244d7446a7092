// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

// Unit-tagged scalar types shared by every module. Each wrapper is a plain
// double with the unit in the field name; constructors reject values that
// violate the unit's sign convention. All arithmetic happens in double.

namespace fso {

namespace detail {

inline double require_non_negative(double v, const char* what) {
  if (!(v >= 0.0))
    throw std::domain_error(std::string(what) + " must be >= 0, got " +
                            std::to_string(v));
  return v;
}

inline double require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(what) + " must be > 0, got " +
                            std::to_string(v));
  return v;
}

}  // namespace detail

/// Optical or electrical power on the dBm scale. Any finite value is legal.
struct PowerDbm {
  double dbm = 0.0;
  PowerDbm() = default;
  explicit PowerDbm(double v) : dbm(v) {}
};

/// Linear power in watts; never negative.
struct PowerWatts {
  double watts = 0.0;
  PowerWatts() = default;
  explicit PowerWatts(double v)
      : watts(detail::require_non_negative(v, "PowerWatts")) {}
};

struct LengthKm {
  double km = 0.0;
  LengthKm() = default;
  explicit LengthKm(double v) : km(detail::require_non_negative(v, "LengthKm")) {}
};

/// Loss per unit distance in dB/km.
struct SpecificAttenuationDbPerKm {
  double db_per_km = 0.0;
  SpecificAttenuationDbPerKm() = default;
  explicit SpecificAttenuationDbPerKm(double v)
      : db_per_km(detail::require_non_negative(v, "SpecificAttenuationDbPerKm")) {}
};

/// Beer's-law extinction coefficient in 1/km.
struct ExtinctionPerKm {
  double per_km = 0.0;
  ExtinctionPerKm() = default;
  explicit ExtinctionPerKm(double v)
      : per_km(detail::require_non_negative(v, "ExtinctionPerKm")) {}
};

/// Meteorological visibility (2% contrast distance). Always a divisor, so > 0.
struct VisibilityKm {
  double km = 1.0;
  VisibilityKm() = default;
  explicit VisibilityKm(double v) : km(detail::require_positive(v, "VisibilityKm")) {}
};

struct RainRateMmHr {
  double mm_per_hr = 0.0;
  RainRateMmHr() = default;
  explicit RainRateMmHr(double v)
      : mm_per_hr(detail::require_non_negative(v, "RainRateMmHr")) {}
};

struct WavelengthNm {
  double nm = 1550.0;
  WavelengthNm() = default;
  explicit WavelengthNm(double v) : nm(detail::require_positive(v, "WavelengthNm")) {}
};

/// Full-angle beam divergence in milliradians.
struct DivergenceMrad {
  double mrad = 0.0;
  DivergenceMrad() = default;
  explicit DivergenceMrad(double v)
      : mrad(detail::require_non_negative(v, "DivergenceMrad")) {}
};

/// Aperture diameter in meters.
struct ApertureM {
  double m = 0.0;
  ApertureM() = default;
  explicit ApertureM(double v) : m(detail::require_non_negative(v, "ApertureM")) {}
};

/// dB/km per 1/km, i.e. 10/ln(10), kept at full precision so every module
/// converts with exactly the same constant.
inline constexpr double kDbPerInverseKm = 10.0 / std::numbers::ln10;

inline PowerWatts dbm_to_watts(PowerDbm p) {
  return PowerWatts(1e-3 * std::pow(10.0, p.dbm / 10.0));
}

inline PowerDbm watts_to_dbm(PowerWatts p) {
  if (!(p.watts > 0.0))
    throw std::domain_error("watts_to_dbm: power must be > 0 W");
  return PowerDbm(10.0 * std::log10(p.watts / 1e-3));
}

inline SpecificAttenuationDbPerKm extinction_to_db(ExtinctionPerKm e) {
  return SpecificAttenuationDbPerKm(e.per_km * kDbPerInverseKm);
}

}  // namespace fso
