// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fso/attenuation.hpp"
#include "fso/linkbudget.hpp"
#include "fso/physim.hpp"
#include "fso/units.hpp"

// Batch evaluation of a link topology against weather records: the bundled
// Islamabad Blue Area topology, file ingestion, per-pair budget (and
// optionally physical-layer) evaluation, and availability summaries.

namespace fso {

struct LinkDefinition {
  int id = 0;
  std::string tx_building;
  std::string rx_building;
  LengthKm distance;
};

enum class WeatherCondition { Clear, Rain, Fog };

WeatherCondition weather_condition_from_string(std::string_view s);
std::string to_string(WeatherCondition c);

/// A dated (or labeled) weather observation. Rain needs a rate, fog needs a
/// visibility, unless an explicit attenuation override is present.
struct WeatherRecord {
  std::string label;
  WeatherCondition condition = WeatherCondition::Clear;
  std::optional<RainRateMmHr> rain_rate;
  std::optional<VisibilityKm> visibility;
  std::optional<SpecificAttenuationDbPerKm> override_atten;
};

/// Everything evaluate_matrix needs besides the links and records. The
/// clear-air constant is a design default, not a measured value.
struct ScenarioParams {
  PowerDbm tx_power{5.0};
  PowerDbm sensitivity{-40.0};
  std::optional<GeometryParams> geometry;  // absent = full beam capture
  double extra_loss_db = 0.0;
  ClassifyThresholds thresholds{};
  WavelengthNm wavelength{1550.0};
  FogModel fog_model = FogModel::Kim;
  RainCurve rain_curve = RainCurve::milan_reference();
  SpecificAttenuationDbPerKm clear_air_db_per_km{0.2};
  bool run_physim = false;
  SimConfig sim;  // channel_loss_db is filled in per row
};

struct ScenarioRow {
  int link_id = 0;
  std::string weather_label;
  double alpha_db_km = 0.0;
  double rx_power_dbm = 0.0;
  double margin_db = 0.0;
  LinkClass cls = LinkClass::Infeasible;
  std::optional<double> q_factor;
  std::optional<double> ber;
  std::string error;  // empty on success
};

struct ScenarioReport {
  std::vector<ScenarioRow> rows;
};

/// The 13 proposed Blue Area links, distances in km.
std::vector<LinkDefinition> builtin_topology();

/// JSON array of {id, tx_building, rx_building, distance_km}.
std::vector<LinkDefinition> links_from_json(std::istream& in);
void links_to_json(const std::vector<LinkDefinition>& links, std::ostream& os);

/// CSV with header
/// `label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km`;
/// unset optionals are empty cells.
std::vector<WeatherRecord> weather_from_csv(std::istream& in);

/// Attenuation for one record: the override wins; otherwise rain and fog go
/// through their models and clear air uses the configured constant.
SpecificAttenuationDbPerKm record_to_attenuation(
    const WeatherRecord& r, WavelengthNm lambda, FogModel fog_model,
    const RainCurve& rain_curve, SpecificAttenuationDbPerKm clear_air);

/// Evaluates every (link, record) pair in deterministic order (link major).
/// Row-level failures are captured in the error column instead of aborting
/// the batch.
ScenarioReport evaluate_matrix(const std::vector<LinkDefinition>& links,
                               const std::vector<WeatherRecord>& records,
                               const ScenarioParams& params);

/// CSV with header
/// `link_id,weather_label,alpha_db_km,rx_power_dbm,margin_db,class,q_factor,ber,error`.
void report_to_csv(const ScenarioReport& report, std::ostream& os);

/// Per link, the fraction of weather records whose margin meets the
/// threshold. Rows with errors count as unavailable.
std::map<int, double> availability(const ScenarioReport& report,
                                   double margin_threshold_db);

}  // namespace fso
