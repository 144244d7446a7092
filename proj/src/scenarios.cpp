// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/scenarios.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fso/errors.hpp"
#include "parse_util.hpp"

namespace fso {

WeatherCondition weather_condition_from_string(std::string_view s) {
  if (s == "Clear" || s == "clear") return WeatherCondition::Clear;
  if (s == "Rain" || s == "rain") return WeatherCondition::Rain;
  if (s == "Fog" || s == "fog") return WeatherCondition::Fog;
  throw SchemaError("unknown weather condition '" + std::string(s) +
                    "' (expected Clear, Rain or Fog)");
}

std::string to_string(WeatherCondition c) {
  switch (c) {
    case WeatherCondition::Clear: return "Clear";
    case WeatherCondition::Rain: return "Rain";
    case WeatherCondition::Fog: return "Fog";
  }
  throw std::logic_error("unreachable weather condition");
}

std::vector<LinkDefinition> builtin_topology() {
  return {
      {1, "Cisco Systems", "KPMG Taseer Hadi & Co", LengthKm(0.047)},
      {2, "Cisco Systems", "Shaheed-e-Millat Secretariat", LengthKm(0.132)},
      {3, "Shaheed-e-Millat Secretariat", "OGDCL", LengthKm(0.153)},
      {4, "OGDCL", "United Bank Limited", LengthKm(0.068)},
      {5, "OGDCL", "Green Trust Tower", LengthKm(0.103)},
      {6, "Green Trust Tower", "HR Consultants", LengthKm(0.522)},
      {7, "Green Trust Tower", "NIC building", LengthKm(1.452)},
      {8, "NIC building", "Huawei technologies Pakistan", LengthKm(0.191)},
      {9, "NIC building", "State Life Tower", LengthKm(0.064)},
      {10, "Huawei technologies Pakistan", "Ufone Tower", LengthKm(0.659)},
      {11, "Ufone Tower", "Islamabad Stock Exchange", LengthKm(0.050)},
      {12, "Ufone Tower", "Centaurs", LengthKm(0.851)},
      {13, "Centaurs", "ZTBL", LengthKm(1.728)},
  };
}

std::vector<LinkDefinition> links_from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("links JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("links JSON: top level must be an array");

  std::vector<LinkDefinition> links;
  std::vector<int> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& o = doc[i];
    const std::string where = "links JSON: entry " + std::to_string(i);
    if (!o.is_object()) throw SchemaError(where + " is not an object");
    for (const char* key : {"id", "tx_building", "rx_building", "distance_km"})
      if (!o.contains(key)) throw SchemaError(where + " is missing '" + key + "'");
    if (!o["id"].is_number_integer())
      throw SchemaError(where + ": id must be an integer");
    if (!o["tx_building"].is_string() || !o["rx_building"].is_string())
      throw SchemaError(where + ": building names must be strings");
    if (!o["distance_km"].is_number())
      throw SchemaError(where + ": distance_km must be a number");
    LinkDefinition l;
    l.id = o["id"].get<int>();
    l.tx_building = o["tx_building"].get<std::string>();
    l.rx_building = o["rx_building"].get<std::string>();
    const double d = o["distance_km"].get<double>();
    if (!(d > 0.0)) throw SchemaError(where + ": distance_km must be > 0");
    l.distance = LengthKm(d);
    if (std::find(seen.begin(), seen.end(), l.id) != seen.end())
      throw SchemaError(where + ": duplicate link id " + std::to_string(l.id));
    seen.push_back(l.id);
    links.push_back(std::move(l));
  }
  return links;
}

void links_to_json(const std::vector<LinkDefinition>& links, std::ostream& os) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : links) {
    arr.push_back({{"id", l.id},
                   {"tx_building", l.tx_building},
                   {"rx_building", l.rx_building},
                   {"distance_km", l.distance.km}});
  }
  os << arr.dump(2) << '\n';
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, const std::string& where) {
  const auto v = detail::parse_double(cell);
  if (!v) throw SchemaError(where + ": '" + cell + "' is not a number");
  return *v;
}

}  // namespace

std::vector<WeatherRecord> weather_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("weather CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string expected =
      "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km";
  if (line != expected)
    throw SchemaError("weather CSV: expected header '" + expected + "', got '" +
                      line + "'");

  std::vector<WeatherRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_row(line);
    const std::string where = "weather CSV row " + std::to_string(row);
    if (cells.size() != 5)
      throw SchemaError(where + ": expected 5 columns, got " +
                        std::to_string(cells.size()));
    WeatherRecord r;
    r.label = cells[0];
    r.condition = weather_condition_from_string(cells[1]);
    try {
      if (!cells[2].empty())
        r.rain_rate = RainRateMmHr(parse_cell(cells[2], where + " rain_rate"));
      if (!cells[3].empty())
        r.visibility = VisibilityKm(parse_cell(cells[3], where + " visibility"));
      if (!cells[4].empty())
        r.override_atten = SpecificAttenuationDbPerKm(
            parse_cell(cells[4], where + " override_atten"));
    } catch (const std::domain_error& e) {
      throw SchemaError(where + ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

SpecificAttenuationDbPerKm record_to_attenuation(
    const WeatherRecord& r, WavelengthNm lambda, FogModel fog_model,
    const RainCurve& rain_curve, SpecificAttenuationDbPerKm clear_air) {
  if (r.override_atten) return *r.override_atten;
  switch (r.condition) {
    case WeatherCondition::Rain:
      if (!r.rain_rate)
        throw std::invalid_argument("weather record '" + r.label +
                                    "': Rain needs rain_rate or override_atten");
      return rain_specific_attenuation(*r.rain_rate, rain_curve);
    case WeatherCondition::Fog:
      if (!r.visibility)
        throw std::invalid_argument("weather record '" + r.label +
                                    "': Fog needs visibility or override_atten");
      return fog_specific_attenuation(*r.visibility, lambda, fog_model);
    case WeatherCondition::Clear:
      return clear_air;
  }
  throw std::logic_error("unreachable weather condition");
}

ScenarioReport evaluate_matrix(const std::vector<LinkDefinition>& links,
                               const std::vector<WeatherRecord>& records,
                               const ScenarioParams& params) {
  if (links.empty()) throw std::invalid_argument("evaluate_matrix: no links");
  if (records.empty())
    throw std::invalid_argument("evaluate_matrix: no weather records");

  ScenarioReport report;
  report.rows.reserve(links.size() * records.size());
  for (const auto& link : links) {
    for (const auto& rec : records) {
      ScenarioRow row;
      row.link_id = link.id;
      row.weather_label = rec.label;
      try {
        const SpecificAttenuationDbPerKm alpha =
            record_to_attenuation(rec, params.wavelength, params.fog_model,
                                  params.rain_curve, params.clear_air_db_per_km);
        row.alpha_db_km = alpha.db_per_km;

        LinkBudgetInput in;
        in.tx_power = params.tx_power;
        in.geometry = params.geometry;
        in.alpha = alpha;
        in.length = link.distance;
        in.extra_loss_db = params.extra_loss_db;
        in.sensitivity = params.sensitivity;
        const LinkBudgetResult budget = evaluate_budget(in, params.thresholds);
        row.rx_power_dbm = budget.received_power.dbm;
        row.margin_db = budget.margin_db;
        row.cls = budget.cls;

        if (params.run_physim) {
          SimConfig cfg = params.sim;
          const double capture =
              params.geometry
                  ? geometric_capture_fraction(*params.geometry, link.distance)
                  : 1.0;
          cfg.channel_loss_db = path_loss_db(capture, alpha, link.distance,
                                             params.extra_loss_db);
          cfg.laser_power = params.tx_power;
          const SimResult sim = simulate_link(cfg);
          row.q_factor = sim.metrics.q_factor;
          row.ber = sim.metrics.ber;
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void report_to_csv(const ScenarioReport& report, std::ostream& os) {
  os << "link_id,weather_label,alpha_db_km,rx_power_dbm,margin_db,class,"
        "q_factor,ber,error\n";
  char buf[32];
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  for (const auto& row : report.rows) {
    os << row.link_id << ',' << row.weather_label << ',';
    if (row.error.empty()) {
      os << num(row.alpha_db_km) << ',' << num(row.rx_power_dbm) << ','
         << num(row.margin_db) << ',' << to_string(row.cls) << ',';
      if (row.q_factor) os << num(*row.q_factor);
      os << ',';
      if (row.ber) os << num(*row.ber);
      os << ',';
    } else {
      os << ",,,,,,";
    }
    // keep the error cell comma-free so the CSV stays rectangular
    std::string err = row.error;
    std::replace(err.begin(), err.end(), ',', ';');
    os << err << '\n';
  }
}

std::map<int, double> availability(const ScenarioReport& report,
                                   double margin_threshold_db) {
  if (report.rows.empty())
    throw std::invalid_argument("availability: empty report");
  std::map<int, std::pair<std::size_t, std::size_t>> tally;  // id -> {pass, total}
  for (const auto& row : report.rows) {
    auto& t = tally[row.link_id];
    t.second++;
    if (row.error.empty() && row.margin_db >= margin_threshold_db) t.first++;
  }
  std::map<int, double> out;
  for (const auto& [id, t] : tally)
    out[id] = static_cast<double>(t.first) / static_cast<double>(t.second);
  return out;
}

}  // namespace fso
