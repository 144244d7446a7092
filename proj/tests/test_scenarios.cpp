// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <sstream>

#include <doctest.h>

#include "fso/errors.hpp"
#include "fso/scenarios.hpp"

using namespace fso;

namespace {

const char* const kSampleWeatherCsv =
    "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km\n"
    "jul,Rain,100,,\n"
    "dec,Fog,,0.2,\n"
    "apr,Clear,,,\n"
    "worst-fog,Fog,,,100\n";

WeatherRecord fog_override_100() {
  WeatherRecord r;
  r.label = "fog100";
  r.condition = WeatherCondition::Fog;
  r.override_atten = SpecificAttenuationDbPerKm(100.0);
  return r;
}

}  // namespace

TEST_CASE("builtin topology matches the reference table") {
  const auto links = builtin_topology();
  REQUIRE(links.size() == 13);
  CHECK(links[0].id == 1);
  CHECK(links[0].tx_building == "Cisco Systems");
  CHECK(links[0].rx_building == "KPMG Taseer Hadi & Co");
  CHECK(links[0].distance.km == 0.047);
  CHECK(links[6].id == 7);
  CHECK(links[6].tx_building == "Green Trust Tower");
  CHECK(links[6].rx_building == "NIC building");
  CHECK(links[6].distance.km == 1.452);
  CHECK(links[12].id == 13);
  CHECK(links[12].tx_building == "Centaurs");
  CHECK(links[12].rx_building == "ZTBL");
  CHECK(links[12].distance.km == 1.728);

  // ids unique
  for (std::size_t i = 0; i < links.size(); ++i)
    for (std::size_t j = i + 1; j < links.size(); ++j)
      CHECK(links[i].id != links[j].id);
}

TEST_CASE("links JSON round trip") {
  std::ostringstream os;
  links_to_json(builtin_topology(), os);
  std::istringstream is(os.str());
  const auto parsed = links_from_json(is);
  REQUIRE(parsed.size() == 13);
  CHECK(parsed[12].rx_building == "ZTBL");
  CHECK(parsed[12].distance.km == 1.728);
}

TEST_CASE("links JSON schema errors") {
  std::istringstream not_array("{\"id\": 1}");
  CHECK_THROWS_AS(links_from_json(not_array), SchemaError);
  std::istringstream missing(R"([{"id":1,"tx_building":"a","rx_building":"b"}])");
  CHECK_THROWS_AS(links_from_json(missing), SchemaError);
  std::istringstream dup(
      R"([{"id":1,"tx_building":"a","rx_building":"b","distance_km":1.0},
          {"id":1,"tx_building":"c","rx_building":"d","distance_km":2.0}])");
  CHECK_THROWS_AS(links_from_json(dup), SchemaError);
  std::istringstream bad_dist(
      R"([{"id":1,"tx_building":"a","rx_building":"b","distance_km":0}])");
  CHECK_THROWS_AS(links_from_json(bad_dist), SchemaError);
  std::istringstream not_json("hello");
  CHECK_THROWS_AS(links_from_json(not_json), SchemaError);
}

TEST_CASE("weather CSV parsing") {
  std::istringstream in(kSampleWeatherCsv);
  const auto records = weather_from_csv(in);
  REQUIRE(records.size() == 4);
  CHECK(records[0].label == "jul");
  CHECK(records[0].condition == WeatherCondition::Rain);
  REQUIRE(records[0].rain_rate.has_value());
  CHECK(records[0].rain_rate->mm_per_hr == 100.0);
  CHECK_FALSE(records[0].visibility.has_value());
  CHECK(records[1].condition == WeatherCondition::Fog);
  CHECK(records[1].visibility->km == 0.2);
  CHECK(records[2].condition == WeatherCondition::Clear);
  CHECK(records[3].override_atten->db_per_km == 100.0);
}

TEST_CASE("weather CSV schema errors name the row") {
  std::istringstream bad_header("a,b,c\n");
  CHECK_THROWS_AS(weather_from_csv(bad_header), SchemaError);

  std::istringstream bad_cond(
      "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km\n"
      "jan,Hail,,,\n");
  CHECK_THROWS_AS(weather_from_csv(bad_cond), SchemaError);

  std::istringstream short_row(
      "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km\n"
      "jan,Rain,5\n");
  try {
    weather_from_csv(short_row);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  std::istringstream bad_number(
      "label,condition,rain_rate_mm_hr,visibility_km,override_atten_db_km\n"
      "jan,Rain,wet,,\n");
  CHECK_THROWS_AS(weather_from_csv(bad_number), SchemaError);
}

TEST_CASE("record to attenuation") {
  const auto curve = RainCurve::milan_reference();
  const SpecificAttenuationDbPerKm clear_air(0.2);
  const WavelengthNm lambda(1550.0);

  WeatherRecord rain;
  rain.condition = WeatherCondition::Rain;
  rain.rain_rate = RainRateMmHr(25.0);
  CHECK(record_to_attenuation(rain, lambda, FogModel::Kim, curve, clear_air)
            .db_per_km == 7.3);

  WeatherRecord fog = fog_override_100();
  CHECK(record_to_attenuation(fog, lambda, FogModel::Kim, curve, clear_air)
            .db_per_km == 100.0);

  WeatherRecord fog_vis;
  fog_vis.condition = WeatherCondition::Fog;
  fog_vis.visibility = VisibilityKm(0.2);
  CHECK(record_to_attenuation(fog_vis, lambda, FogModel::Kim, curve, clear_air)
            .db_per_km == doctest::Approx(84.904571212085732).epsilon(1e-9));

  WeatherRecord clear;
  clear.condition = WeatherCondition::Clear;
  CHECK(record_to_attenuation(clear, lambda, FogModel::Kim, curve, clear_air)
            .db_per_km == 0.2);

  WeatherRecord bad_rain;
  bad_rain.label = "jun";
  bad_rain.condition = WeatherCondition::Rain;
  CHECK_THROWS_AS(
      record_to_attenuation(bad_rain, lambda, FogModel::Kim, curve, clear_air),
      std::invalid_argument);

  WeatherRecord bad_fog;
  bad_fog.condition = WeatherCondition::Fog;
  CHECK_THROWS_AS(
      record_to_attenuation(bad_fog, lambda, FogModel::Kim, curve, clear_air),
      std::invalid_argument);
}

TEST_CASE("evaluate_matrix over the dense-fog scenario") {
  const auto links = builtin_topology();
  const std::vector<WeatherRecord> records{fog_override_100()};
  ScenarioParams params;
  const auto report = evaluate_matrix(links, records, params);
  REQUIRE(report.rows.size() == 13);

  // shorter links never score worse under identical weather
  std::vector<std::pair<double, double>> by_distance;  // (distance, margin)
  for (std::size_t i = 0; i < links.size(); ++i) {
    CHECK(report.rows[i].error.empty());
    CHECK(report.rows[i].alpha_db_km == 100.0);
    by_distance.emplace_back(links[i].distance.km, report.rows[i].margin_db);
  }
  std::sort(by_distance.begin(), by_distance.end());
  for (std::size_t i = 1; i < by_distance.size(); ++i)
    CHECK(by_distance[i].second <= by_distance[i - 1].second);

  // link 1 (47 m) survives dense fog, link 13 (1.728 km) cannot
  CHECK(report.rows[0].link_id == 1);
  CHECK(report.rows[0].margin_db == doctest::Approx(45.0 - 4.7).epsilon(1e-9));
  CHECK(report.rows[0].cls == LinkClass::Feasible);
  CHECK(report.rows[12].link_id == 13);
  CHECK(report.rows[12].margin_db ==
        doctest::Approx(45.0 - 172.8).epsilon(1e-9));
  CHECK(report.rows[12].cls == LinkClass::Infeasible);
}

TEST_CASE("evaluate_matrix single clear row against a hand budget") {
  const std::vector<LinkDefinition> links{
      {1, "A", "B", LengthKm(0.047)},
  };
  WeatherRecord clear;
  clear.label = "apr";
  clear.condition = WeatherCondition::Clear;
  ScenarioParams params;
  const auto report = evaluate_matrix(links, {clear}, params);
  REQUIRE(report.rows.size() == 1);
  // 5 dBm - 0.2 dB/km * 0.047 km + 40 dBm sensitivity
  CHECK(std::abs(report.rows[0].margin_db - 44.9906) <= 0.01);
  CHECK(report.rows[0].cls == LinkClass::Feasible);
}

TEST_CASE("evaluate_matrix input validation") {
  ScenarioParams params;
  CHECK_THROWS_AS(evaluate_matrix({}, {fog_override_100()}, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_matrix(builtin_topology(), {}, params),
                  std::invalid_argument);
}

TEST_CASE("per-row errors do not abort the batch") {
  const std::vector<LinkDefinition> links{{1, "A", "B", LengthKm(1.0)}};
  WeatherRecord bad;
  bad.label = "broken";
  bad.condition = WeatherCondition::Rain;  // no rate, no override
  WeatherRecord good;
  good.label = "ok";
  good.condition = WeatherCondition::Clear;
  ScenarioParams params;
  const auto report = evaluate_matrix(links, {bad, good}, params);
  REQUIRE(report.rows.size() == 2);
  CHECK_FALSE(report.rows[0].error.empty());
  CHECK(report.rows[1].error.empty());

  std::ostringstream os;
  report_to_csv(report, os);
  const std::string csv = os.str();
  CHECK(csv.rfind("link_id,weather_label,alpha_db_km,rx_power_dbm,margin_db,"
                  "class,q_factor,ber,error\n",
                  0) == 0);
  CHECK(csv.find("broken") != std::string::npos);
}

TEST_CASE("evaluate_matrix reruns are byte-identical") {
  const auto links = builtin_topology();
  std::istringstream in1(kSampleWeatherCsv);
  const auto records = weather_from_csv(in1);
  ScenarioParams params;
  params.run_physim = true;

  std::ostringstream a, b;
  report_to_csv(evaluate_matrix(links, records, params), a);
  report_to_csv(evaluate_matrix(links, records, params), b);
  const std::string first = a.str(), second = b.str();
  CHECK(first == second);
  CHECK(first.find("link_id") == 0);
  // 13 links x 4 records + header
  CHECK(std::count(first.begin(), first.end(), '\n') == 53);
}

TEST_CASE("physim columns are populated when requested") {
  const std::vector<LinkDefinition> links{{1, "A", "B", LengthKm(1.0)}};
  WeatherRecord rain;
  rain.label = "jul";
  rain.condition = WeatherCondition::Rain;
  rain.rain_rate = RainRateMmHr(150.0);
  ScenarioParams params;
  params.run_physim = true;
  const auto report = evaluate_matrix(links, {rain}, params);
  REQUIRE(report.rows.size() == 1);
  REQUIRE(report.rows[0].q_factor.has_value());
  REQUIRE(report.rows[0].ber.has_value());
  // 30.38 dB of rain over 1 km is the reference rain scenario
  CHECK(*report.rows[0].q_factor > 12.5);
  CHECK(*report.rows[0].q_factor < 50.0);
}

TEST_CASE("availability") {
  const std::vector<LinkDefinition> links{{1, "A", "B", LengthKm(1.0)}};
  std::vector<WeatherRecord> records;
  for (const double alpha : {1.0, 10.0, 44.0, 46.0}) {
    WeatherRecord r;
    r.label = "a" + std::to_string(static_cast<int>(alpha));
    r.condition = WeatherCondition::Fog;
    r.override_atten = SpecificAttenuationDbPerKm(alpha);
    records.push_back(r);
  }
  ScenarioParams params;  // 45 dB budget -> margins 44, 35, 1, -1
  const auto report = evaluate_matrix(links, records, params);

  CHECK(availability(report, -1000.0).at(1) == 1.0);
  CHECK(availability(report, 0.0).at(1) == 0.75);
  CHECK(availability(report, 1e18).at(1) == 0.0);

  double prev = 1.0;
  for (double thr = -10.0; thr <= 50.0; thr += 5.0) {
    const double frac = availability(report, thr).at(1);
    CHECK(frac <= prev);
    prev = frac;
  }

  CHECK_THROWS_AS(availability(ScenarioReport{}, 0.0), std::invalid_argument);
}
