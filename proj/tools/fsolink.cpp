// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
//
// fsolink - FSO link engineering toolkit front end.
//
// Exit codes: 0 success, 2 usage error, 3 input/schema error, 4 domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fso/attenuation.hpp"
#include "fso/errors.hpp"
#include "fso/linkbudget.hpp"
#include "fso/physim.hpp"
#include "fso/scenarios.hpp"
#include "fso/units.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Names the flag responsible for a rejected value.
template <typename F>
auto flagged(const char* flag, F&& make) {
  try {
    return make();
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string(e.what()) + " (" + flag + ")");
  }
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file " + output_path);
  out << text;
}

std::ifstream open_input(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in)
    throw fso::SchemaError(std::string("cannot read ") + what + " file " + path);
  return in;
}

struct GeometryFlags {
  double d_tx = 0.0;
  double d_rx = 0.0;
  double divergence_mrad = 2.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--d-tx", d_tx, "Transmit aperture diameter [m]");
    cmd->add_option("--d-rx", d_rx, "Receive aperture diameter [m]");
    cmd->add_option("--divergence", divergence_mrad,
                    "Full-angle beam divergence [mrad]")
        ->capture_default_str();
  }

  // Apertures are opt-in: without them the beam is treated as fully
  // captured ("ideal" geometry).
  std::optional<fso::GeometryParams> resolve(bool geo_ideal) const {
    const bool have_apertures = d_tx > 0.0 || d_rx > 0.0;
    if (geo_ideal && have_apertures)
      throw UsageError("--geo ideal conflicts with --d-tx/--d-rx");
    if (!have_apertures) return std::nullopt;
    if (d_tx <= 0.0 || d_rx <= 0.0)
      throw UsageError("--d-tx and --d-rx must both be given (> 0)");
    return fso::GeometryParams(fso::ApertureM(d_tx), fso::ApertureM(d_rx),
                               fso::DivergenceMrad(divergence_mrad));
  }
};

fso::RainCurve load_rain_curve(const std::string& path) {
  if (path.empty()) return fso::RainCurve::milan_reference();
  auto in = open_input(path, "rain curve CSV");
  try {
    return fso::RainCurve::from_csv(in);
  } catch (const std::invalid_argument& e) {
    throw fso::SchemaError(e.what());
  }
}

std::string budget_text(const fso::LinkBudgetResult& r, const std::string& format) {
  if (format == "csv") {
    return "rx_power_dbm,margin_db,class\n" + fmt_num(r.received_power.dbm) +
           "," + fmt_num(r.margin_db) + "," + to_string(r.cls) + "\n";
  }
  json j;
  j["rx_power_dbm"] = r.received_power.dbm;
  j["margin_db"] = r.margin_db;
  j["class"] = to_string(r.cls);
  return j.dump(2) + "\n";
}

struct SweepRange {
  double from = 0.0, to = 0.0, step = 0.0;
};

SweepRange parse_range(const std::string& spec) {
  SweepRange r;
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageError("--range must look like a:b:step");
  try {
    r.from = std::stod(spec.substr(0, c1));
    r.to = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageError("--range values must be numeric");
  }
  if (!(r.step > 0.0)) throw UsageError("--range step must be > 0");
  if (r.to < r.from) throw UsageError("--range upper bound below lower bound");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FSO link engineering toolkit: weather attenuation, link "
               "budgets, and sample-level 10G OOK simulation"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format;
  std::uint32_t seed = 1;
  app.add_option("--output", output_path, "Write the result to a file instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "PRBS seed for simulations");

  // ---- atten ----
  auto* atten = app.add_subcommand("atten", "Specific attenuation from weather inputs");
  atten->require_subcommand(1);
  auto* atten_fog = atten->add_subcommand("fog", "Fog attenuation from visibility");
  double vis_km = 0.0, wavelength_nm = 1550.0;
  std::string fog_model_name = "kim";
  atten_fog->add_option("--visibility", vis_km, "Visibility [km]")->required();
  atten_fog->add_option("--wavelength", wavelength_nm, "Wavelength [nm]")
      ->capture_default_str();
  atten_fog->add_option("--model", fog_model_name,
                        "kim | kruse | naboulsi-advection | naboulsi-convection")
      ->capture_default_str();
  auto* atten_rain = atten->add_subcommand("rain", "Rain attenuation from rain rate");
  double rain_rate = 0.0;
  std::string rain_curve_path;
  atten_rain->add_option("--rate", rain_rate, "Rain rate [mm/hr]")->required();
  atten_rain->add_option("--curve", rain_curve_path,
                         "Rain curve CSV (rate_mm_hr,atten_db_km)");

  // ---- budget ----
  auto* budget = app.add_subcommand("budget", "Link budget for one link");
  double bd_distance = 0.0, bd_atten = 0.0, bd_tx = 5.0, bd_sens = -40.0,
         bd_extra = 0.0, bd_marginal = 0.0, bd_feasible = 25.0;
  std::string bd_geo_mode;
  GeometryFlags bd_geom;
  budget->add_option("--distance", bd_distance, "Link length [km]")->required();
  budget->add_option("--atten", bd_atten, "Specific attenuation [dB/km]")->required();
  budget->add_option("--tx-power", bd_tx, "Transmit power [dBm]")->capture_default_str();
  budget->add_option("--sensitivity", bd_sens, "Receiver sensitivity [dBm]")
      ->capture_default_str();
  budget->add_option("--extra", bd_extra, "Extra lumped loss [dB]")->capture_default_str();
  budget->add_option("--geo", bd_geo_mode, "'ideal' for full beam capture")
      ->check(CLI::IsMember({"ideal"}));
  bd_geom.add_to(budget);
  budget->add_option("--marginal-threshold", bd_marginal, "Marginal class floor [dB]")
      ->capture_default_str();
  budget->add_option("--feasible-threshold", bd_feasible, "Feasible class floor [dB]")
      ->capture_default_str();

  // ---- max-range ----
  auto* maxrange = app.add_subcommand("max-range", "Longest feasible link length");
  double mr_atten = 0.0, mr_tx = 5.0, mr_sens = -40.0, mr_extra = 0.0,
         mr_required = 0.0;
  std::string mr_geo_mode;
  GeometryFlags mr_geom;
  maxrange->add_option("--atten", mr_atten, "Specific attenuation [dB/km]")->required();
  maxrange->add_option("--tx-power", mr_tx, "Transmit power [dBm]")->capture_default_str();
  maxrange->add_option("--sensitivity", mr_sens, "Receiver sensitivity [dBm]")
      ->capture_default_str();
  maxrange->add_option("--extra", mr_extra, "Extra lumped loss [dB]")->capture_default_str();
  maxrange->add_option("--required-margin", mr_required, "Required margin [dB]")
      ->capture_default_str();
  maxrange->add_option("--geo", mr_geo_mode, "'ideal' for full beam capture")
      ->check(CLI::IsMember({"ideal"}));
  mr_geom.add_to(maxrange);

  // ---- simulate ----
  auto* simulate = app.add_subcommand(
      "simulate", "Sample-level OOK chain simulation (Q-factor, BER, eye)");
  fso::SimConfig sim_cfg;
  double sm_loss = 0.0, sm_atten = 0.0, sm_distance = 1.0, sm_extra = 0.0;
  std::string sm_emit_eye, sm_geo_mode;
  GeometryFlags sm_geom;
  simulate->add_option("--bit-rate", sim_cfg.bit_rate_hz, "Bit rate [bit/s]")
      ->capture_default_str();
  simulate->add_option("--bits", sim_cfg.sequence_length, "PRBS sequence length [bits]")
      ->capture_default_str();
  simulate->add_option("--spb", sim_cfg.samples_per_bit, "Samples per bit")
      ->capture_default_str();
  simulate->add_option("--laser-power", sim_cfg.laser_power.dbm, "Laser power [dBm]")
      ->capture_default_str();
  simulate->add_option("--wavelength", sim_cfg.wavelength.nm, "Wavelength [nm]")
      ->capture_default_str();
  simulate->add_option("--extinction", sim_cfg.mzm_extinction_db,
                       "Modulator extinction ratio [dB]")
      ->capture_default_str();
  simulate->add_option("--loss", sm_loss, "Total channel loss [dB]")
      ->capture_default_str();
  simulate->add_option("--atten", sm_atten,
                       "Specific attenuation [dB/km]; composes loss with --distance");
  simulate->add_option("--distance", sm_distance, "Link length [km]")->capture_default_str();
  simulate->add_option("--extra", sm_extra, "Extra lumped loss [dB]")->capture_default_str();
  simulate->add_option("--geo", sm_geo_mode, "'ideal' for full beam capture")
      ->check(CLI::IsMember({"ideal"}));
  sm_geom.add_to(simulate);
  simulate->add_option("--apd-gain", sim_cfg.apd.gain, "APD avalanche gain")
      ->capture_default_str();
  simulate->add_option("--responsivity", sim_cfg.apd.responsivity_a_per_w,
                       "APD responsivity [A/W]")
      ->capture_default_str();
  simulate->add_option("--ionization", sim_cfg.apd.ionization_ratio,
                       "APD ionization ratio")
      ->capture_default_str();
  simulate->add_option("--dark-current", sim_cfg.apd.dark_current_a,
                       "APD dark current [A]")
      ->capture_default_str();
  simulate->add_option("--temperature", sim_cfg.apd.temperature_k,
                       "Receiver temperature [K]")
      ->capture_default_str();
  simulate->add_option("--load", sim_cfg.apd.load_resistance_ohm,
                       "Receiver load resistance [ohm]")
      ->capture_default_str();
  auto* rx_cutoff_opt =
      simulate->add_option("--rx-cutoff", sim_cfg.rx_filter_cutoff_hz,
                           "Receive filter cutoff [Hz]; default 0.75 x bit rate");
  simulate->add_option("--rx-order", sim_cfg.rx_filter_order, "Receive filter order")
      ->capture_default_str();
  simulate->add_option("--prbs-order", sim_cfg.prbs_order, "PRBS register length")
      ->capture_default_str();
  simulate->add_option("--emit-eye", sm_emit_eye, "Write the eye diagram CSV here");

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "Parameter sweep as CSV");
  std::string sc_param, sc_range_spec, sc_fog_model = "kim", sc_curve_path, sc_geo_mode;
  double sc_atten = 0.0, sc_distance = 1.0, sc_tx = 5.0, sc_sens = -40.0,
         sc_extra = 0.0, sc_wavelength = 1550.0;
  bool sc_physim = false;
  GeometryFlags sc_geom;
  scan->add_option("--param", sc_param, "atten | distance | rain-rate | visibility")
      ->required()
      ->check(CLI::IsMember({"atten", "distance", "rain-rate", "visibility"}));
  scan->add_option("--range", sc_range_spec, "Sweep range a:b:step")->required();
  scan->add_option("--atten", sc_atten, "Fixed attenuation for distance sweeps [dB/km]")
      ->capture_default_str();
  scan->add_option("--distance", sc_distance, "Fixed link length [km]")
      ->capture_default_str();
  scan->add_option("--tx-power", sc_tx, "Transmit power [dBm]")->capture_default_str();
  scan->add_option("--sensitivity", sc_sens, "Receiver sensitivity [dBm]")
      ->capture_default_str();
  scan->add_option("--extra", sc_extra, "Extra lumped loss [dB]")->capture_default_str();
  scan->add_option("--wavelength", sc_wavelength, "Wavelength [nm]")->capture_default_str();
  scan->add_option("--model", sc_fog_model, "Fog model for visibility sweeps")
      ->capture_default_str();
  scan->add_option("--curve", sc_curve_path, "Rain curve CSV for rain-rate sweeps");
  scan->add_flag("--physim", sc_physim, "Also simulate Q/BER per point");
  scan->add_option("--geo", sc_geo_mode, "'ideal' for full beam capture")
      ->check(CLI::IsMember({"ideal"}));
  sc_geom.add_to(scan);

  // ---- scenario ----
  auto* scenario = app.add_subcommand(
      "scenario", "Evaluate a link topology against weather records");
  std::string sn_links = "builtin", sn_weather, sn_report_path, sn_avail_path,
              sn_fog_model = "kim", sn_curve_path, sn_geo_mode;
  double sn_tx = 5.0, sn_sens = -40.0, sn_extra = 0.0, sn_clear = 0.2,
         sn_threshold = 0.0, sn_wavelength = 1550.0;
  bool sn_physim = false;
  GeometryFlags sn_geom;
  scenario->add_option("--links", sn_links, "Links JSON file, or 'builtin'")
      ->capture_default_str();
  scenario->add_option("--weather", sn_weather, "Weather records CSV")->required();
  scenario->add_option("--report", sn_report_path, "Report CSV path (default stdout)");
  scenario->add_option("--availability", sn_avail_path, "Availability JSON path");
  scenario->add_option("--margin-threshold", sn_threshold,
                       "Availability margin threshold [dB]")
      ->capture_default_str();
  scenario->add_option("--tx-power", sn_tx, "Transmit power [dBm]")->capture_default_str();
  scenario->add_option("--sensitivity", sn_sens, "Receiver sensitivity [dBm]")
      ->capture_default_str();
  scenario->add_option("--extra", sn_extra, "Extra lumped loss [dB]")->capture_default_str();
  scenario->add_option("--clear-air", sn_clear, "Clear-air attenuation [dB/km]")
      ->capture_default_str();
  scenario->add_option("--wavelength", sn_wavelength, "Wavelength [nm]")
      ->capture_default_str();
  scenario->add_option("--fog-model", sn_fog_model, "Fog model for fog records")
      ->capture_default_str();
  scenario->add_option("--curve", sn_curve_path, "Rain curve CSV");
  scenario->add_flag("--physim", sn_physim, "Also simulate Q/BER per pair");
  scenario->add_option("--geo", sn_geo_mode, "'ideal' for full beam capture")
      ->check(CLI::IsMember({"ideal"}));
  sn_geom.add_to(scenario);

  // ---- links ----
  auto* links_cmd = app.add_subcommand("links", "Print the bundled link topology");

  // let the global --output/--format/--seed flags trail the subcommand
  for (CLI::App* sub : {atten, atten_fog, atten_rain, budget, maxrange, simulate,
                        scan, scenario, links_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*atten_fog) {
      const auto a = fso::fog_specific_attenuation(
          fso::VisibilityKm(vis_km), fso::WavelengthNm(wavelength_nm),
          fso::fog_model_from_string(fog_model_name));
      if (format == "json")
        emit(output_path, json{{"atten_db_km", a.db_per_km}}.dump(2) + "\n");
      else if (format == "csv")
        emit(output_path, "atten_db_km\n" + fmt_num(a.db_per_km) + "\n");
      else
        emit(output_path, fmt_num(a.db_per_km) + "\n");
    } else if (*atten_rain) {
      const auto curve = load_rain_curve(rain_curve_path);
      const auto a =
          fso::rain_specific_attenuation(fso::RainRateMmHr(rain_rate), curve);
      if (format == "json")
        emit(output_path, json{{"atten_db_km", a.db_per_km}}.dump(2) + "\n");
      else if (format == "csv")
        emit(output_path, "atten_db_km\n" + fmt_num(a.db_per_km) + "\n");
      else
        emit(output_path, fmt_num(a.db_per_km) + "\n");
    } else if (*budget) {
      fso::LinkBudgetInput in;
      in.tx_power = fso::PowerDbm(bd_tx);
      in.geometry = bd_geom.resolve(bd_geo_mode == "ideal");
      in.alpha = flagged("--atten",
                         [&] { return fso::SpecificAttenuationDbPerKm(bd_atten); });
      in.length = flagged("--distance", [&] { return fso::LengthKm(bd_distance); });
      in.extra_loss_db = bd_extra;
      in.sensitivity = fso::PowerDbm(bd_sens);
      const auto result =
          fso::evaluate_budget(in, {bd_marginal, bd_feasible});
      emit(output_path, budget_text(result, format));
    } else if (*maxrange) {
      fso::LinkBudgetInput in;
      in.tx_power = fso::PowerDbm(mr_tx);
      in.geometry = mr_geom.resolve(mr_geo_mode == "ideal");
      in.alpha = flagged("--atten",
                         [&] { return fso::SpecificAttenuationDbPerKm(mr_atten); });
      in.extra_loss_db = mr_extra;
      in.sensitivity = fso::PowerDbm(mr_sens);
      const auto range = fso::max_range(in, mr_required);
      if (format == "csv") {
        emit(output_path, std::string("feasible,max_range_km\n") +
                              (range ? "true," + fmt_num(range->km)
                                     : "false,") +
                              "\n");
      } else {
        json j;
        j["feasible"] = range.has_value();
        if (range) j["max_range_km"] = range->km;
        emit(output_path, j.dump(2) + "\n");
      }
    } else if (*simulate) {
      sim_cfg.seed = seed;
      if (rx_cutoff_opt->count() == 0)
        sim_cfg.rx_filter_cutoff_hz = 0.75 * sim_cfg.bit_rate_hz;
      if (simulate->count("--atten") > 0) {
        if (simulate->count("--loss") > 0)
          throw UsageError("--loss conflicts with --atten/--distance");
        const auto geometry = sm_geom.resolve(sm_geo_mode == "ideal");
        const double capture =
            geometry ? fso::geometric_capture_fraction(*geometry,
                                                       fso::LengthKm(sm_distance))
                     : 1.0;
        sim_cfg.channel_loss_db = fso::path_loss_db(
            capture,
            flagged("--atten",
                    [&] { return fso::SpecificAttenuationDbPerKm(sm_atten); }),
            flagged("--distance", [&] { return fso::LengthKm(sm_distance); }),
            sm_extra);
      } else {
        sim_cfg.channel_loss_db = sm_loss;
      }
      const auto result = fso::simulate_link(sim_cfg);
      if (!sm_emit_eye.empty()) {
        std::ofstream eye_out(sm_emit_eye);
        if (!eye_out)
          throw std::runtime_error("cannot open eye output file " + sm_emit_eye);
        fso::write_eye_csv(result.eye, eye_out);
      }
      if (format == "csv") {
        const auto& m = result.metrics;
        emit(output_path,
             "mu1,mu0,sigma1,sigma0,q_factor,ber,decision_phase\n" +
                 fmt_num(m.mu1_a) + "," + fmt_num(m.mu0_a) + "," +
                 fmt_num(m.sigma1_a) + "," + fmt_num(m.sigma0_a) + "," +
                 fmt_num(m.q_factor) + "," + fmt_num(m.ber) + "," +
                 fmt_num(m.decision_phase) + "\n");
      } else {
        emit(output_path, fso::eye_metrics_json(result.metrics) + "\n");
      }
    } else if (*scan) {
      const SweepRange range = parse_range(sc_range_spec);
      const auto geometry = sc_geom.resolve(sc_geo_mode == "ideal");
      const auto curve = load_rain_curve(sc_curve_path);
      const auto fog = fso::fog_model_from_string(sc_fog_model);
      std::ostringstream os;
      os << "param,value,alpha_db_km,rx_power_dbm,margin_db,class,q_factor,ber\n";
      for (double v = range.from; v <= range.to + 1e-12 * std::max(1.0, range.to);
           v += range.step) {
        double alpha_db = sc_atten;
        double distance = sc_distance;
        if (sc_param == "atten") {
          alpha_db = v;
        } else if (sc_param == "distance") {
          distance = v;
        } else if (sc_param == "rain-rate") {
          alpha_db =
              fso::rain_specific_attenuation(fso::RainRateMmHr(v), curve).db_per_km;
        } else {  // visibility
          alpha_db = fso::fog_specific_attenuation(
                         fso::VisibilityKm(v), fso::WavelengthNm(sc_wavelength), fog)
                         .db_per_km;
        }
        fso::LinkBudgetInput in;
        in.tx_power = fso::PowerDbm(sc_tx);
        in.geometry = geometry;
        in.alpha = fso::SpecificAttenuationDbPerKm(alpha_db);
        in.length = fso::LengthKm(distance);
        in.extra_loss_db = sc_extra;
        in.sensitivity = fso::PowerDbm(sc_sens);
        const auto budget_result = fso::evaluate_budget(in);
        os << sc_param << ',' << fmt_num(v) << ',' << fmt_num(alpha_db) << ','
           << fmt_num(budget_result.received_power.dbm) << ','
           << fmt_num(budget_result.margin_db) << ','
           << to_string(budget_result.cls) << ',';
        if (sc_physim) {
          fso::SimConfig cfg;
          cfg.seed = seed;
          cfg.laser_power = fso::PowerDbm(sc_tx);
          const double capture =
              geometry ? fso::geometric_capture_fraction(*geometry,
                                                         fso::LengthKm(distance))
                       : 1.0;
          cfg.channel_loss_db =
              fso::path_loss_db(capture, fso::SpecificAttenuationDbPerKm(alpha_db),
                                fso::LengthKm(distance), sc_extra);
          const auto sim = fso::simulate_link(cfg);
          os << fmt_num(sim.metrics.q_factor) << ',' << fmt_num(sim.metrics.ber);
        } else {
          os << ',';
        }
        os << '\n';
      }
      emit(output_path, os.str());
    } else if (*scenario) {
      std::vector<fso::LinkDefinition> links;
      if (sn_links == "builtin") {
        links = fso::builtin_topology();
      } else {
        auto in = open_input(sn_links, "links JSON");
        links = fso::links_from_json(in);
      }
      auto weather_in = open_input(sn_weather, "weather CSV");
      const auto records = fso::weather_from_csv(weather_in);

      fso::ScenarioParams params;
      params.tx_power = fso::PowerDbm(sn_tx);
      params.sensitivity = fso::PowerDbm(sn_sens);
      params.geometry = sn_geom.resolve(sn_geo_mode == "ideal");
      params.extra_loss_db = sn_extra;
      params.wavelength = fso::WavelengthNm(sn_wavelength);
      params.fog_model = fso::fog_model_from_string(sn_fog_model);
      params.rain_curve = load_rain_curve(sn_curve_path);
      params.clear_air_db_per_km = fso::SpecificAttenuationDbPerKm(sn_clear);
      params.run_physim = sn_physim;
      params.sim.seed = seed;

      const auto report = fso::evaluate_matrix(links, records, params);
      std::ostringstream report_os;
      fso::report_to_csv(report, report_os);
      emit(sn_report_path.empty() ? output_path : sn_report_path, report_os.str());

      if (!sn_avail_path.empty()) {
        const auto avail = fso::availability(report, sn_threshold);
        json j = json::object();
        for (const auto& [id, frac] : avail) j[std::to_string(id)] = frac;
        emit(sn_avail_path, j.dump(2) + "\n");
      }
    } else if (*links_cmd) {
      std::ostringstream os;
      fso::links_to_json(fso::builtin_topology(), os);
      emit(output_path, os.str());
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const fso::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
