// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/linkbudget.hpp"

#include <cmath>
#include <stdexcept>

namespace fso {

std::string to_string(LinkClass c) {
  switch (c) {
    case LinkClass::Feasible: return "Feasible";
    case LinkClass::Marginal: return "Marginal";
    case LinkClass::Infeasible: return "Infeasible";
  }
  throw std::logic_error("unreachable link class");
}

namespace {

void validate(const LinkBudgetInput& in) {
  if (in.sensitivity.dbm < -60.0 || in.sensitivity.dbm > 0.0)
    throw std::domain_error("sensitivity outside the sane [-60, 0] dBm window");
  if (!(in.extra_loss_db >= 0.0))
    throw std::domain_error("extra_loss_db must be >= 0");
}

double capture_fraction(const LinkBudgetInput& in, LengthKm l) {
  return in.geometry ? geometric_capture_fraction(*in.geometry, l) : 1.0;
}

}  // namespace

PowerDbm received_power(const LinkBudgetInput& in) {
  validate(in);
  const double loss = path_loss_db(capture_fraction(in, in.length), in.alpha,
                                   in.length, in.extra_loss_db);
  return PowerDbm(in.tx_power.dbm - loss);
}

double link_margin(PowerDbm p_r, PowerDbm s) { return p_r.dbm - s.dbm; }

LinkClass classify(double margin_db, ClassifyThresholds t) {
  if (t.marginal_db > t.feasible_db)
    throw std::invalid_argument("classify: marginal threshold exceeds feasible threshold");
  if (margin_db >= t.feasible_db) return LinkClass::Feasible;
  if (margin_db >= t.marginal_db) return LinkClass::Marginal;
  return LinkClass::Infeasible;
}

LinkBudgetResult evaluate_budget(const LinkBudgetInput& in, ClassifyThresholds t) {
  LinkBudgetResult r;
  r.received_power = received_power(in);
  r.margin_db = link_margin(r.received_power, in.sensitivity);
  r.cls = classify(r.margin_db, t);
  return r;
}

std::optional<LengthKm> max_range(const LinkBudgetInput& in,
                                  double required_margin_db, LengthKm cap) {
  validate(in);
  const auto margin_at = [&](double l_km) {
    LinkBudgetInput probe = in;
    probe.length = LengthKm(l_km);
    return link_margin(received_power(probe), in.sensitivity);
  };

  if (margin_at(0.0) < required_margin_db) return std::nullopt;
  if (margin_at(cap.km) >= required_margin_db) return cap;

  // Margin is strictly decreasing in length once alpha or divergence bites,
  // so the root is unique and plain bisection converges. A 0.1 m bracket
  // keeps the feasible endpoint well inside 1 m of the true root.
  double lo = 0.0, hi = cap.km;
  const double tol_km = 1e-4;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (margin_at(mid) >= required_margin_db)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= tol_km) return LengthKm(lo);
  }
  throw std::runtime_error("max_range: bisection failed to converge");
}

}  // namespace fso
