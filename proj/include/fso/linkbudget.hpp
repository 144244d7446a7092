// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "fso/attenuation.hpp"
#include "fso/units.hpp"

namespace fso {

enum class LinkClass { Feasible, Marginal, Infeasible };

std::string to_string(LinkClass c);

/// Margin thresholds for classification. The 25 dB feasible default is the
/// rain-penetration rule of thumb for FSO links.
struct ClassifyThresholds {
  double marginal_db = 0.0;
  double feasible_db = 25.0;
};

/// One link-budget evaluation. An absent geometry means the receive aperture
/// captures the whole beam (capture fraction 1); pass explicit apertures to
/// include divergence loss.
struct LinkBudgetInput {
  PowerDbm tx_power{5.0};
  std::optional<GeometryParams> geometry;
  SpecificAttenuationDbPerKm alpha{0.0};
  LengthKm length{0.0};
  double extra_loss_db = 0.0;
  PowerDbm sensitivity{-40.0};
};

struct LinkBudgetResult {
  PowerDbm received_power;
  double margin_db = 0.0;
  LinkClass cls = LinkClass::Infeasible;
};

PowerDbm received_power(const LinkBudgetInput& in);

/// Link margin in dB, received power minus sensitivity.
double link_margin(PowerDbm p_r, PowerDbm s);

LinkClass classify(double margin_db, ClassifyThresholds t = {});

LinkBudgetResult evaluate_budget(const LinkBudgetInput& in,
                                 ClassifyThresholds t = {});

inline constexpr double kMaxRangeCapKm = 100.0;

/// Largest length at which the margin still meets required_margin_db,
/// resolved to 1 m by bisection. Returns nullopt when even a zero-length
/// path misses the requirement; returns the cap when no finite root exists
/// (lossless path).
std::optional<LengthKm> max_range(const LinkBudgetInput& in,
                                  double required_margin_db,
                                  LengthKm cap = LengthKm(kMaxRangeCapKm));

}  // namespace fso
