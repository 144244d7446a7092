// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "fso/linkbudget.hpp"

using namespace fso;

TEST_CASE("received power") {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.alpha = SpecificAttenuationDbPerKm(30.38);
  in.length = LengthKm(1.0);

  SUBCASE("full capture") {
    CHECK(received_power(in).dbm == doctest::Approx(-25.38).epsilon(1e-12));
  }
  SUBCASE("zero-length path with full capture") {
    in.length = LengthKm(0.0);
    CHECK(received_power(in).dbm == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("divergence loss included with explicit apertures") {
    in.geometry =
        GeometryParams(ApertureM(0.05), ApertureM(0.2), DivergenceMrad(2.0));
    CHECK(received_power(in).dbm ==
          doctest::Approx(5.0 - 20.214477307835462 - 30.38).epsilon(1e-9));
  }
  SUBCASE("sensitivity sanity window") {
    in.sensitivity = PowerDbm(5.0);
    CHECK_THROWS_AS(received_power(in), std::domain_error);
    in.sensitivity = PowerDbm(-70.0);
    CHECK_THROWS_AS(received_power(in), std::domain_error);
  }
}

TEST_CASE("link margin") {
  CHECK(link_margin(PowerDbm(-20.0), PowerDbm(-40.0)) == 20.0);
  CHECK(link_margin(PowerDbm(-33.3), PowerDbm(-33.3)) == 0.0);
  CHECK(link_margin(PowerDbm(-45.594477307835462), PowerDbm(-40.0)) ==
        doctest::Approx(-5.594477307835462).epsilon(1e-12));
}

TEST_CASE("classification") {
  CHECK(classify(30.0) == LinkClass::Feasible);
  CHECK(classify(25.0) == LinkClass::Feasible);
  CHECK(classify(24.99) == LinkClass::Marginal);
  CHECK(classify(0.0) == LinkClass::Marginal);
  CHECK(classify(-5.59) == LinkClass::Infeasible);
  CHECK_THROWS_AS(classify(10.0, {5.0, 1.0}), std::invalid_argument);
}

TEST_CASE("classification is monotone in margin") {
  const auto rank = [](LinkClass c) {
    return c == LinkClass::Feasible ? 2 : c == LinkClass::Marginal ? 1 : 0;
  };
  int prev = -1;
  for (double m = -30.0; m <= 60.0; m += 0.5) {
    const int r = rank(classify(m));
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("max range") {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.sensitivity = PowerDbm(-45.0);
  in.alpha = SpecificAttenuationDbPerKm(100.0);

  SUBCASE("50 dB budget against 100 dB/km") {
    const auto r = max_range(in, 0.0);
    REQUIRE(r.has_value());
    CHECK(r->km == doctest::Approx(0.5).epsilon(2e-3));
    // the returned point still meets the requirement
    LinkBudgetInput probe = in;
    probe.length = *r;
    CHECK(link_margin(received_power(probe), in.sensitivity) >= 0.0);
    CHECK(link_margin(received_power(probe), in.sensitivity) <= 0.02);
  }
  SUBCASE("lossless path hits the cap") {
    in.alpha = SpecificAttenuationDbPerKm(0.0);
    const auto r = max_range(in, 0.0);
    REQUIRE(r.has_value());
    CHECK(r->km == kMaxRangeCapKm);
  }
  SUBCASE("inverse of the received-power example") {
    in.alpha = SpecificAttenuationDbPerKm(30.38);
    in.sensitivity = PowerDbm(-25.38);
    const auto r = max_range(in, 0.0);
    REQUIRE(r.has_value());
    CHECK(r->km == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("infeasible at zero length") {
    const auto r = max_range(in, 55.0);  // budget is only 50 dB
    CHECK_FALSE(r.has_value());
  }
}

TEST_CASE("received power strictly decreases with length") {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.alpha = SpecificAttenuationDbPerKm(12.0);

  SUBCASE("through attenuation alone") {
    double prev = 1e9;
    for (double l = 0.0; l <= 4.0; l += 0.2) {
      in.length = LengthKm(l);
      const double p = received_power(in).dbm;
      CHECK(p < prev);
      prev = p;
    }
  }
  SUBCASE("through divergence alone") {
    in.alpha = SpecificAttenuationDbPerKm(0.0);
    in.geometry =
        GeometryParams(ApertureM(0.05), ApertureM(0.2), DivergenceMrad(2.0));
    double prev = 1e9;
    for (double l = 0.1; l <= 4.0; l += 0.2) {
      in.length = LengthKm(l);
      const double p = received_power(in).dbm;
      CHECK(p < prev);
      prev = p;
    }
  }
}

TEST_CASE("max range is non-increasing in attenuation") {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.sensitivity = PowerDbm(-40.0);
  double prev = 1e9;
  for (double alpha : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    in.alpha = SpecificAttenuationDbPerKm(alpha);
    const auto r = max_range(in, 0.0);
    REQUIRE(r.has_value());
    CHECK(r->km <= prev);
    prev = r->km;
  }
}

TEST_CASE("evaluate_budget composes the pieces") {
  LinkBudgetInput in;
  in.tx_power = PowerDbm(5.0);
  in.alpha = SpecificAttenuationDbPerKm(30.38);
  in.length = LengthKm(1.0);
  in.sensitivity = PowerDbm(-40.0);
  const auto r = evaluate_budget(in);
  CHECK(r.received_power.dbm == doctest::Approx(-25.38).epsilon(1e-12));
  CHECK(r.margin_db == doctest::Approx(14.62).epsilon(1e-12));
  CHECK(r.cls == LinkClass::Marginal);
}
