/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "icr/bargain.hpp"
#include "icr/errors.hpp"

using namespace icr;
using namespace icr::bargain;
using test::line;
using test::linear_duel;

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(BargainingProblem({{"a", line(0, 1), 0.0, 1.0}}, {0.0, 15.0}),
                  ValidationError);

  // weights must sum to 1
  CHECK_THROWS_AS(BargainingProblem(
                      {{"a", line(0, 1), 0.0, 0.7}, {"b", line(1, 0), 0.0, 0.7}}, {0.0, 15.0}),
                  ValidationError);

  // curve must span the domain
  CHECK_THROWS_AS(BargainingProblem({{"a", line(0, 1, 0, 10), 0.0, 0.5},
                                     {"b", line(1, 0), 0.0, 0.5}},
                                    {0.0, 15.0}),
                  ValidationError);

  // resolution within (0, span]
  CHECK_THROWS_AS(BargainingProblem(
                      {{"a", line(0, 1), 0.0, 0.5}, {"b", line(1, 0), 0.0, 0.5}}, {0.0, 15.0},
                      20.0),
                  ValidationError);

  // disagreement above the achievable maximum
  CHECK_THROWS_AS(BargainingProblem(
                      {{"a", line(0, 0.5), 0.9, 0.5}, {"b", line(1, 0), 0.0, 0.5}}, {0.0, 15.0}),
                  ValidationError);
}

TEST_CASE("ideal point") {
  SUBCASE("normalized opposed curves") {
    const auto p = linear_duel();
    const auto ideal = ideal_point(p);
    CHECK(ideal == std::vector<double>{1.0, 1.0});
  }
  SUBCASE("constant curve keeps its level") {
    const UtilityCurve flat({{0.0, 0.4}, {15.0, 0.4}});
    const BargainingProblem p({{"a", line(0, 1), 0.0, 0.5}, {"b", flat, 0.4, 0.5}}, {0.0, 15.0});
    const auto ideal = ideal_point(p);
    CHECK(ideal[0] == 1.0);
    CHECK(ideal[1] == doctest::Approx(0.4).epsilon(1e-12));
  }
}

TEST_CASE("individual optimum") {
  CHECK(individual_optimum(line(0, 1), {0.0, 15.0}) == 15.0);
  CHECK(individual_optimum(line(1, 0), {0.0, 15.0}) == 0.0);
  // plateau: smallest parameter attaining the maximum
  const UtilityCurve plateau({{0.0, 0.0}, {8.0, 1.0}, {15.0, 1.0}});
  CHECK(individual_optimum(plateau, {0.0, 15.0}) == 8.0);
}

TEST_CASE("feasible region") {
  SUBCASE("zero disagreement keeps the whole domain") {
    const auto region = feasible_region(linear_duel());
    REQUIRE(region.size() == 1);
    CHECK(region[0].lo == 0.0);
    CHECK(region[0].hi == 15.0);
  }
  SUBCASE("incompatible demands raise with the disagreement attached") {
    const BargainingProblem p({{"a", line(0, 1), 0.6, 0.5}, {"b", line(1, 0), 0.6, 0.5}},
                              {0.0, 15.0});
    CHECK_THROWS_WITH_AS(static_cast<void>(feasible_region(p)),
                         doctest::Contains("no control-parameter value"), NoFeasibleAgreement);
    try {
      static_cast<void>(feasible_region(p));
    } catch (const NoFeasibleAgreement& e) {
      CHECK(e.disagreement() == std::vector<double>{0.6, 0.6});
    }
  }
  SUBCASE("one-sided demand clips the domain exactly") {
    const BargainingProblem p({{"a", line(0, 1), 0.2, 0.5}, {"b", line(1, 0), 0.0, 0.5}},
                              {0.0, 15.0});
    const auto region = feasible_region(p);
    REQUIRE(region.size() == 1);
    CHECK(region[0].lo == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(region[0].hi == 15.0);
  }
  SUBCASE("touching demands leave a single point") {
    const BargainingProblem p({{"a", line(0, 1), 0.6, 0.5}, {"b", line(1, 0), 0.4, 0.5}},
                              {0.0, 15.0});
    const auto region = feasible_region(p);
    REQUIRE(region.size() == 1);
    CHECK(region[0].lo == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(region[0].hi == doctest::Approx(9.0).epsilon(1e-12));
  }
}

TEST_CASE("jain index") {
  CHECK(jain_index(std::vector<double>{1.0, 1.0, 1.0}) == 1.0);
  CHECK(jain_index(std::vector<double>{1.0, 0.0}) == 0.5);
  CHECK(jain_index(std::vector<double>{0.5, 1.0}) == 0.9);

  CHECK_THROWS_AS(jain_index(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(jain_index(std::vector<double>{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(jain_index(std::vector<double>{-1.0, 1.0}), DomainError);
}

TEST_CASE("jain index bounds and equality cases") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uu(0.0, 10.0);
  std::uniform_int_distribution<int> nn(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = nn(rng);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = uu(rng);
    if (*std::max_element(x.begin(), x.end()) == 0.0) x[0] = 1.0;
    const double j = jain_index(x);
    CHECK(j >= 1.0 / n - 1e-12);
    CHECK(j <= 1.0 + 1e-12);
    CHECK(j == doctest::Approx(test::oracle_jain(x)).epsilon(1e-12));
  }
  // == 1 iff all equal; == 1/n iff exactly one nonzero
  CHECK(jain_index(std::vector<double>{0.37, 0.37, 0.37, 0.37}) == 1.0);
  CHECK(jain_index(std::vector<double>{0.0, 0.0, 2.5}) == doctest::Approx(1.0 / 3).epsilon(0));
  CHECK(jain_index(std::vector<double>{0.9, 0.90001}) < 1.0);
  CHECK(jain_index(std::vector<double>{0.1, 2.5, 0.0}) > 1.0 / 3);
}

TEST_CASE("arbitrate picks the fairest method with deterministic ties") {
  SUBCASE("symmetric duel: every method agrees, order breaks the tie") {
    const auto report = arbitrate(linear_duel(), {Method::sebs, Method::ksbs, Method::wnbs,
                                                  Method::nbs});
    REQUIRE(report.solutions.size() == 4);
    CHECK(report.solutions.front().method == Method::nbs);  // canonical order
    for (const auto& s : report.solutions) CHECK(s.parameter == doctest::Approx(7.5));
    CHECK(report.chosen_method == Method::nbs);
    CHECK(report.chosen_parameter == doctest::Approx(7.5));
  }
  SUBCASE("single method requested") {
    const auto report = arbitrate(linear_duel(), {Method::ksbs});
    REQUIRE(report.solutions.size() == 1);
    CHECK(report.chosen_method == Method::ksbs);
  }
  SUBCASE("no methods requested") {
    CHECK_THROWS_AS(static_cast<void>(arbitrate(linear_duel(), {})), ValidationError);
  }
  SUBCASE("a failing method aborts with its name") {
    // constant curve at its disagreement level makes KSBS degenerate
    const UtilityCurve flat({{0.0, 0.4}, {15.0, 0.4}});
    const BargainingProblem p({{"a", line(0, 1), 0.0, 0.5}, {"b", flat, 0.4, 0.5}}, {0.0, 15.0});
    try {
      static_cast<void>(arbitrate(p, {Method::nbs, Method::ksbs}));
      FAIL("expected SolverError");
    } catch (const SolverError& e) {
      CHECK(e.method() == std::string("KSBS"));
    }
  }
}

TEST_CASE("method names round-trip") {
  for (const Method m : kMethodOrder) {
    const auto parsed = parse_method(method_name(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
  }
  CHECK(parse_method("nbs") == Method::nbs);
  CHECK_FALSE(parse_method("nash").has_value());
}
