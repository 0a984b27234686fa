// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qcorr/repro.hpp"
#include "qcorr/serialize.hpp"

using namespace qcorr;

TEST_CASE("numbers are rounded to 12 significant digits") {
  CHECK(json_number(1.0 / 3.0).get<double>() ==
        doctest::Approx(0.333333333333).epsilon(1e-13));
  CHECK(json_number(0.5).get<double>() == 0.5);
  CHECK(json_number(std::numeric_limits<double>::infinity()) == Json("inf"));
}

TEST_CASE("complex entries serialize as [re, im] pairs") {
  CMatrix m(1, 1);
  m(0, 0) = Complex(0.25, -0.75);
  const Json j = to_json(m);
  CHECK(j[0][0][0].get<double>() == 0.25);
  CHECK(j[0][0][1].get<double>() == -0.75);
}

TEST_CASE("matrices parse from both nested and flat layouts") {
  Rng rng(1);
  const CMatrix m = sample_haar_unitary(3, rng);
  const CMatrix nested = matrix_from_json(to_json(m));
  const CMatrix flat = matrix_from_json(to_json_flat(m));
  CHECK((nested - flat).norm() == 0.0);
  CHECK((nested - m).norm() < 1e-11);

  CHECK_THROWS_AS(matrix_from_json(Json::array()), Error);
  // flat layout with a non-square length
  Json bad = Json::array();
  for (int i = 0; i < 3; ++i) bad.push_back(Json::array({1.0, 0.0}));
  CHECK_THROWS_AS(matrix_from_json(bad), Error);
}

TEST_CASE("density matrices round-trip through their wire format") {
  const auto rho = qutrit_cc_state();
  const Json j = to_json(rho);
  CHECK(j["dims"] == Json::array({3, 2}));
  const auto back = density_from_json(j);
  CHECK(back.dims == rho.dims);
  CHECK((back.matrix - rho.matrix).norm() < 1e-11);

  Json broken = j;
  broken.erase("dims");
  CHECK_THROWS_AS(density_from_json(broken), Error);
}

TEST_CASE("parsing reports density invariant violations by name") {
  Json j;
  j["dims"] = Json::array({2});
  Json rows = Json::array();
  rows.push_back(Json::array(
      {Json::array({1.0, 0.0}), Json::array({0.5, 0.0})}));
  rows.push_back(Json::array(
      {Json::array({0.0, 0.0}), Json::array({0.0, 0.0})}));
  j["matrix"] = rows;
  try {
    density_from_json(j);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("channels round-trip with flat row-major Kraus operators") {
  const auto ch = measure_prepare_example();
  const Json j = to_json(ch);
  CHECK(j["dim"] == 2);
  CHECK(j["kraus"].size() == 2);
  CHECK(j["kraus"][0].size() == 4);  // flat: d^2 pairs

  const auto back = channel_from_json(j);
  CHECK(same_action(ch, back, 1e-10));

  Json broken = j;
  broken["kraus"] = Json::array();
  CHECK_THROWS_AS(channel_from_json(broken), Error);
}

TEST_CASE("emitted JSON is stable under a parse/emit cycle") {
  const Json j = to_json(qutrit_cc_state());
  const Json reparsed = to_json(density_from_json(j));
  CHECK(j.dump() == reparsed.dump());

  const Json c = to_json(amplitude_damping(0.3));
  const Json creparsed = to_json(channel_from_json(c));
  CHECK(c.dump() == creparsed.dump());
}

TEST_CASE("CC states round-trip") {
  Rng rng(2);
  const auto cc = random_cc_state(2, 3, rng);
  const auto back = cc_state_from_json(to_json(cc));
  CHECK((render(back).matrix - render(cc).matrix).norm() < 1e-10);
}

TEST_CASE("classifier output carries the pinned field names") {
  const Json j = to_json(classify(measure_prepare_example()));
  CHECK(j["unital"] == false);
  CHECK(j["semi_classical"] == false);
  CHECK(j["can_create_qc"] == true);
  CHECK(j["sc_basis"].is_null());

  const Json sc = to_json(classify(phase_damping(2, 1.0)));
  CHECK(sc["semi_classical"] == true);
  CHECK_FALSE(sc["sc_basis"].is_null());
}

TEST_CASE("verdicts and measure results serialize with witnesses") {
  const auto verdict = is_classically_correlated(intro_cc_state());
  const Json vj = to_json(verdict);
  CHECK(vj["is_cc"] == true);
  CHECK_FALSE(vj["witness_basis"].is_null());
  CHECK(product_basis_from_json(vj["witness_basis"]).locals.size() == 2);

  OptimizerConfig opt;
  opt.restarts = 4;
  const auto res = q_geometric(bell_state(), opt);
  const Json mj = to_json(res);
  CHECK(mj["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(mj["diagnostics"]["restarts"] == 4);
  CHECK_NOTHROW(cc_state_from_json(mj["witness"]));
}

TEST_CASE("repro reports serialize assertions and quantities") {
  const Json j = to_json(repro_intro_example());
  CHECK(j["case"] == "intro-example");
  CHECK(j["pass"] == true);
  CHECK(j["assertions"].is_array());
  CHECK(j["quantities"].contains("conditional_commutator"));

  const std::string table = to_table(j);
  CHECK(table.find("case = \"intro-example\"") != std::string::npos);
}
