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

namespace {

double quantity(const ReproReport& rep, const std::string& name) {
  for (const auto& [key, value] : rep.quantities)
    if (key == name) return value;
  FAIL("missing quantity ", name);
  return 0.0;
}

const Assertion& assertion(const ReproReport& rep, const std::string& name) {
  for (const auto& a : rep.assertions)
    if (a.name == name) return a;
  REQUIRE(false);
  static Assertion dummy;
  return dummy;
}

}  // namespace

TEST_CASE("intro example reproduces end to end") {
  const auto rep = repro_intro_example();
  CHECK(rep.pass());
  // Frobenius norm of [|0><0|, |+><+|] is 1/sqrt(2), derived by hand
  CHECK(quantity(rep, "conditional_commutator") ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(assertion(rep, "output_matches_expected").measured <= 1e-12);
}

TEST_CASE("intro example variants: identity and complete decoherence") {
  // replacing the channel by the identity keeps the state classical
  const auto id_out = apply_local(unitary_channel(CMatrix::Identity(2, 2)),
                                  intro_cc_state(), 0);
  CHECK(fast_cc_witness(id_out).has_value());

  // complete decoherence is semi-classical: the output stays classical
  const auto sc_out = apply_local(phase_damping(2, 1.0), intro_cc_state(), 0);
  CHECK(fast_cc_witness(sc_out).has_value());
}

TEST_CASE("constructive witness for the measure-and-prepare channel") {
  auto [input, rep] = construct_qc_input(measure_prepare_example());
  CHECK(rep.pass());
  CHECK(quantity(rep, "output_commutator") > 1e-7);
  // the input is the half/half two-block form
  CHECK(input.probs(0, 0) == doctest::Approx(0.5));
  CHECK(input.probs(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("constructive witness for amplitude damping picks |+>") {
  auto [input, rep] = construct_qc_input(amplitude_damping(0.5));
  CHECK(rep.pass());
  CHECK(quantity(rep, "shift.z") == doctest::Approx(0.5).epsilon(1e-12));
  // |0> and |1> images stay on the z axis; |+> is the first candidate whose
  // image leaves it, with cross norm gamma*sqrt(1-gamma)
  CHECK(quantity(rep, "cross_norm") ==
        doctest::Approx(0.5 * std::sqrt(0.5)).epsilon(1e-9));
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(plus.dot(input.basis.locals[0].col(0))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(quantity(rep, "output_commutator") > 1e-3);
}

TEST_CASE("construction refuses unital and semi-classical channels") {
  try {
    construct_qc_input(phase_damping(2, 0.5));
    FAIL("expected ChannelCannotCreate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChannelCannotCreate);
  }
  CHECK_THROWS_AS(construct_qc_input(dephasing_channel(computational_basis(2))),
                  Error);
  CHECK_THROWS_AS(construct_qc_input(phase_damping(3, 0.5)), Error);
}

TEST_CASE("qutrit phase damping golden case") {
  const auto rep = repro_qutrit_phase_damping();
  CHECK(rep.pass());
  CHECK(quantity(rep, "psi_block_eigenvalue_0") ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(quantity(rep, "psi_block_eigenvalue_1") ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(quantity(rep, "psi_block_eigenvalue_2") ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(quantity(rep, "top_eigenvector_overlap") >= 1.0 - 1e-10);
  // residual of the best eigenvector equation: sqrt(2)/12 by hand
  CHECK(quantity(rep, "eigenvector_residual") ==
        doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-9));
}

TEST_CASE("qutrit case with p = 0 keeps the state classical") {
  QutritReproOptions o;
  o.p = 0.0;
  const auto rep = repro_qutrit_phase_damping(o);
  CHECK(rep.pass());
  CHECK(assertion(rep, "output_is_cc").pass);
}

TEST_CASE("qutrit case with an aligned second block stays classical") {
  QutritReproOptions o;
  o.aligned_phi = true;
  const auto rep = repro_qutrit_phase_damping(o);
  CHECK(rep.pass());
  CHECK(assertion(rep, "blocks_commute").pass);
  CHECK(assertion(rep, "psi1_eigenvector_of_phi_block").pass);
}

TEST_CASE("qubit phase damping never breaks conditional commutation") {
  // the qutrit effect has no two-qubit analogue: phase damping on a qubit is
  // unital, so conditional states of CC inputs keep commuting
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto cc = random_cc_state(2, 2, rng);
    const auto out =
        apply_local(phase_damping(2, rng.uniform()), render(cc), 0);
    const auto ens = conditional_ensemble(out, cc.basis.locals[1]);
    double comm = 0.0;
    for (std::size_t i = 0; i < ens.states.size(); ++i)
      for (std::size_t j = i + 1; j < ens.states.size(); ++j)
        comm = std::max(comm, commutator_norm(ens.states[i].matrix,
                                              ens.states[j].matrix));
    CHECK(comm <= 1e-9);
  }
}

TEST_CASE("t1 suite holds on a small run") {
  SuiteOptions o;
  o.trials = 6;
  o.cc_inputs_per_channel = 30;
  o.seed = 5;
  const auto rep = theorem_suite(TheoremSuite::T1QubitExhaustive, o);
  CHECK(rep.pass());
  CHECK(quantity(rep, "worst_cc_residual") <= 1e-7);
}

TEST_CASE("t2 suites hold on small runs") {
  SuiteOptions o;
  o.trials = 6;
  o.seed = 6;
  o.opt.restarts = 4;
  CHECK(theorem_suite(TheoremSuite::T2Unital, o).pass());
  CHECK(theorem_suite(TheoremSuite::T2SemiClassical, o).pass());
}

TEST_CASE("t3 suite holds on a small run") {
  SuiteOptions o;
  o.trials = 8;
  o.seed = 7;
  o.opt.restarts = 4;
  const auto rep = theorem_suite(TheoremSuite::T3Pure, o);
  CHECK(rep.pass());
  CHECK(quantity(rep, "worst_increase") <= kMonoTol);
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
  SuiteOptions o;
  o.trials = 4;
  o.seed = 8;
  o.opt.restarts = 3;
  const auto a = theorem_suite(TheoremSuite::T2Unital, o);
  const auto b = theorem_suite(TheoremSuite::T2Unital, o);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("suite names parse and bad input is rejected") {
  CHECK(parse_suite_name("t1-qubit-exhaustive") ==
        TheoremSuite::T1QubitExhaustive);
  CHECK(parse_suite_name("t3-pure") == TheoremSuite::T3Pure);
  CHECK_THROWS_AS(parse_suite_name("nope"), Error);
  SuiteOptions o;
  o.trials = 0;
  CHECK_THROWS_AS(theorem_suite(TheoremSuite::T3Pure, o), Error);
}
