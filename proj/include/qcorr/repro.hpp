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
//
// Executable reproductions of the worked constructions: the two-qubit
// measure-and-prepare example, the constructive witness for channels that
// can create quantum correlations, the qutrit phase-damping example, and
// randomized suites for the three structural theorems.

#pragma once

#include <string>
#include <vector>

#include "qcorr/measures.hpp"

namespace qcorr {

struct Assertion {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison;  // "<=", ">=", "=="
};

struct ReproReport {
  std::string name;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, double>> quantities;

  bool pass() const;
  /// Records measured cmp threshold; returns the outcome.
  bool check(const std::string& what, double measured,
             const std::string& comparison, double threshold);
  void note(const std::string& what, double value);
};

/// Builds the two-qubit correlated mixture of |00> and |11>, checks it is
/// classically correlated, applies the measure-and-prepare channel locally
/// on A, checks the output matches the expected half-half mixture of
/// |0>|0> and |+>|1> and is quantum correlated.
ReproReport repro_intro_example();

/// Constructive witness: for a qubit channel that is neither unital nor
/// semi-classical, builds a classically correlated two-qubit input whose
/// image under the local channel is quantum correlated. Searches the six
/// Pauli eigenstates first, then Haar samples (up to 200), for a state whose
/// image Bloch vector is linearly independent of the shift of the maximally
/// mixed state.
std::pair<CCState, ReproReport> construct_qc_input(const KrausChannel& ch,
                                                   double tol = kClassifyTol);

struct QutritReproOptions {
  double p = 0.5;
  /// Replaces the second block with a mixture diagonal in the eigenbasis of
  /// the phase-damped first block; the output then stays classical.
  bool aligned_phi = false;
};

/// Qutrit-qubit phase-damping example: correlated mixture of two orthogonal
/// qutrit states, local phase damping on A; the damped first block has
/// eigenvalues (2/3, 1/6, 1/6), its top eigenvector is the original state,
/// and the output is quantum correlated.
ReproReport repro_qutrit_phase_damping(const QutritReproOptions& o = {});

enum class TheoremSuite {
  T1QubitExhaustive,
  T2Unital,
  T2SemiClassical,
  T3Pure,
};

struct SuiteOptions {
  int trials = 50;
  std::uint64_t seed = 20260810;
  Exec exec = Exec::Parallel;
  /// Optimizer settings for the measure-based suites.
  OptimizerConfig opt{6, 700, 1e-6, 0.4, 20260810, Exec::Serial};
  /// CC inputs tested per channel in the T1 suite.
  int cc_inputs_per_channel = 100;
};

ReproReport theorem_suite(TheoremSuite which, const SuiteOptions& options);

/// Parses the CLI spelling of a suite name (t1-qubit-exhaustive, t2-unital,
/// t2-semiclassical, t3-pure).
TheoremSuite parse_suite_name(const std::string& name);

// Fixed example states shared by the repro cases and tests.
DensityMatrix intro_cc_state();      // (|00><00| + |11><11|)/2
DensityMatrix intro_qc_state();      // (|00><00| + |+1><+1|)/2
DensityMatrix qutrit_cc_state();     // the qutrit-qubit correlated mixture
DensityMatrix bell_state();          // |00>+|11> projector
CCState random_cc_state(int da, int db, Rng& rng);

}  // namespace qcorr
