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
// Acceptance suite: one binary, one pass/fail line per criterion.
// Run all criteria (default) or a single one with --criterion N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/repro.hpp"

using namespace qcorr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double quantity(const ReproReport& rep, const std::string& name) {
  for (const auto& [key, value] : rep.quantities)
    if (key == name) return value;
  return std::nan("");
}

// 1. Qutrit phase-damping golden test: eigenvalues (2/3, 1/6, 1/6) within
//    1e-10, top eigenvector equals the first block state up to phase, output
//    quantum correlated. Runtime < 1 s.
Outcome criterion1() {
  Outcome o;
  const auto rep = repro_qutrit_phase_damping();
  o.require(std::abs(quantity(rep, "psi_block_eigenvalue_0") - 2.0 / 3.0) <=
                1e-10,
            "eigenvalue 2/3");
  o.require(std::abs(quantity(rep, "psi_block_eigenvalue_1") - 1.0 / 6.0) <=
                1e-10,
            "eigenvalue 1/6");
  o.require(std::abs(quantity(rep, "psi_block_eigenvalue_2") - 1.0 / 6.0) <=
                1e-10,
            "eigenvalue 1/6 (second)");
  o.require(quantity(rep, "top_eigenvector_overlap") >= 1.0 - 1e-10,
            "top eigenvector overlap");
  o.require(rep.pass(), "full report (incl. quantum-correlated verdict)");
  return o;
}

// 2. Intro example golden test: the measure-and-prepare channel maps the
//    correlated |00>/|11> mixture exactly to the |00>/|+1> mixture and the
//    classicality verdict flips. Runtime < 1 s.
Outcome criterion2() {
  Outcome o;
  const auto output = apply_local(measure_prepare_example(), intro_cc_state(), 0);
  const double dev =
      (output.matrix - intro_qc_state().matrix).cwiseAbs().maxCoeff();
  o.require(dev <= 1e-12, "output deviation <= 1e-12");

  const auto before = is_classically_correlated(intro_cc_state());
  o.require(before.is_cc && before.residual <= 1e-9, "input CC at 1e-9");

  OptimizerConfig opt;
  opt.restarts = 8;
  const auto after = is_classically_correlated(output, opt);
  o.require(!after.is_cc, "output not CC");
  return o;
}

// 3. Theorem 1 property suite: 100 Neither channels admit the constructive
//    witness with commutator > 1e-7; 100 unital and 100 semi-classical
//    channels map 100 random CC states to CC outputs (residual <= 1e-7).
//    Runtime < 2 min.
Outcome criterion3() {
  Outcome o;
  SuiteOptions so;
  so.trials = 100;
  so.cc_inputs_per_channel = 100;
  so.seed = 31;
  const auto rep = theorem_suite(TheoremSuite::T1QubitExhaustive, so);
  o.require(rep.pass(), "t1 suite");
  o.require(quantity(rep, "worst_cc_residual") <= 1e-7,
            "worst CC residual <= 1e-7");
  return o;
}

// 4. Theorem 2 estimator monotonicity: 200/200 monotonicity reports for the
//    geometric measure under local unital qubit channels with witness
//    push-forward seeding (slack 1e-6), and the same for the relative
//    entropy of quantumness. 20 restarts. Runtime < 10 min.
Outcome criterion4() {
  Outcome o;
  SuiteOptions so;
  so.trials = 200;
  so.seed = 41;
  so.opt.restarts = 20;
  so.opt.max_iters = 400;
  so.opt.grad_tol = 1e-5;
  const auto rep = theorem_suite(TheoremSuite::T2Unital, so);
  o.require(rep.pass(), "200/200 monotonicity (both measures)");
  std::ostringstream extra;
  extra << "worst increase: geometric "
        << quantity(rep, "worst_geometric_increase") << ", relent "
        << quantity(rep, "worst_relative_entropy_increase");
  if (o.pass) o.detail = extra.str();
  return o;
}

// 5. Theorem 3 / pure-state oracle: the optimizer agrees with the Schmidt
//    closed form within 1e-5 on 50 random bipartite pure states, and the
//    estimator-level pure-state monotonicity check passes on 50
//    (state, local channel) pairs including amplitude damping.
//    Runtime < 5 min.
Outcome criterion5() {
  Outcome o;
  const int n = 50;
  std::vector<double> diffs(n);
  const Rng root(51);
  for_each_index(n, Exec::Parallel, [&](int t) {
    Rng stream = root.derive(static_cast<std::uint64_t>(t));
    const std::vector<int> dims = (t % 2) ? std::vector<int>{2, 3}
                                          : std::vector<int>{2, 2};
    const PureState psi = sample_pure_state(dims[0] * dims[1], stream);
    OptimizerConfig opt;
    opt.exec = Exec::Serial;
    opt.seed = 5100 + static_cast<std::uint64_t>(t);
    const auto est = q_geometric(pure_density(psi, dims), opt);
    diffs[t] = std::abs(est.value - q_geometric_pure(psi, dims));
  });
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, d);
  o.require(worst <= 1e-5, "Schmidt oracle agreement <= 1e-5");

  SuiteOptions so;
  so.trials = 50;
  so.seed = 52;
  so.opt.restarts = 20;
  so.opt.max_iters = 400;
  const auto rep = theorem_suite(TheoremSuite::T3Pure, so);
  o.require(rep.pass(), "pure-state monotonicity 50/50");
  if (o.pass) {
    std::ostringstream extra;
    extra << "worst oracle diff " << worst << ", worst increase "
          << quantity(rep, "worst_increase");
    o.detail = extra.str();
  }
  return o;
}

// 6. Measure sanity: Q_G(Bell) = 0.5 +/- 1e-5 and Q_S(Bell) = 1 +/- 1e-5
//    bits; both measures <= 1e-7 on 100 random rendered CC states.
Outcome criterion6() {
  Outcome o;
  OptimizerConfig opt;
  opt.seed = 61;
  const double qg = q_geometric(bell_state(), opt).value;
  const double qs = q_relative_entropy(bell_state(), opt).value;
  o.require(std::abs(qg - 0.5) <= 1e-5, "Q_G(Bell) = 0.5 +/- 1e-5");
  o.require(std::abs(qs - 1.0) <= 1e-5, "Q_S(Bell) = 1 +/- 1e-5");

  const int n = 100;
  std::vector<double> worst_vals(n);
  const Rng root(62);
  for_each_index(n, Exec::Parallel, [&](int t) {
    Rng stream = root.derive(static_cast<std::uint64_t>(t));
    const int da = (t % 2) ? 3 : 2;
    const auto rho = render(random_cc_state(da, 2, stream));
    OptimizerConfig inner;
    inner.exec = Exec::Serial;
    inner.seed = 6200 + static_cast<std::uint64_t>(t);
    worst_vals[t] = std::max(q_geometric(rho, inner).value,
                             q_relative_entropy(rho, inner).value);
  });
  double worst = 0.0;
  for (double v : worst_vals) worst = std::max(worst, v);
  o.require(worst <= 1e-7, "measures <= 1e-7 on rendered CC states");
  if (o.pass) {
    std::ostringstream extra;
    extra << "Q_G(Bell) err " << std::abs(qg - 0.5) << ", Q_S(Bell) err "
          << std::abs(qs - 1.0) << ", worst CC value " << worst;
    o.detail = extra.str();
  }
  return o;
}

// 7. Classifier truth table: phase damping unital for every p and d, fully
//    decohering at p = 1 with the computational witness basis; amplitude
//    damping non-unital with shift (0, 0, gamma) within 1e-10; the
//    measure-and-prepare channel is Neither.
Outcome criterion7() {
  Outcome o;
  for (int d : {2, 3, 4}) {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      const auto cls = classify(phase_damping(d, p));
      o.require(cls.unital, "phase damping unital (d=" + std::to_string(d) +
                                ", p=" + std::to_string(p) + ")");
      if (p == 1.0) {
        o.require(cls.semi_classical && cls.sc_basis.has_value(),
                  "p=1 semi-classical (d=" + std::to_string(d) + ")");
        if (cls.sc_basis)
          o.require((*cls.sc_basis - computational_basis(d)).norm() <= 1e-8,
                    "computational witness basis (d=" + std::to_string(d) +
                        ")");
      }
      o.require(!cls.can_create_qc, "phase damping cannot create");
    }
  }
  for (double gamma : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const auto cls = classify(amplitude_damping(gamma));
    o.require(!cls.unital,
              "amplitude damping non-unital (gamma=" + std::to_string(gamma) +
                  ")");
    o.require(cls.mixed_state_shift.has_value(), "qubit shift reported");
    if (cls.mixed_state_shift) {
      const auto s = *cls.mixed_state_shift;
      const double err = std::sqrt(s.x * s.x + s.y * s.y +
                                   (s.z - gamma) * (s.z - gamma));
      o.require(err <= 1e-10, "shift = (0, 0, gamma) within 1e-10");
    }
  }
  const auto eq4 = classify(measure_prepare_example());
  o.require(!eq4.unital && !eq4.semi_classical && eq4.can_create_qc,
            "measure-and-prepare channel is Neither");
  return o;
}

struct Criterion {
  const char* name;
  double time_limit_s;  // <= 0: no limit stated
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

  const std::vector<Criterion> criteria{
      {"qutrit phase-damping golden test", 1.0, criterion1},
      {"intro example golden test", 1.0, criterion2},
      {"theorem 1 property suite", 120.0, criterion3},
      {"theorem 2 estimator monotonicity", 600.0, criterion4},
      {"theorem 3 / pure-state oracle", 300.0, criterion5},
      {"measure sanity", 0.0, criterion6},
      {"classifier truth table", 0.0, criterion7},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only != 0 && number != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome = criteria[i].run();
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    if (criteria[i].time_limit_s > 0 && elapsed > criteria[i].time_limit_s)
      outcome.require(false, "runtime limit exceeded");
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", number, criteria[i].name,
                elapsed, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
