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
// Compares the serial reference path with the OpenMP path on the two
// restart-parallel workloads (measure optimization, classicality detection)
// and one trial-parallel workload (monotonicity suite), and checks that both
// paths produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "qcorr/measures.hpp"
#include "qcorr/repro.hpp"

using namespace qcorr;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %.2fx   %s\n",
              name, serial, parallel, serial / parallel,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  Rng rng(42);

  // measure optimization: restarts in parallel
  {
    DensityMatrix rho = sample_density(4, 4, rng);
    rho.dims = {2, 2};
    OptimizerConfig serial_opt;
    serial_opt.exec = Exec::Serial;
    OptimizerConfig parallel_opt = serial_opt;
    parallel_opt.exec = Exec::Parallel;

    MeasureResult a, b;
    const double ts = seconds([&] { a = q_geometric(rho, serial_opt); });
    const double tp = seconds([&] { b = q_geometric(rho, parallel_opt); });
    report("q_geometric (20 restarts)", ts, tp,
           a.value == b.value &&
               a.diagnostics.best_restart == b.diagnostics.best_restart);
  }

  // classicality: restarts in parallel (force the optimization path with a
  // quantum correlated input)
  {
    const DensityMatrix rho = intro_qc_state();
    OptimizerConfig serial_opt;
    serial_opt.restarts = 16;
    serial_opt.exec = Exec::Serial;
    OptimizerConfig parallel_opt = serial_opt;
    parallel_opt.exec = Exec::Parallel;

    ClassicalityVerdict a, b;
    const double ts =
        seconds([&] { a = is_classically_correlated(rho, serial_opt); });
    const double tp =
        seconds([&] { b = is_classically_correlated(rho, parallel_opt); });
    report("check-cc (16 restarts)", ts, tp,
           a.is_cc == b.is_cc && a.residual == b.residual);
  }

  // suite: trials in parallel
  {
    SuiteOptions serial_opts;
    serial_opts.trials = 8;
    serial_opts.exec = Exec::Serial;
    SuiteOptions parallel_opts = serial_opts;
    parallel_opts.exec = Exec::Parallel;

    ReproReport a, b;
    const double ts = seconds(
        [&] { a = theorem_suite(TheoremSuite::T2Unital, serial_opts); });
    const double tp = seconds(
        [&] { b = theorem_suite(TheoremSuite::T2Unital, parallel_opts); });
    bool identical = a.pass() == b.pass() &&
                     a.quantities.size() == b.quantities.size();
    for (std::size_t i = 0; identical && i < a.quantities.size(); ++i)
      identical = a.quantities[i].second == b.quantities[i].second;
    report("t2-unital suite (8 trials)", ts, tp, identical);
  }
  return 0;
}
