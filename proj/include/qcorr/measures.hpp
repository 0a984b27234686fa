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
// Distance-based quantum-correlation measures over the classically
// correlated set: the geometric measure (1 - fidelity) and the relative
// entropy of quantumness. Reported values are upper-bound estimates of the
// true minima; the witness is always a feasible CC state whose distance
// equals the reported value.

#pragma once

#include <optional>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/classicality.hpp"
#include "qcorr/numerics.hpp"

namespace qcorr {

/// Slack for monotonicity checks: numerical noise of two optimizer runs.
inline constexpr double kMonoTol = 1e-6;

/// Probability table over one rank-one product projector per (i,j), i.e. the
/// classically correlated form by construction.
struct CCState {
  RMatrix probs;  // dA x dB, nonnegative, sums to 1
  ProductBasis basis;
};

CCState make_cc_state(RMatrix probs, ProductBasis basis,
                      const Tolerances& tol = {});
DensityMatrix render(const CCState& cc);

enum class MeasureKind { Geometric, RelativeEntropy };

struct MeasureDiagnostics {
  int restarts = 0;
  /// Restart index that produced the result; -1 when an exactly evaluated
  /// candidate (seed, fast-path witness, marginal-basis pinch) already won.
  int best_restart = -1;
  bool converged = false;
  double grad_norm = 0.0;  // finite-difference outer gradient at the witness
};

struct MeasureResult {
  double value = 0.0;
  CCState witness;
  MeasureDiagnostics diagnostics;
};

/// Distance from rho to a rendered CC state under the given measure.
double cc_distance(MeasureKind kind, const DensityMatrix& rho,
                   const CCState& cc);

/// Geometric measure: min over CC states of 1 - F(rho, sigma). Outer search
/// over product bases, inner projected ascent of the fidelity over the
/// probability simplex. `seeds` are extra CC candidates that the optimizer
/// evaluates exactly and uses as restart bases (witness push-forward).
MeasureResult q_geometric(const DensityMatrix& rho,
                          const OptimizerConfig& opt = {},
                          const std::vector<CCState>& seeds = {});

/// Relative entropy of quantumness: min over product bases of
/// S(dephase(rho, B)) - S(rho); for a fixed basis the closest basis-diagonal
/// state is the dephased state, which collapses the inner problem.
MeasureResult q_relative_entropy(const DensityMatrix& rho,
                                 const OptimizerConfig& opt = {},
                                 const std::vector<CCState>& seeds = {});

MeasureResult quantumness(MeasureKind kind, const DensityMatrix& rho,
                          const OptimizerConfig& opt = {},
                          const std::vector<CCState>& seeds = {});

struct SchmidtDecomposition {
  RVector coefficients;  // descending, squared values sum to 1
  CMatrix a_vectors;     // columns
  CMatrix b_vectors;
};

SchmidtDecomposition schmidt(const PureState& psi,
                             const std::vector<int>& dims);

/// Closed form for bipartite pure states: 1 - (largest Schmidt coefficient)^2.
/// Oracle for q_geometric on pure inputs.
double q_geometric_pure(const PureState& psi, const std::vector<int>& dims);

/// Re-expresses the image of a rendered CC state under a local channel as a
/// CC state, when the images of the target-side basis projectors commute
/// (always the case for unital qubit channels and semi-classical channels).
/// Verified against apply_local before returning; nullopt when the image is
/// not CC in this constructive sense.
std::optional<CCState> push_forward_cc(const CCState& cc,
                                       const KrausChannel& ch, int target,
                                       double tol = kClassifyTol);

/// CC form of sigma_A (x) |b><b| with sigma_A = ch(|a><a|) (or the mirrored
/// layout for target = 1); the pushed-forward pure product witness used by
/// the pure-state monotonicity check.
CCState pushed_pure_product(const CVector& a, const CVector& b,
                            const KrausChannel& ch, int target);

struct MonotonicityReport {
  double q_before = 0.0;
  double q_after = 0.0;
  /// Distance from the channel output to the pushed-forward witness; an
  /// upper bound for q_after whenever seeding succeeded (NaN otherwise).
  double witness_pushforward_bound = 0.0;
  bool seeded = false;
  bool pass = false;
};

/// Computes the measure before and after a local channel, seeding the second
/// run with the pushed-forward witness when it is CC. With seeding the
/// estimator-level inequality q_after <= q_before + kMonoTol is guaranteed by
/// construction; without it (exploration mode) pass may legitimately fail.
MonotonicityReport monotonicity_report(const DensityMatrix& rho,
                                       const KrausChannel& ch, int target,
                                       MeasureKind kind,
                                       const OptimizerConfig& opt = {});

}  // namespace qcorr
