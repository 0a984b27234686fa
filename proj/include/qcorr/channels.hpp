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
// Kraus-channel representation, standard channel constructors, global and
// local application, and the unital / semi-classical classification.

#pragma once

#include <optional>
#include <vector>

#include "qcorr/numerics.hpp"

namespace qcorr {

/// Classification tolerance; separate from the numerics tolerances because
/// classification composes several spectral steps.
inline constexpr double kClassifyTol = 1e-8;

/// Trace-preserving completely positive map given by its Kraus operators.
/// Complete positivity is automatic from the representation; the Choi matrix
/// is checked PSD as a cross-validation on construction.
struct KrausChannel {
  int dim = 0;
  std::vector<CMatrix> kraus;
};

struct UnitalityReport {
  bool unital = false;
  double defect = 0.0;  // || sum_k E_k E_k^dag - I ||_F
  /// Bloch vector of the image of the maximally mixed state; qubit channels
  /// only.
  std::optional<BlochVector> mixed_state_shift;
};

struct ChannelClass {
  bool unital = false;
  bool semi_classical = false;
  std::optional<CMatrix> sc_basis;  // the fixed output basis, when SC
  bool can_create_qc = false;       // !unital && !semi_classical
  /// The can_create_qc predicate is proven for qubit channels only; for
  /// dim > 2 it is reported but advisory.
  bool advisory = false;
  std::optional<BlochVector> mixed_state_shift;
};

KrausChannel validate_channel(std::vector<CMatrix> kraus,
                              const Tolerances& tol = {});

// standard constructors ------------------------------------------------------

/// Keeps diagonal entries, scales off-diagonals by (1-p).
/// Kraus realization {sqrt(1-p) I} u {sqrt(p) |i><i|}.
KrausChannel phase_damping(int dim, double p);
/// Qubit dissipator toward |0>: E0 = diag(1, sqrt(1-gamma)),
/// E1 = sqrt(gamma) |0><1|.
KrausChannel amplitude_damping(double gamma);
/// rho -> (1-q) rho + q I/d, via the Weyl-operator Kraus set.
KrausChannel depolarizing(int dim, double q);
KrausChannel unitary_channel(const CMatrix& u, const Tolerances& tol = {});
/// Complete decoherence in the given orthonormal basis: Kraus {|b_k><b_k|}.
KrausChannel dephasing_channel(const CMatrix& basis,
                               const Tolerances& tol = {});
/// Measure-and-prepare qubit channel {|0><0|, |+><1|}.
KrausChannel measure_prepare_example();

// application ----------------------------------------------------------------

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Applies ch to the `target` subsystem: Kraus operators lifted as
/// I (x) ... (x) E_k (x) ... (x) I.
DensityMatrix apply_local(const KrausChannel& ch, const DensityMatrix& rho,
                          int target);

/// Action on a bare operator (no state validation); used by the classifiers.
CMatrix apply_raw(const KrausChannel& ch, const CMatrix& m);

CMatrix choi_matrix(const KrausChannel& ch);

/// Channel equality is by action: equal Choi matrices within tol.
bool same_action(const KrausChannel& a, const KrausChannel& b,
                 double tol = kClassifyTol);

// classification --------------------------------------------------------------

UnitalityReport is_unital(const KrausChannel& ch, double tol = kClassifyTol);

/// Some(basis) iff every channel output is diagonal in that fixed basis.
/// Decided by applying the channel to a Hermitian operator basis of the
/// input space and testing whether all images pairwise commute; the returned
/// basis simultaneously diagonalizes the images (canonical column phases and
/// order).
std::optional<CMatrix> semi_classical_basis(const KrausChannel& ch,
                                            double tol = kClassifyTol);

ChannelClass classify(const KrausChannel& ch, double tol = kClassifyTol);

// sampling --------------------------------------------------------------------

/// Convex mixture of Haar unitaries {sqrt(q_k) U_k}; unital by construction.
KrausChannel random_unital_qubit(Rng& rng, int n_unitaries);

/// Generic channel with n_kraus Gaussian Kraus operators, normalized to be
/// trace preserving.
KrausChannel random_channel(int dim, int n_kraus, Rng& rng);

/// Random channel followed by complete decoherence in a Haar-random basis;
/// semi-classical by construction.
KrausChannel random_semi_classical(int dim, Rng& rng);

// shared spectral tool ---------------------------------------------------------

/// Common eigenbasis of a family of (approximately) commuting Hermitian
/// matrices: diagonalizes a random real linear combination, verifies every
/// input is diagonal in the result within tol, retries with a fresh
/// combination on failure (deterministic internal stream, max 5 retries).
/// Columns are phase-fixed and ordered canonically.
std::optional<CMatrix> simultaneous_eigenbasis(const std::vector<CMatrix>& ms,
                                               double tol);

/// Phase-fixes each column (largest-magnitude entry made real positive) and
/// orders columns by the row index of their largest entry.
CMatrix canonicalize_basis(CMatrix basis);

}  // namespace qcorr
