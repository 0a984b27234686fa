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
// Decides whether a bipartite state is classically correlated: exact
// commutator criterion when the state is classical on B in a detectable
// basis, basis optimization as the completeness backstop.

#pragma once

#include <optional>
#include <vector>

#include "qcorr/numerics.hpp"
#include "qcorr/optimize.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

/// Hilbert-Schmidt residual below which a state counts as classically
/// correlated. Well above optimizer noise at d <= 4 per side, well below the
/// residuals of genuinely quantum-correlated states (~1e-1).
inline constexpr double kCcTol = 1e-7;

struct OptimizerConfig {
  int restarts = 20;
  int max_iters = 1000;      // objective evaluations per restart
  double grad_tol = 1e-6;    // final step / gradient resolution
  double step_init = 0.4;
  std::uint64_t seed = 20260810;
  Exec exec = Exec::Parallel;
};

/// Throws BadParameter unless every field is positive.
void validate_config(const OptimizerConfig& opt);

/// Decomposition of a bipartite state over a basis of subsystem B:
/// probabilities q_j = Tr[(I (x) |j><j|) rho] and conditional states on A.
/// Members with q_j <= drop_tol are omitted and their indices recorded.
struct ConditionalEnsemble {
  CMatrix basis_B;
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  std::vector<int> dropped;
};

struct ClassicalityVerdict {
  bool is_cc = false;
  std::optional<ProductBasis> witness_basis;  // realizes the CC form when CC
  double residual = 0.0;  // distance to the best dephased version found
  bool exact = false;     // decided by the commutator fast path
};

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho,
                                         const CMatrix& basis_B,
                                         double drop_tol = 1e-12);

/// True iff all pairwise commutators of the conditional states have
/// Frobenius norm <= tol. For a state classical on B in ens.basis_B this
/// decides classical correlation exactly.
bool is_cq_classical(const ConditionalEnsemble& ens, double tol = kCcTol);

/// Frobenius distance between rho and its B-side pinching in basis_B; zero
/// iff rho is classical on B in that basis.
double classical_on_b_residual(const DensityMatrix& rho,
                               const CMatrix& basis_B);

/// Commutator fast path alone: when it certifies the state classically
/// correlated it returns a basis realizing the CC form, otherwise nullopt
/// (which decides nothing). Exact, no optimization.
std::optional<ProductBasis> fast_cc_witness(const DensityMatrix& rho,
                                            double tol_cc = kCcTol);

ClassicalityVerdict is_classically_correlated(const DensityMatrix& rho,
                                              const OptimizerConfig& opt = {},
                                              double tol_cc = kCcTol);

namespace detail {
/// Candidate B bases for the fast path: the eigenbasis of the B marginal,
/// refined within degenerate eigenspaces by conditional-expectation
/// operators Tr_A[(G (x) I) rho] for deterministic pseudo-random Hermitian G.
std::vector<CMatrix> fast_path_candidates(const DensityMatrix& rho,
                                          int count);
}  // namespace detail

}  // namespace qcorr
