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
// Derivative-free building blocks shared by the basis searches: adaptive-step
// coordinate descent, projected gradient ascent on the probability simplex,
// and the off-diagonal-generator parametrization of local bases.

#pragma once

#include <functional>
#include <vector>

#include "qcorr/numerics.hpp"

namespace qcorr {

using Objective = std::function<double(const RVector&)>;

struct SearchResult {
  RVector x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;  // step shrank below step_min
};

/// Minimizes f by cyclic coordinate moves x_i +/- step with step halving
/// whenever a full sweep brings no improvement. Stops when step < step_min
/// or the evaluation budget is exhausted.
SearchResult coordinate_search(const Objective& f, RVector x0,
                               double step_init, double step_min,
                               int max_evals);

/// Euclidean projection onto {p : p_i >= 0, sum p = 1}.
RVector project_to_simplex(RVector v);

struct SimplexResult {
  RVector p;
  double value = 0.0;
  int evals = 0;
};

/// Maximizes f over the probability simplex by projected gradient ascent with
/// central finite-difference gradients and backtracking steps. Every init is
/// evaluated; ascent starts from the best one, so the result is never worse
/// than any supplied candidate.
SimplexResult maximize_on_simplex(const Objective& f, int n,
                                  const std::vector<RVector>& inits,
                                  int max_iters, double improve_tol);

/// Hermitian generators spanning the off-diagonal directions of u(d):
/// for each pair i<j the real (X-type) and imaginary (Y-type) element.
/// Diagonal generators are omitted; they only rephase basis vectors and
/// leave every rank-one basis projector unchanged. Size: d*(d-1).
std::vector<CMatrix> offdiag_generators(int d);

/// base * exp(i * sum_a theta_a G_a) for the off-diagonal generators of the
/// base's dimension.
CMatrix unitary_from_params(const CMatrix& base, const RVector& theta);

/// Number of search parameters for one local basis of dimension d.
inline int basis_param_count(int d) { return d * (d - 1); }

/// Builds one local basis per subsystem from a stacked parameter vector.
ProductBasis basis_from_params(const std::vector<CMatrix>& bases,
                               const RVector& theta);

}  // namespace qcorr
