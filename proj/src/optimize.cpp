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

#include "qcorr/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

SearchResult coordinate_search(const Objective& f, RVector x0,
                               double step_init, double step_min,
                               int max_evals) {
  SearchResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  res.evals = 1;
  double step = step_init;
  const int n = static_cast<int>(res.x.size());
  if (n == 0) {
    res.converged = true;
    return res;
  }
  while (step >= step_min && res.evals < max_evals) {
    bool improved = false;
    for (int i = 0; i < n && res.evals < max_evals; ++i) {
      for (double sign : {1.0, -1.0}) {
        RVector trial = res.x;
        trial(i) += sign * step;
        const double v = f(trial);
        ++res.evals;
        if (v < res.value) {
          res.value = v;
          res.x = std::move(trial);
          improved = true;
          break;  // keep sweeping from the improved point
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  res.converged = step < step_min;
  return res;
}

RVector project_to_simplex(RVector v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double theta = 0.0;
  double cum = 0.0;
  for (int i = 0; i < n; ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (int i = 0; i < n; ++i) v(i) = std::max(v(i) - theta, 0.0);
  // guard against total cancellation
  const double s = v.sum();
  if (s <= 0.0)
    v.setConstant(1.0 / n);
  else
    v /= s;
  return v;
}

SimplexResult maximize_on_simplex(const Objective& f, int n,
                                  const std::vector<RVector>& inits,
                                  int max_iters, double improve_tol) {
  SimplexResult res;
  res.p = RVector::Constant(n, 1.0 / n);
  res.value = f(res.p);
  res.evals = 1;
  for (const auto& init : inits) {
    RVector p = project_to_simplex(init);
    const double v = f(p);
    ++res.evals;
    if (v > res.value) {
      res.value = v;
      res.p = std::move(p);
    }
  }

  const double h = 1e-6;
  double eta = 0.1;
  for (int iter = 0; iter < max_iters; ++iter) {
    // forward differences; the shared base value keeps this at n+1 evals
    const double base = f(res.p);
    ++res.evals;
    RVector grad(n);
    for (int i = 0; i < n; ++i) {
      RVector hi = res.p;
      hi(i) += h;
      grad(i) = (f(project_to_simplex(hi)) - base) / h;
      ++res.evals;
    }
    bool stepped = false;
    for (int bt = 0; bt < 8; ++bt) {
      RVector trial = project_to_simplex(res.p + eta * grad);
      const double v = f(trial);
      ++res.evals;
      if (v > res.value) {
        const double gain = v - res.value;
        res.value = v;
        res.p = std::move(trial);
        eta = std::min(eta * 1.5, 10.0);
        stepped = true;
        if (gain < improve_tol) return res;
        break;
      }
      eta *= 0.5;
    }
    if (!stepped) return res;  // no ascent direction at this resolution
  }
  return res;
}

std::vector<CMatrix> offdiag_generators(int d) {
  std::vector<CMatrix> gens;
  gens.reserve(static_cast<std::size_t>(d) * (d - 1));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      CMatrix x = CMatrix::Zero(d, d);
      x(i, j) = Complex(1.0, 0.0);
      x(j, i) = Complex(1.0, 0.0);
      gens.push_back(x);
      CMatrix y = CMatrix::Zero(d, d);
      y(i, j) = Complex(0.0, -1.0);
      y(j, i) = Complex(0.0, 1.0);
      gens.push_back(y);
    }
  }
  return gens;
}

CMatrix unitary_from_params(const CMatrix& base, const RVector& theta) {
  const int d = static_cast<int>(base.rows());
  const auto gens = offdiag_generators(d);
  CMatrix h = CMatrix::Zero(d, d);
  for (int a = 0; a < theta.size(); ++a) h += theta(a) * gens[a];
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector phases(d);
  for (int i = 0; i < d; ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return base * (es.eigenvectors() * phases.asDiagonal() *
                 es.eigenvectors().adjoint());
}

ProductBasis basis_from_params(const std::vector<CMatrix>& bases,
                               const RVector& theta) {
  ProductBasis out;
  int offset = 0;
  for (const auto& base : bases) {
    const int d = static_cast<int>(base.rows());
    const int np = basis_param_count(d);
    out.locals.push_back(unitary_from_params(base, theta.segment(offset, np)));
    offset += np;
  }
  return out;
}

}  // namespace qcorr
