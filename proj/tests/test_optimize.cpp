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
#include "qcorr/optimize.hpp"

using namespace qcorr;

TEST_CASE("coordinate search finds quadratic minima") {
  const Objective f = [](const RVector& x) {
    return (x(0) - 1.5) * (x(0) - 1.5) + 2.0 * (x(1) + 0.5) * (x(1) + 0.5);
  };
  const auto res = coordinate_search(f, RVector::Zero(2), 0.5, 1e-8, 5000);
  CHECK(res.converged);
  CHECK(res.x(0) == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(res.x(1) == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("coordinate search resolves V-shaped minima geometrically") {
  const Objective f = [](const RVector& x) {
    return std::abs(x(0) - 0.3) + std::abs(x(1) + 0.7);
  };
  const auto res = coordinate_search(f, RVector::Zero(2), 0.4, 1e-10, 20000);
  CHECK(res.value < 1e-9);
}

TEST_CASE("simplex projection matches known cases") {
  RVector v(2);
  v << 2.0, 0.0;
  RVector p = project_to_simplex(v);
  CHECK(p(0) == doctest::Approx(1.0));
  CHECK(p(1) == doctest::Approx(0.0));

  v << 0.6, 0.6;
  p = project_to_simplex(v);
  CHECK(p(0) == doctest::Approx(0.5));
  CHECK(p(1) == doctest::Approx(0.5));
}

TEST_CASE("simplex projection is the closest simplex point") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    RVector v(4);
    for (int i = 0; i < 4; ++i) v(i) = rng.uniform(-1.0, 2.0);
    const RVector p = project_to_simplex(v);
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
    // no random simplex point may be closer
    for (int s = 0; s < 40; ++s) {
      const RVector q = sample_simplex(4, rng);
      CHECK((v - p).squaredNorm() <= (v - q).squaredNorm() + 1e-12);
    }
  }
}

TEST_CASE("projected ascent solves a linear simplex program at a vertex") {
  RVector c(3);
  c << 0.2, 0.9, 0.4;
  const Objective f = [&](const RVector& p) { return c.dot(p); };
  const auto res = maximize_on_simplex(f, 3, {}, 60, 1e-12);
  CHECK(res.value == doctest::Approx(0.9).epsilon(1e-6));
}

TEST_CASE("projected ascent never degrades a supplied candidate") {
  RVector c(3);
  c << 0.1, 0.8, 0.3;
  const Objective f = [&](const RVector& p) { return c.dot(p) - p.squaredNorm(); };
  RVector good(3);
  good << 0.0, 1.0, 0.0;
  const auto res = maximize_on_simplex(f, 3, {good}, 40, 1e-12);
  CHECK(res.value >= f(good) - 1e-12);
}

TEST_CASE("off-diagonal generators are Hermitian and traceless") {
  for (int d : {2, 3}) {
    const auto gens = offdiag_generators(d);
    CHECK(static_cast<int>(gens.size()) == d * (d - 1));
    for (const auto& g : gens) {
      CHECK((g - g.adjoint()).norm() < 1e-15);
      CHECK(std::abs(g.trace()) < 1e-15);
    }
  }
}

TEST_CASE("unitary_from_params is unitary and anchored at the base") {
  Rng rng(5);
  for (int d : {2, 3}) {
    const CMatrix base = sample_haar_unitary(d, rng);
    const int np = basis_param_count(d);
    CHECK((unitary_from_params(base, RVector::Zero(np)) - base).norm() <
          1e-14);
    RVector theta(np);
    for (int i = 0; i < np; ++i) theta(i) = rng.uniform(-1.0, 1.0);
    const CMatrix u = unitary_from_params(base, theta);
    CHECK((u.adjoint() * u - CMatrix::Identity(d, d)).norm() < 1e-12);
  }
}

TEST_CASE("basis_from_params splits the parameter vector per subsystem") {
  Rng rng(6);
  const std::vector<CMatrix> bases{sample_haar_unitary(2, rng),
                                   sample_haar_unitary(3, rng)};
  const int np = basis_param_count(2) + basis_param_count(3);
  RVector theta = RVector::Zero(np);
  theta(0) = 0.3;       // A-side parameter
  theta(np - 1) = -0.2; // B-side parameter
  const auto basis = basis_from_params(bases, theta);
  CHECK(basis.locals.size() == 2);
  CHECK(basis.dims() == std::vector<int>{2, 3});
  CHECK((basis.locals[0].adjoint() * basis.locals[0] -
         CMatrix::Identity(2, 2)).norm() < 1e-12);
}
