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

#include "qcorr/classicality.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/channels.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

void validate_config(const OptimizerConfig& opt) {
  if (opt.restarts < 1 || opt.max_iters < 1 || opt.grad_tol <= 0.0 ||
      opt.step_init <= 0.0)
    throw Error(ErrorKind::BadParameter,
                "optimizer config fields must be positive");
}

namespace {

void require_bipartite(const DensityMatrix& rho) {
  if (rho.dims.size() != 2)
    throw Error(ErrorKind::DimensionMismatch,
                "classicality needs a bipartite state",
                static_cast<double>(rho.dims.size()));
}

// rho in the product frame where B is rotated into basis_B.
CMatrix rotate_b(const DensityMatrix& rho, const CMatrix& basis_B) {
  const int da = rho.dims[0];
  const CMatrix w = kron(CMatrix::Identity(da, da), basis_B);
  return w.adjoint() * rho.matrix * w;
}

}  // namespace

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho,
                                         const CMatrix& basis_B,
                                         double drop_tol) {
  require_bipartite(rho);
  const int da = rho.dims[0];
  const int db = rho.dims[1];
  if (basis_B.rows() != db || basis_B.cols() != db)
    throw Error(ErrorKind::DimensionMismatch,
                "B basis does not match subsystem dimension");
  const CMatrix rot = rotate_b(rho, basis_B);

  ConditionalEnsemble ens;
  ens.basis_B = basis_B;
  for (int j = 0; j < db; ++j) {
    CMatrix block(da, da);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < da; ++b) block(a, b) = rot(a * db + j, b * db + j);
    const double q = block.trace().real();
    if (q <= drop_tol) {
      ens.dropped.push_back(j);
      continue;
    }
    block /= q;
    block = 0.5 * (block + block.adjoint());
    ens.probs.push_back(q);
    ens.states.push_back(DensityMatrix{block, {da}});
  }
  return ens;
}

bool is_cq_classical(const ConditionalEnsemble& ens, double tol) {
  for (std::size_t i = 0; i < ens.states.size(); ++i)
    for (std::size_t j = i + 1; j < ens.states.size(); ++j)
      if (commutator_norm(ens.states[i].matrix, ens.states[j].matrix) > tol)
        return false;
  return true;
}

double classical_on_b_residual(const DensityMatrix& rho,
                               const CMatrix& basis_B) {
  require_bipartite(rho);
  const int da = rho.dims[0];
  const int db = rho.dims[1];
  const CMatrix rot = rotate_b(rho, basis_B);
  double acc = 0.0;
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < da; ++b)
      for (int j = 0; j < db; ++j)
        for (int k = 0; k < db; ++k)
          if (j != k) acc += std::norm(rot(a * db + j, b * db + k));
  return std::sqrt(acc);
}

namespace detail {

std::vector<CMatrix> fast_path_candidates(const DensityMatrix& rho,
                                          int count) {
  require_bipartite(rho);
  const int da = rho.dims[0];
  const int db = rho.dims[1];
  const auto dec = spectral(partial_trace(rho, 1).matrix);

  // degenerate clusters of the B marginal
  const double gap_tol = 1e-6;
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  int begin = 0;
  for (int i = 1; i <= db; ++i) {
    if (i == db || dec.eigenvalues(i - 1) - dec.eigenvalues(i) > gap_tol) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }

  std::vector<CMatrix> out;
  out.push_back(dec.eigenvectors);
  bool degenerate = false;
  for (const auto& [b, e] : clusters) degenerate |= (e - b) > 1;
  if (!degenerate) return out;

  // Within each degenerate eigenspace the basis of a B-classical state is
  // undetermined by the marginal; the conditional expectation operator
  // T = Tr_A[(G (x) I) rho] is diagonal in the hidden basis for any G, with
  // generically distinct eigenvalues. Refine cluster by cluster.
  Rng rng(0x7a57ca11);
  for (int t = 1; t < count; ++t) {
    Rng stream = rng.derive(t);
    const CMatrix g = sample_hermitian(da, stream);
    CMatrix cond = CMatrix::Zero(db, db);
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < db; ++k) {
        Complex acc(0.0, 0.0);
        for (int a = 0; a < da; ++a)
          for (int ap = 0; ap < da; ++ap)
            acc += g(a, ap) * rho.matrix(ap * db + j, a * db + k);
        cond(j, k) = acc;
      }
    cond = 0.5 * (cond + cond.adjoint());

    CMatrix refined = dec.eigenvectors;
    for (const auto& [b, e] : clusters) {
      const int w = e - b;
      if (w < 2) continue;
      const CMatrix sub = refined.middleCols(b, w);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(
          (sub.adjoint() * cond * sub).eval());
      refined.middleCols(b, w) = sub * es.eigenvectors();
    }
    out.push_back(refined);
  }
  return out;
}

}  // namespace detail

std::optional<ProductBasis> fast_cc_witness(const DensityMatrix& rho,
                                            double tol_cc) {
  require_bipartite(rho);
  for (const CMatrix& v : detail::fast_path_candidates(rho, 10)) {
    if (classical_on_b_residual(rho, v) > tol_cc) continue;
    const auto ens = conditional_ensemble(rho, v);
    if (!is_cq_classical(ens, tol_cc)) continue;
    std::vector<CMatrix> mats;
    for (const auto& s : ens.states) mats.push_back(s.matrix);
    if (mats.empty()) mats.push_back(CMatrix::Identity(rho.dims[0], rho.dims[0]));
    const auto u = simultaneous_eigenbasis(mats, std::max(tol_cc, 1e-9));
    if (!u) continue;
    ProductBasis witness{{*u, v}};
    if (frobenius(rho.matrix - dephase(rho, witness).matrix) <= tol_cc)
      return witness;
  }
  return std::nullopt;
}

ClassicalityVerdict is_classically_correlated(const DensityMatrix& rho,
                                              const OptimizerConfig& opt,
                                              double tol_cc) {
  require_bipartite(rho);
  validate_config(opt);
  ClassicalityVerdict verdict;

  if (auto witness = fast_cc_witness(rho, tol_cc)) {
    verdict.is_cc = true;
    verdict.exact = true;
    verdict.residual = frobenius(rho.matrix - dephase(rho, *witness).matrix);
    verdict.witness_basis = std::move(*witness);
    return verdict;
  }

  // Backstop: minimize ||rho - dephase(rho, B)|| over product bases.
  const int da = rho.dims[0];
  const int db = rho.dims[1];
  const int np = basis_param_count(da) + basis_param_count(db);
  const CMatrix eig_a = spectral(partial_trace(rho, 0).matrix).eigenvectors;
  const CMatrix eig_b = spectral(partial_trace(rho, 1).matrix).eigenvectors;
  const Rng root(opt.seed);

  struct Restart {
    double residual = 0.0;
    ProductBasis basis;
  };
  std::vector<Restart> results(opt.restarts);

  for_each_index(opt.restarts, opt.exec, [&](int r) {
    Rng stream = root.derive(static_cast<std::uint64_t>(r));
    std::vector<CMatrix> base;
    if (r == 0) {
      base = {eig_a, eig_b};
    } else {
      base = {sample_haar_unitary(da, stream), sample_haar_unitary(db, stream)};
    }
    const Objective obj = [&](const RVector& theta) {
      const ProductBasis basis = basis_from_params(base, theta);
      return frobenius(rho.matrix - dephase(rho, basis).matrix);
    };
    // residual is V-shaped near an exact basis, so let the step shrink far
    // below grad_tol to resolve CC states to the 1e-9 scale
    const auto res = coordinate_search(obj, RVector::Zero(np), opt.step_init,
                                       std::min(opt.grad_tol, 1e-10),
                                       opt.max_iters);
    results[r] = Restart{res.value, basis_from_params(base, res.x)};
  });

  int best = 0;
  for (int r = 1; r < opt.restarts; ++r)
    if (results[r].residual < results[best].residual) best = r;

  verdict.residual = results[best].residual;
  verdict.is_cc = verdict.residual <= tol_cc;
  if (verdict.is_cc) verdict.witness_basis = results[best].basis;
  return verdict;
}

}  // namespace qcorr
