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
// Dense complex linear algebra for small multipartite systems: state
// construction and validation, Bloch-sphere maps, spectral tools,
// information-theoretic distances, and seeded random sampling.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct Tolerances {
  double herm = 1e-9;   // hermiticity defect
  double trace = 1e-9;  // |trace - 1|
  double psd = 1e-9;    // -min eigenvalue allowed
  double spec = 1e-10;  // spectral reconstruction error
  double supp = 1e-10;  // support detection threshold (relative entropy)
  double norm = 1e-9;   // vector norm defect
};

/// Hermitian, PSD, unit-trace matrix together with the ordered subsystem
/// dimensions (their product equals the matrix dimension). Construct through
/// validate_density() or the operations below; treat as immutable.
struct DensityMatrix {
  CMatrix matrix;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

struct PureState {
  CVector amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

struct BlochVector {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Eigenvalues in descending order; eigenvectors are the matching columns,
/// orthonormal. Within a degenerate eigenvalue cluster only the spanned
/// subspace is meaningful.
struct SpectralDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// One orthonormal basis (unitary, columns are the basis vectors) per
/// subsystem.
struct ProductBasis {
  std::vector<CMatrix> locals;

  std::vector<int> dims() const;
  int total_dim() const;
};

// ---------------------------------------------------------------------------
// small matrix helpers

CMatrix kron(const CMatrix& a, const CMatrix& b);
double frobenius(const CMatrix& m);
double commutator_norm(const CMatrix& a, const CMatrix& b);
CMatrix computational_basis(int d);

/// |ket><bra|
CMatrix outer(const CVector& ket, const CVector& bra);

PureState make_pure(CVector amplitudes, const Tolerances& tol = {});
ProductBasis make_product_basis(std::vector<CMatrix> locals,
                                const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// states

DensityMatrix validate_density(const CMatrix& matrix, std::vector<int> dims,
                               const Tolerances& tol = {});

/// Rank-one state |psi><psi| on the given subsystem split.
DensityMatrix pure_density(const PureState& psi, std::vector<int> dims,
                           const Tolerances& tol = {});

DensityMatrix maximally_mixed(std::vector<int> dims);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on subsystem `keep` (all others traced out).
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

/// Bloch map, convention sigma_z|0> = +|0> (so |0><0| -> (0,0,1)).
BlochVector bloch_of(const DensityMatrix& rho);
DensityMatrix qubit_of(const BlochVector& v, const Tolerances& tol = {});

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum relative entropy in bits; +infinity when supp(rho) is not
/// contained in supp(sigma) (eigenvalue threshold tol.supp).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Tolerances& tol = {});

/// Von Neumann entropy in bits.
double entropy_bits(const DensityMatrix& rho);

/// Pinching: sum_k Pi_k rho Pi_k over the rank-one product projectors of the
/// basis. Idempotent and trace preserving.
DensityMatrix dephase(const DensityMatrix& rho, const ProductBasis& basis);

SpectralDecomposition spectral(const CMatrix& hermitian,
                               const Tolerances& tol = {});

/// PSD square root via the spectral decomposition; eigenvalues in
/// [-tol.psd, 0) are clipped to 0, anything lower is an error.
CMatrix sqrt_psd(const CMatrix& hermitian, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// sampling (deterministic given the Rng stream)

CMatrix sample_haar_unitary(int d, Rng& rng);
PureState sample_pure_state(int d, Rng& rng);
DensityMatrix sample_density(int d, int rank, Rng& rng);
/// n nonnegative reals summing to 1 (flat Dirichlet).
RVector sample_simplex(int n, Rng& rng);
/// d x d Gaussian-entry Hermitian matrix.
CMatrix sample_hermitian(int d, Rng& rng);

}  // namespace qcorr
