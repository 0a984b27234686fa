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

#include "qcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qcorr {

// ---------------------------------------------------------------------------
// helpers

std::vector<int> ProductBasis::dims() const {
  std::vector<int> d;
  d.reserve(locals.size());
  for (const auto& u : locals) d.push_back(static_cast<int>(u.rows()));
  return d;
}

int ProductBasis::total_dim() const {
  int n = 1;
  for (const auto& u : locals) n *= static_cast<int>(u.rows());
  return n;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  CMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

double frobenius(const CMatrix& m) { return m.norm(); }

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  return (a * b - b * a).norm();
}

CMatrix computational_basis(int d) { return CMatrix::Identity(d, d); }

CMatrix outer(const CVector& ket, const CVector& bra) {
  return ket * bra.adjoint();
}

PureState make_pure(CVector amplitudes, const Tolerances& tol) {
  const double defect = std::abs(amplitudes.squaredNorm() - 1.0);
  if (defect > tol.norm)
    throw Error(ErrorKind::NotNormalized, "pure state squared norm != 1",
                defect);
  return PureState{std::move(amplitudes)};
}

ProductBasis make_product_basis(std::vector<CMatrix> locals,
                                const Tolerances& tol) {
  if (locals.empty())
    throw Error(ErrorKind::BadParameter, "product basis needs >= 1 subsystem");
  for (const auto& u : locals) {
    if (u.rows() != u.cols())
      throw Error(ErrorKind::DimensionMismatch, "basis matrix not square");
    const double defect =
        (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
    if (defect > 100 * tol.norm)
      throw Error(ErrorKind::BadParameter, "basis matrix not unitary", defect);
  }
  return ProductBasis{std::move(locals)};
}

// ---------------------------------------------------------------------------
// states

DensityMatrix validate_density(const CMatrix& matrix, std::vector<int> dims,
                               const Tolerances& tol) {
  if (matrix.rows() != matrix.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix not square");
  if (dims.empty())
    throw Error(ErrorKind::DimensionMismatch, "empty dimension list");
  long prod = 1;
  for (int d : dims) {
    if (d <= 0)
      throw Error(ErrorKind::DimensionMismatch, "nonpositive subsystem dim");
    prod *= d;
  }
  if (prod != matrix.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "product of dims != matrix dimension",
                static_cast<double>(prod - matrix.rows()));

  const double herm_defect = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > tol.herm)
    throw Error(ErrorKind::NotHermitian, "matrix not Hermitian", herm_defect);

  const double trace_defect = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (trace_defect > tol.trace)
    throw Error(ErrorKind::TraceNotOne, "trace != 1", trace_defect);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix,
                                            Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol.psd)
    throw Error(ErrorKind::NotPositive, "matrix not positive semidefinite",
                -min_eig);

  return DensityMatrix{matrix, std::move(dims)};
}

DensityMatrix pure_density(const PureState& psi, std::vector<int> dims,
                           const Tolerances& tol) {
  return validate_density(outer(psi.amplitudes, psi.amplitudes),
                          std::move(dims), tol);
}

DensityMatrix maximally_mixed(std::vector<int> dims) {
  int n = 1;
  for (int d : dims) n *= d;
  return DensityMatrix{CMatrix::Identity(n, n) / static_cast<double>(n),
                       std::move(dims)};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return DensityMatrix{kron(a.matrix, b.matrix), std::move(dims)};
}

namespace {

// Strides for a row-major composite index over `dims`.
std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size());
  long acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  const int ns = static_cast<int>(rho.dims.size());
  if (keep < 0 || keep >= ns)
    throw Error(ErrorKind::IndexOutOfRange, "subsystem index out of range",
                keep);
  const auto strides = strides_of(rho.dims);
  const int dk = rho.dims[keep];
  const long env = rho.matrix.rows() / dk;

  // enumerate environment multi-indices by skipping the kept subsystem
  std::vector<int> env_dims;
  std::vector<long> env_strides;
  for (int s = 0; s < ns; ++s) {
    if (s == keep) continue;
    env_dims.push_back(rho.dims[s]);
    env_strides.push_back(strides[s]);
  }

  CMatrix out = CMatrix::Zero(dk, dk);
  for (long e = 0; e < env; ++e) {
    long base = 0;
    long rem = e;
    for (int s = static_cast<int>(env_dims.size()) - 1; s >= 0; --s) {
      base += (rem % env_dims[s]) * env_strides[s];
      rem /= env_dims[s];
    }
    for (int a = 0; a < dk; ++a)
      for (int b = 0; b < dk; ++b)
        out(a, b) += rho.matrix(base + a * strides[keep],
                                base + b * strides[keep]);
  }
  return DensityMatrix{out, {dk}};
}

BlochVector bloch_of(const DensityMatrix& rho) {
  if (rho.dims.size() != 1 || rho.dims[0] != 2)
    throw Error(ErrorKind::NotQubit, "bloch_of needs dims=[2]");
  const CMatrix& m = rho.matrix;
  return BlochVector{
      2.0 * m(0, 1).real(),   // <sigma_x>
      -2.0 * m(0, 1).imag(),  // <sigma_y>
      (m(0, 0) - m(1, 1)).real(),
  };
}

DensityMatrix qubit_of(const BlochVector& v, const Tolerances& tol) {
  const double n = v.norm();
  if (n > 1.0 + tol.norm)
    throw Error(ErrorKind::BlochNormExceeded, "Bloch vector norm > 1",
                n - 1.0);
  CMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + v.z), 0.0);
  m(1, 1) = Complex(0.5 * (1.0 - v.z), 0.0);
  m(0, 1) = Complex(0.5 * v.x, -0.5 * v.y);
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix{m, {2}};
}

SpectralDecomposition spectral(const CMatrix& hermitian,
                               const Tolerances& tol) {
  if (hermitian.rows() != hermitian.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix not square");
  const double herm_defect =
      (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > tol.herm)
    throw Error(ErrorKind::NotHermitian, "matrix not Hermitian", herm_defect);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian);
  const Eigen::Index n = hermitian.rows();
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

CMatrix sqrt_psd(const CMatrix& hermitian, const Tolerances& tol) {
  const auto dec = spectral(hermitian, tol);
  const Eigen::Index n = hermitian.rows();
  RVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lam = dec.eigenvalues(i);
    if (lam < -tol.psd)
      throw Error(ErrorKind::NotPositive, "sqrt of non-PSD matrix", -lam);
    roots(i) = std::sqrt(std::max(lam, 0.0));
  }
  return dec.eigenvectors * roots.asDiagonal() * dec.eigenvectors.adjoint();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "fidelity needs equal total dimension");
  // (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 computed as the squared trace
  // norm of sqrt(sigma) sqrt(rho): the singular values are the square roots
  // of the eigenvalues of the inner product form, but stay forward-stable
  // for rank-deficient states and make F exactly symmetric.
  const CMatrix t = sqrt_psd(sigma.matrix) * sqrt_psd(rho.matrix);
  Eigen::JacobiSVD<CMatrix> svd(t);
  const double tr = svd.singularValues().sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

double entropy_bits(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix,
                                            Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Tolerances& tol) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "relative entropy needs equal dimension");
  const auto ds = spectral(sigma.matrix, tol);
  double cross = 0.0;  // Tr[rho log2 sigma]
  for (Eigen::Index j = 0; j < ds.eigenvalues.size(); ++j) {
    const double mu = ds.eigenvalues(j);
    const CVector w = ds.eigenvectors.col(j);
    const double p = std::max((w.adjoint() * rho.matrix * w)(0).real(), 0.0);
    if (mu < tol.supp) {
      if (p > tol.supp) return std::numeric_limits<double>::infinity();
      continue;  // 0 * log 0
    }
    cross += p * std::log2(mu);
  }
  double self = 0.0;  // Tr[rho log2 rho]
  Eigen::SelfAdjointEigenSolver<CMatrix> er(rho.matrix,
                                            Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < er.eigenvalues().size(); ++i) {
    const double p = er.eigenvalues()(i);
    if (p > 0.0) self += p * std::log2(p);
  }
  return std::max(self - cross, 0.0);
}

DensityMatrix dephase(const DensityMatrix& rho, const ProductBasis& basis) {
  if (basis.dims() != rho.dims)
    throw Error(ErrorKind::DimensionMismatch,
                "basis dims do not match state dims");
  CMatrix w = basis.locals[0];
  for (std::size_t s = 1; s < basis.locals.size(); ++s)
    w = kron(w, basis.locals[s]);
  const CVector diag = (w.adjoint() * rho.matrix * w).diagonal();
  CMatrix out = w * diag.real().cast<Complex>().asDiagonal() * w.adjoint();
  return DensityMatrix{out, rho.dims};
}

// ---------------------------------------------------------------------------
// sampling

CMatrix sample_haar_unitary(int d, Rng& rng) {
  if (d <= 0) throw Error(ErrorKind::BadParameter, "dimension must be >= 1");
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = Complex(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is Haar
  for (int j = 0; j < d; ++j) {
    const Complex rj = r(j, j);
    q.col(j) *= (std::abs(rj) > 0.0) ? rj / std::abs(rj) : Complex(1.0, 0.0);
  }
  return q;
}

PureState sample_pure_state(int d, Rng& rng) {
  if (d <= 0) throw Error(ErrorKind::BadParameter, "dimension must be >= 1");
  CVector v(d);
  for (int i = 0; i < d; ++i)
    v(i) = Complex(rng.gaussian(), rng.gaussian());
  v.normalize();
  return PureState{v};
}

RVector sample_simplex(int n, Rng& rng) {
  if (n <= 0) throw Error(ErrorKind::BadParameter, "simplex size must be >= 1");
  RVector v(n);
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    v(i) = -std::log(u);
  }
  return v / v.sum();
}

DensityMatrix sample_density(int d, int rank, Rng& rng) {
  if (d <= 0 || rank <= 0 || rank > d)
    throw Error(ErrorKind::BadParameter, "need 1 <= rank <= d");
  const CMatrix u = sample_haar_unitary(d, rng);
  const RVector p = sample_simplex(rank, rng);
  RVector full = RVector::Zero(d);
  full.head(rank) = p;
  CMatrix m = u * full.cast<Complex>().asDiagonal() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix{m, {d}};
}

CMatrix sample_hermitian(int d, Rng& rng) {
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return 0.5 * (g + g.adjoint());
}

}  // namespace qcorr
