// Copyright 2026 The renyi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RENYI_EIG_HPP
#define RENYI_EIG_HPP

#include <Eigen/Eigenvalues>

#include "renyi/matrix.hpp"

namespace renyi {

// Relative support cutoff: eigenvalues/singular values <= eps_support * (largest)
// count as zero. Exact-arithmetic support conventions need a numerical stand-in.
inline constexpr double kEpsSupport = 1e-10;
// Eigenvalues of a nominally PSD matrix in [-kPsdClip * lambda_max, 0) are clipped
// to zero; anything more negative is rejected.
inline constexpr double kPsdClip = 1e-12;
inline constexpr double kHermTol = 1e-8;

// Eigenvalues ascending, eigenvectors as columns.
struct HermitianEig {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

inline HermitianEig hermitian_eig(const Matrix& h) {
  require_square(h, "hermitian_eig");
  require_finite(h, "hermitian_eig");
  const double scale = std::max(1.0, max_abs(h));
  if (max_abs(h - h.adjoint()) > kHermTol * scale)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(h));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Largest singular value. Goes through X†X directly so it stays usable for
// validating hermitian_eig itself.
inline double operator_norm(const Matrix& x) {
  if (x.rows() == 0 || x.cols() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      x.rows() <= x.cols() ? Matrix(x * x.adjoint()) : Matrix(x.adjoint() * x));
  double top = solver.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

// Clip tiny negatives to zero; reject anything below -kPsdClip * lambda_max.
inline RealVector clip_psd_eigenvalues(const RealVector& ev, const char* what) {
  const double top = ev.size() ? ev.maxCoeff() : 0.0;
  const double floor = -kPsdClip * std::max(top, 0.0);
  RealVector out = ev;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < floor)
      throw std::domain_error(std::string(what) + ": matrix is not positive semi-definite");
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

// Spectral power on clipped eigenvalues. t < 0 acts on the support only
// (zeros stay zero); t == 0 yields the support projector.
inline RealVector eigenvalue_power(const RealVector& ev_clipped, double t) {
  const double top = ev_clipped.size() ? ev_clipped.maxCoeff() : 0.0;
  const double support_floor = kEpsSupport * top;
  RealVector out(ev_clipped.size());
  for (Eigen::Index i = 0; i < ev_clipped.size(); ++i) {
    const double lam = ev_clipped(i);
    if (t >= 1e-15) {
      out(i) = lam > 0.0 ? std::pow(lam, t) : 0.0;
    } else {
      out(i) = lam > support_floor ? (t <= -1e-15 ? std::pow(lam, t) : 1.0) : 0.0;
    }
  }
  return out;
}

inline Matrix reassemble(const Matrix& vectors, const RealVector& values) {
  Vector scaled = values.cast<Complex>();
  return vectors * scaled.asDiagonal() * vectors.adjoint();
}

// H^t for PSD H, support-restricted for t <= 0.
inline Matrix matrix_power(const Matrix& h, double t) {
  HermitianEig eig = hermitian_eig(h);
  RealVector ev = clip_psd_eigenvalues(eig.eigenvalues, "matrix_power");
  return reassemble(eig.eigenvectors, eigenvalue_power(ev, t));
}

inline Matrix support_projector(const Matrix& h) { return matrix_power(h, 0.0); }

}  // namespace renyi

#endif  // RENYI_EIG_HPP
