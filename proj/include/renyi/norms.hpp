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

#ifndef RENYI_NORMS_HPP
#define RENYI_NORMS_HPP

#include <Eigen/SVD>

#include <algorithm>
#include <functional>

#include "renyi/eig.hpp"
#include "renyi/matrix.hpp"

namespace renyi {

// A Schatten norm order: a finite nonzero real, or infinity held symbolically.
// Orders in (0,1) and negative orders are quasi-norm conventions, not norms.
class NormOrder {
 public:
  explicit NormOrder(double p) : value_(p), inf_(false) {
    if (p == 0.0 || !std::isfinite(p)) throw std::invalid_argument("NormOrder: p must be finite and nonzero");
  }
  static NormOrder infinity() {
    NormOrder p;
    p.inf_ = true;
    return p;
  }
  bool is_infinite() const { return inf_; }
  double value() const {
    if (inf_) throw std::logic_error("NormOrder: infinite order has no finite value");
    return value_;
  }
  // 1/p, with 1/inf = 0.
  double reciprocal() const { return inf_ ? 0.0 : 1.0 / value_; }

 private:
  NormOrder() : value_(0.0), inf_(false) {}
  double value_;
  bool inf_;
};

// p' with 1/p + 1/p' = 1. Conjugate of 1 is infinity and vice versa.
inline NormOrder holder_conjugate(const NormOrder& p) {
  if (p.is_infinite()) return NormOrder(1.0);
  const double v = p.value();
  if (v == 1.0) return NormOrder::infinity();
  return NormOrder(v / (v - 1.0));
}

// Singular values, descending. Hermitian inputs use their own spectrum
// (|eigenvalue|); everything else goes through a Jacobi SVD, which keeps small
// singular values accurate to machine precision (the X†X route floors them
// near sqrt(eps) and cannot honor the 1e-10 inequality slacks).
inline RealVector singular_values(const Matrix& x) {
  require_finite(x, "singular_values");
  const double scale = std::max(1.0, max_abs(x));
  if (x.rows() == x.cols() && max_abs(x - x.adjoint()) <= 1e-12 * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(x));
    RealVector sv = solver.eigenvalues().cwiseAbs();
    std::sort(sv.data(), sv.data() + sv.size(), std::greater<double>());
    return sv;
  }
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues();
}

// (sum s_i^p)^{1/p} over singular values; p = infinity is the operator norm.
// Orders below 1 (negative included) act on the supported singular values
// only: exponents under 1 would otherwise blow rounding-level junk up to
// sqrt-of-noise size.
inline double schatten_norm(const Matrix& x, const NormOrder& p) {
  RealVector sv = singular_values(x);
  if (sv.size() == 0) return 0.0;
  const double top = sv(0);
  if (p.is_infinite() || top == 0.0) return top;
  const double pv = p.value();
  const double floor = pv < 1.0 ? kEpsSupport * top : 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > floor) sum += std::pow(sv(i), pv);
  if (sum == 0.0) return 0.0;
  return std::pow(sum, 1.0 / pv);
}

inline double schatten_norm(const Matrix& x, double p) { return schatten_norm(x, NormOrder(p)); }

inline double trace_norm(const Matrix& x) { return schatten_norm(x, NormOrder(1.0)); }

// sigma^{s/2} X sigma^{s/2}; s = 1 is Gamma_sigma, s = -1 its (support-restricted) inverse.
inline Matrix gamma_map(const Matrix& sigma, const Matrix& x, double s) {
  require_square(x, "gamma_map");
  if (sigma.rows() != x.rows() || sigma.cols() != x.cols())
    throw std::invalid_argument("gamma_map: dimension mismatch");
  Matrix half = matrix_power(sigma, s / 2.0);
  return half * x * half;
}

// ||X||_{p,sigma} = ||sigma^{1/(2p)} X sigma^{1/(2p)}||_p. For p = infinity the
// weight degenerates to the support projector of sigma.
inline double weighted_norm(const Matrix& x, const NormOrder& p, const Matrix& sigma) {
  return schatten_norm(gamma_map(sigma, x, p.reciprocal()), p);
}

inline double weighted_norm(const Matrix& x, double p, const Matrix& sigma) {
  return weighted_norm(x, NormOrder(p), sigma);
}

// Maximizer of |<Y, X>| over ||Y||_{p'} = 1 for 1 <= p <= infinity, built from
// the SVD of X; attains <Y*, X> = ||X||_p.
inline Matrix holder_dual_optimizer(const Matrix& x, const NormOrder& p) {
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) throw std::invalid_argument("holder_dual_optimizer: zero matrix");
  RealVector w(s.size());
  if (p.is_infinite()) {
    // Y* concentrates on the top singular pair.
    w.setZero();
    w(0) = 1.0;
  } else {
    const double pv = p.value();
    for (Eigen::Index i = 0; i < s.size(); ++i) w(i) = s(i) > 0.0 ? std::pow(s(i), pv - 1.0) : 0.0;
  }
  Matrix y = svd.matrixU() * w.cast<Complex>().asDiagonal() * svd.matrixV().adjoint();
  return y / schatten_norm(y, holder_conjugate(p));
}

// Minimizer of tr(XY) over PSD Y with ||Y||_{p'} = 1, for PSD X and 0 < p < 1.
// Spectral construction Y* ∝ X^{p/p'} on the support of X.
inline Matrix inverse_holder_optimizer(const Matrix& x, const NormOrder& p) {
  if (p.is_infinite() || p.value() <= 0.0 || p.value() >= 1.0)
    throw std::invalid_argument("inverse_holder_optimizer: requires 0 < p < 1");
  const double pc = holder_conjugate(p).value();  // negative
  Matrix y = matrix_power(x, p.value() / pc);
  const double norm = schatten_norm(y, pc);
  if (norm <= 0.0) throw std::invalid_argument("inverse_holder_optimizer: zero matrix");
  return y / norm;
}

}  // namespace renyi

#endif  // RENYI_NORMS_HPP
