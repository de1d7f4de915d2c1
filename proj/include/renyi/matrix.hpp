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

#ifndef RENYI_MATRIX_HPP
#define RENYI_MATRIX_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace renyi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline bool is_finite(const Matrix& x) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!std::isfinite(x(i, j).real()) || !std::isfinite(x(i, j).imag())) return false;
  return true;
}

inline void require_finite(const Matrix& x, const char* what) {
  if (!is_finite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

inline void require_square(const Matrix& x, const char* what) {
  if (x.rows() != x.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

// Largest |entry|; a cheap scale estimate (bounds the operator norm within a factor of dim).
inline double max_abs(const Matrix& x) {
  double m = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) m = std::max(m, std::abs(x(i, j)));
  return m;
}

inline Matrix dagger(const Matrix& x) { return x.adjoint(); }

// (X + X†)/2
inline Matrix hermitian_part(const Matrix& x) { return 0.5 * (x + x.adjoint()); }

inline Complex hs_inner(const Matrix& x, const Matrix& y) { return (x.adjoint() * y).trace(); }

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline std::size_t dims_product(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

}  // namespace renyi

#endif  // RENYI_MATRIX_HPP
