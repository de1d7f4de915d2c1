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

#ifndef RENYI_STATES_HPP
#define RENYI_STATES_HPP

#include <Eigen/QR>

#include <utility>
#include <vector>

#include "renyi/eig.hpp"
#include "renyi/matrix.hpp"
#include "renyi/norms.hpp"
#include "renyi/rng.hpp"

namespace renyi {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kDensityEigFloor = -1e-12;

// Positive semi-definite, unit-trace operator with an optional tensor
// factorization. The eigendecomposition is computed once and cached.
class DensityMatrix {
 public:
  DensityMatrix(Matrix m, std::vector<int> dims = {}) : mat_(std::move(m)), dims_(std::move(dims)) {
    require_square(mat_, "DensityMatrix");
    require_finite(mat_, "DensityMatrix");
    if (dims_.empty()) dims_ = {static_cast<int>(mat_.rows())};
    if (dims_product(dims_) != static_cast<std::size_t>(mat_.rows()))
      throw std::invalid_argument("DensityMatrix: subsystem dims do not multiply to matrix dimension");
    const double scale = std::max(1.0, max_abs(mat_));
    if (max_abs(mat_ - mat_.adjoint()) > kHermTol * scale)
      throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(mat_.trace().real() - 1.0) > kTraceTol || std::abs(mat_.trace().imag()) > kTraceTol)
      throw std::invalid_argument("DensityMatrix: trace is not 1 within tolerance");
    eig_ = hermitian_eig(mat_);
    for (Eigen::Index i = 0; i < eig_.eigenvalues.size(); ++i) {
      if (eig_.eigenvalues(i) < kDensityEigFloor)
        throw std::domain_error("DensityMatrix: negative eigenvalue beyond clipping tolerance");
      if (eig_.eigenvalues(i) < 0.0) eig_.eigenvalues(i) = 0.0;
    }
    const double tr = eig_.eigenvalues.sum();
    eig_.eigenvalues /= tr;
    mat_ = reassemble(eig_.eigenvectors, eig_.eigenvalues);
  }

  const Matrix& matrix() const { return mat_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const HermitianEig& eig() const { return eig_; }
  double min_eigenvalue() const { return eig_.eigenvalues.minCoeff(); }

  // Spectral power using the cached decomposition (support-restricted for t <= 0).
  Matrix power(double t) const { return reassemble(eig_.eigenvectors, eigenvalue_power(eig_.eigenvalues, t)); }

  Matrix support() const { return power(0.0); }

  bool full_rank() const {
    const double top = eig_.eigenvalues.maxCoeff();
    return eig_.eigenvalues.minCoeff() > kEpsSupport * top;
  }

  DensityMatrix with_dims(std::vector<int> dims) const { return DensityMatrix(mat_, std::move(dims)); }

 private:
  Matrix mat_;
  std::vector<int> dims_;
  HermitianEig eig_;
};

// Unit vector with a tensor factorization.
class PureState {
 public:
  PureState(Vector amplitudes, std::vector<int> dims = {})
      : amp_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty()) dims_ = {static_cast<int>(amp_.size())};
    if (dims_product(dims_) != static_cast<std::size_t>(amp_.size()))
      throw std::invalid_argument("PureState: dims do not multiply to vector length");
    const double n = amp_.norm();
    if (std::abs(n - 1.0) > kTraceTol) throw std::invalid_argument("PureState: vector is not normalized");
  }

  const Vector& amplitudes() const { return amp_; }
  const std::vector<int>& dims() const { return dims_; }

  DensityMatrix density() const { return DensityMatrix(amp_ * amp_.adjoint(), dims_); }

 private:
  Vector amp_;
  std::vector<int> dims_;
};

inline Matrix tensor(const Matrix& a, const Matrix& b) { return kron(a, b); }

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

namespace detail {

// Row-major strides of a dims factorization.
inline std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * static_cast<std::size_t>(dims[i]);
  return strides;
}

}  // namespace detail

// Trace out every subsystem not listed in `keep` (indices into dims, ascending output order).
inline Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& keep) {
  require_square(m, "partial_trace");
  if (dims_product(dims) != static_cast<std::size_t>(m.rows()))
    throw std::invalid_argument("partial_trace: dims do not multiply to matrix dimension");
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size())
      throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[static_cast<std::size_t>(k)]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::size_t keep_dim = 1, trace_dim = 1;
  std::vector<std::size_t> keep_stride, trace_stride;
  std::vector<int> keep_sizes, trace_sizes;
  const std::vector<std::size_t> strides = detail::strides_of(dims);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (kept[i]) {
      keep_dim *= static_cast<std::size_t>(dims[i]);
      keep_stride.push_back(strides[i]);
      keep_sizes.push_back(dims[i]);
    } else {
      trace_dim *= static_cast<std::size_t>(dims[i]);
      trace_stride.push_back(strides[i]);
      trace_sizes.push_back(dims[i]);
    }
  }
  // Offset of composite index `idx` (row-major over `sizes`) in the full space.
  auto offset = [](std::size_t idx, const std::vector<int>& sizes, const std::vector<std::size_t>& stride) {
    std::size_t off = 0;
    for (std::size_t i = sizes.size(); i-- > 0;) {
      off += (idx % static_cast<std::size_t>(sizes[i])) * stride[i];
      idx /= static_cast<std::size_t>(sizes[i]);
    }
    return off;
  };
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
  for (std::size_t a = 0; a < keep_dim; ++a) {
    const std::size_t ra = offset(a, keep_sizes, keep_stride);
    for (std::size_t b = 0; b < keep_dim; ++b) {
      const std::size_t cb = offset(b, keep_sizes, keep_stride);
      Complex sum = 0.0;
      for (std::size_t t = 0; t < trace_dim; ++t) {
        const std::size_t rt = offset(t, trace_sizes, trace_stride);
        sum += m(static_cast<Eigen::Index>(ra + rt), static_cast<Eigen::Index>(cb + rt));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  }
  return out;
}

// Reorder tensor factors: position i of the output carries original subsystem
// perm[i]. Used to regroup bipartitions, e.g. (A,B,A',B') -> (A,A',B,B').
inline Matrix permute_subsystems(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& perm) {
  require_square(m, "permute_subsystems");
  if (perm.size() != dims.size()) throw std::invalid_argument("permute_subsystems: perm size mismatch");
  const std::vector<std::size_t> old_strides = detail::strides_of(dims);
  std::vector<int> new_dims(dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = dims.at(static_cast<std::size_t>(perm[i]));
  const std::size_t n = dims_product(dims);
  if (n != static_cast<std::size_t>(m.rows()))
    throw std::invalid_argument("permute_subsystems: dims do not multiply to matrix dimension");
  std::vector<std::size_t> map(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx, old_index = 0;
    for (std::size_t i = perm.size(); i-- > 0;) {
      const std::size_t d = static_cast<std::size_t>(new_dims[i]);
      old_index += (rem % d) * old_strides[static_cast<std::size_t>(perm[i])];
      rem /= d;
    }
    map[idx] = old_index;
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          m(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c]));
  return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (rho.dims().size() < 2) throw std::invalid_argument("partial_trace: state has no declared subsystems");
  std::vector<int> out_dims;
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= rho.dims().size())
      throw std::invalid_argument("partial_trace: subsystem index out of range");
    out_dims.push_back(rho.dims()[static_cast<std::size_t>(k)]);
  }
  return DensityMatrix(partial_trace(rho.matrix(), rho.dims(), keep), std::move(out_dims));
}

// |psi> = sum_i sqrt(lambda_i) |v_i>|i> on H (x) H; the environment is appended
// as the last tensor factor and tracing it out recovers rho. Environment labels
// follow descending eigenvalues, so pure states purify to |v>|0>.
inline PureState purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const HermitianEig& eig = rho.eig();
  for (int i = 0; i < d; ++i) {
    const int src = d - 1 - i;  // eigenvalues are stored ascending
    const double lam = eig.eigenvalues(src);
    if (lam <= 0.0) continue;
    const double root = std::sqrt(lam);
    for (int r = 0; r < d; ++r)
      psi(static_cast<Eigen::Index>(r) * d + i) += root * eig.eigenvectors(r, src);
  }
  psi /= psi.norm();
  std::vector<int> dims = rho.dims();
  dims.push_back(d);
  return PureState(std::move(psi), std::move(dims));
}

inline Matrix ginibre_matrix(int rows, int cols, RandomStream& stream) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = stream.complex_gaussian();
  return g;
}

// Isometry with Haar-distributed range: thin QR of a Ginibre matrix, columns
// phase-fixed so diag(R) is positive real. rows >= cols required.
inline Matrix haar_isometry(int rows, int cols, RandomStream& stream) {
  if (rows < cols) throw std::invalid_argument("haar_isometry: rows must be >= cols");
  Matrix g = ginibre_matrix(rows, cols, stream);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

inline Matrix haar_unitary(int dim, RandomStream& stream) { return haar_isometry(dim, dim, stream); }

// Ginibre-induced random state: G G† / tr(G G†) with G dim x rank.
inline DensityMatrix random_density(int dim, int rank, std::uint64_t seed, std::vector<int> dims = {}) {
  if (dim <= 0 || rank <= 0) throw std::invalid_argument("random_density: dim and rank must be positive");
  if (rank > dim) throw std::invalid_argument("random_density: rank exceeds dimension");
  RandomStream stream(seed);
  Matrix g = ginibre_matrix(dim, rank, stream);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m), std::move(dims));
}

inline PureState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  RandomStream stream(seed);
  Vector v(static_cast<Eigen::Index>(dims_product(dims)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = stream.complex_gaussian();
  v /= v.norm();
  return PureState(std::move(v), dims);
}

// Ensemble {p_x, rho_x} realized as the block-diagonal state sum_x p_x |x><x| (x) rho_x.
class CQState {
 public:
  CQState(std::vector<double> probabilities, std::vector<DensityMatrix> states)
      : probs_(std::move(probabilities)), states_(std::move(states)) {
    if (probs_.empty() || probs_.size() != states_.size())
      throw std::invalid_argument("CQState: probabilities and states must match and be nonempty");
    double sum = 0.0;
    for (double p : probs_) {
      if (p < 0.0) throw std::invalid_argument("CQState: negative probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kTraceTol) throw std::invalid_argument("CQState: probabilities must sum to 1");
    const int d = states_.front().dim();
    for (const DensityMatrix& s : states_)
      if (s.dim() != d) throw std::invalid_argument("CQState: states must share a dimension");
  }

  const std::vector<double>& probabilities() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  int classical_size() const { return static_cast<int>(probs_.size()); }
  int quantum_dim() const { return states_.front().dim(); }

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

inline DensityMatrix cq_embed(const CQState& ensemble) {
  const int k = ensemble.classical_size();
  const int d = ensemble.quantum_dim();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(k) * d, static_cast<Eigen::Index>(k) * d);
  for (int x = 0; x < k; ++x)
    out.block(static_cast<Eigen::Index>(x) * d, static_cast<Eigen::Index>(x) * d, d, d) =
        ensemble.probabilities()[static_cast<std::size_t>(x)] *
        ensemble.states()[static_cast<std::size_t>(x)].matrix();
  return DensityMatrix(std::move(out), {k, d});
}

}  // namespace renyi

#endif  // RENYI_STATES_HPP
