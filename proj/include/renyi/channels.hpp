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

#ifndef RENYI_CHANNELS_HPP
#define RENYI_CHANNELS_HPP

#include <utility>
#include <vector>

#include "renyi/states.hpp"

namespace renyi {

inline constexpr double kCompletenessTol = 1e-9;

// CPTP map as a Kraus list; sum_i K_i† K_i = I on the input space.
class Channel {
 public:
  Channel(int input_dim, int output_dim, std::vector<Matrix> kraus_ops)
      : in_(input_dim), out_(output_dim), kraus_(std::move(kraus_ops)) {
    if (in_ <= 0 || out_ <= 0) throw std::invalid_argument("Channel: dimensions must be positive");
    if (kraus_.empty()) throw std::invalid_argument("Channel: empty Kraus list");
    Matrix sum = Matrix::Zero(in_, in_);
    for (const Matrix& k : kraus_) {
      if (k.rows() != out_ || k.cols() != in_)
        throw std::invalid_argument("Channel: Kraus operator has wrong shape");
      require_finite(k, "Channel");
      sum += k.adjoint() * k;
    }
    if (operator_norm(sum - Matrix::Identity(in_, in_)) > kCompletenessTol)
      throw std::invalid_argument("Channel: Kraus operators are not trace preserving");
  }

  int input_dim() const { return in_; }
  int output_dim() const { return out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  Matrix apply(const Matrix& rho) const {
    if (rho.rows() != in_ || rho.cols() != in_) throw std::invalid_argument("Channel::apply: dimension mismatch");
    Matrix out = Matrix::Zero(out_, out_);
    for (const Matrix& k : kraus_) out += k * rho * k.adjoint();
    return out;
  }

  static Channel identity(int dim) { return Channel(dim, dim, {Matrix::Identity(dim, dim)}); }

  static Channel unitary(const Matrix& u) {
    require_square(u, "Channel::unitary");
    return Channel(static_cast<int>(u.rows()), static_cast<int>(u.rows()), {u});
  }

  // Kraus set {|i><j| / sqrt(d)}: maps everything to I/d.
  static Channel depolarizing(int dim) {
    std::vector<Matrix> ops;
    const double inv = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Matrix k = Matrix::Zero(dim, dim);
        k(i, j) = inv;
        ops.push_back(std::move(k));
      }
    return Channel(dim, dim, std::move(ops));
  }

  // Partial trace over the subsystems *not* in `keep`, as a CPTP map.
  static Channel partial_trace_channel(const std::vector<int>& dims, const std::vector<int>& keep) {
    const int in = static_cast<int>(dims_product(dims));
    std::vector<int> traced;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
      if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);
    int out = 1, env = 1;
    for (int k : keep) out *= dims[static_cast<std::size_t>(k)];
    for (int t : traced) env *= dims[static_cast<std::size_t>(t)];
    std::vector<Matrix> ops;
    for (int e = 0; e < env; ++e) {
      Matrix k = Matrix::Zero(out, in);
      for (int a = 0; a < out; ++a) {
        // Column index of |a>_keep (x) |e>_traced in the full ordering.
        std::size_t col = 0;
        std::size_t ia = static_cast<std::size_t>(a), ie = static_cast<std::size_t>(e);
        std::vector<std::size_t> strides = detail::strides_of(dims);
        for (std::size_t i = keep.size(); i-- > 0;) {
          const int d = dims[static_cast<std::size_t>(keep[i])];
          col += (ia % static_cast<std::size_t>(d)) * strides[static_cast<std::size_t>(keep[i])];
          ia /= static_cast<std::size_t>(d);
        }
        for (std::size_t i = traced.size(); i-- > 0;) {
          const int d = dims[static_cast<std::size_t>(traced[i])];
          col += (ie % static_cast<std::size_t>(d)) * strides[static_cast<std::size_t>(traced[i])];
          ie /= static_cast<std::size_t>(d);
        }
        k(a, static_cast<Eigen::Index>(col)) = 1.0;
      }
      ops.push_back(std::move(k));
    }
    return Channel(in, out, std::move(ops));
  }

 private:
  int in_;
  int out_;
  std::vector<Matrix> kraus_;
};

// Stinespring-random channel: K_e = (I (x) <e|) V with V a Haar isometry
// from the input space into output (x) environment.
inline Channel random_channel(int in_dim, int out_dim, int env_dim, std::uint64_t seed) {
  if (in_dim <= 0 || out_dim <= 0 || env_dim <= 0)
    throw std::invalid_argument("random_channel: dimensions must be positive");
  if (out_dim * env_dim < in_dim)
    throw std::invalid_argument("random_channel: out_dim * env_dim must be >= in_dim");
  RandomStream stream(seed);
  Matrix v = haar_isometry(out_dim * env_dim, in_dim, stream);
  std::vector<Matrix> ops;
  for (int e = 0; e < env_dim; ++e) {
    Matrix k(out_dim, in_dim);
    for (int o = 0; o < out_dim; ++o) k.row(o) = v.row(static_cast<Eigen::Index>(o) * env_dim + e);
    ops.push_back(std::move(k));
  }
  return Channel(in_dim, out_dim, std::move(ops));
}

inline DensityMatrix apply_channel(const Channel& phi, const DensityMatrix& rho,
                                   std::vector<int> out_dims = {}) {
  Matrix out = phi.apply(rho.matrix());
  return DensityMatrix(std::move(out), std::move(out_dims));
}

}  // namespace renyi

#endif  // RENYI_CHANNELS_HPP
