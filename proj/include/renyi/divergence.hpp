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

#ifndef RENYI_DIVERGENCE_HPP
#define RENYI_DIVERGENCE_HPP

#include <limits>
#include <vector>

#include "renyi/norms.hpp"
#include "renyi/states.hpp"

namespace renyi {

// Residual threshold for supp(rho) ⊆ supp(sigma).
inline constexpr double kSupportViolationTol = 1e-9;
// |alpha - 1| below this is rejected on the Renyi path; the alpha = 1 limit
// must be requested as AlphaOrder::one() explicitly.
inline constexpr double kAlphaOneGuard = 1e-6;

// Renyi order: finite alpha > 0 away from 1, the symbol infinity, or the
// symbol one (which routes to the Umegaki limit).
class AlphaOrder {
 public:
  explicit AlphaOrder(double alpha) : value_(alpha), kind_(Kind::Finite) {
    if (!std::isfinite(alpha) || alpha <= 0.0) throw std::invalid_argument("AlphaOrder: alpha must be positive");
    if (std::abs(alpha - 1.0) <= kAlphaOneGuard)
      throw std::invalid_argument("AlphaOrder: alpha too close to 1; request the alpha = 1 limit explicitly");
  }
  static AlphaOrder one() { return AlphaOrder(Kind::One); }
  static AlphaOrder infinity() { return AlphaOrder(Kind::Infinity); }

  bool is_one() const { return kind_ == Kind::One; }
  bool is_infinite() const { return kind_ == Kind::Infinity; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  double value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("AlphaOrder: no finite value");
    return value_;
  }
  // alpha' = alpha/(alpha-1); conjugate of infinity is 1.
  double conjugate() const {
    if (kind_ == Kind::Infinity) return 1.0;
    if (kind_ == Kind::One) throw std::logic_error("AlphaOrder: conjugate undefined at alpha = 1");
    return value_ / (value_ - 1.0);
  }
  bool greater_than_one() const { return kind_ == Kind::Infinity || (kind_ == Kind::Finite && value_ > 1.0); }

 private:
  enum class Kind { Finite, One, Infinity };
  explicit AlphaOrder(Kind k) : value_(0.0), kind_(k) {}
  double value_;
  Kind kind_;
};

// Extended-real divergence. The +infinity branch and the flag coincide for
// alpha > 1; for alpha < 1 incomparable supports yield a finite value with the
// flag set (support-restricted convention).
struct DivergenceValue {
  double value = 0.0;
  bool support_violated = false;

  bool is_infinite() const { return std::isinf(value); }
  static DivergenceValue infinite() { return {std::numeric_limits<double>::infinity(), true}; }
};

namespace detail {

// PSD operator with its clipped spectrum; the workhorse carrier for powers.
struct SpectralPsd {
  Matrix vecs;
  RealVector ev;

  explicit SpectralPsd(const Matrix& m, const char* what = "SpectralPsd") {
    HermitianEig eig = hermitian_eig(m);
    ev = clip_psd_eigenvalues(eig.eigenvalues, what);
    vecs = std::move(eig.eigenvectors);
  }
  explicit SpectralPsd(const DensityMatrix& d) : vecs(d.eig().eigenvectors), ev(d.eig().eigenvalues) {}

  Matrix power(double t) const { return reassemble(vecs, eigenvalue_power(ev, t)); }
  Matrix support() const { return power(0.0); }
  bool full_rank() const {
    const double top = ev.maxCoeff();
    return top > 0.0 && ev.minCoeff() > kEpsSupport * top;
  }
};

inline bool support_violated(const Matrix& rho, const SpectralPsd& sigma) {
  if (sigma.full_rank()) return false;
  const Matrix pi = sigma.support();
  const Matrix rest = Matrix::Identity(pi.rows(), pi.cols()) - pi;
  return operator_norm(rest * rho * rest) > kSupportViolationTol;
}

// Clipped spectrum of a Hermitian PSD-up-to-rounding matrix.
inline RealVector psd_spectrum(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
  RealVector ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.0) ev(i) = 0.0;
  return ev;
}

// sum lambda^a over a clipped PSD spectrum; exponents under 1 skip
// sub-support junk (rounding noise taken to a power below 1 would dominate).
inline double spectrum_power_sum(const RealVector& ev, double a) {
  if (ev.size() == 0) return 0.0;
  const double top = ev.maxCoeff();
  if (top <= 0.0) return 0.0;
  const double floor = a < 1.0 ? kEpsSupport * top : 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > floor) sum += std::pow(ev(i), a);
  return sum;
}

inline double umegaki_core(const SpectralPsd& rho, const SpectralPsd& sigma, bool violated) {
  if (violated) return std::numeric_limits<double>::infinity();
  const double rho_top = rho.ev.maxCoeff();
  double h = 0.0;  // tr rho log rho
  for (Eigen::Index i = 0; i < rho.ev.size(); ++i)
    if (rho.ev(i) > kEpsSupport * rho_top) h += rho.ev(i) * std::log(rho.ev(i));
  const double sigma_top = sigma.ev.maxCoeff();
  double cross = 0.0;  // tr rho log sigma, restricted to supp(sigma)
  const Matrix rho_mat = rho.power(1.0);
  for (Eigen::Index j = 0; j < sigma.ev.size(); ++j) {
    if (sigma.ev(j) <= kEpsSupport * sigma_top) continue;
    const double weight = (sigma.vecs.col(j).adjoint() * rho_mat * sigma.vecs.col(j))(0, 0).real();
    cross += weight * std::log(sigma.ev(j));
  }
  return h - cross;
}

// Sandwiched divergence of a PSD unit-trace rho against a PSD sigma (not
// necessarily normalized), via the norm form alpha' log ||sigma^{-1/(2a')} rho
// sigma^{-1/(2a')}||_alpha.
inline DivergenceValue sandwiched_core(const Matrix& rho, const SpectralPsd& sigma, const AlphaOrder& alpha) {
  const bool violated = support_violated(rho, sigma);
  if (alpha.is_one()) return {umegaki_core(SpectralPsd(rho, "sandwiched"), sigma, violated), violated};
  if (alpha.greater_than_one() && violated) return DivergenceValue::infinite();
  if (alpha.is_infinite()) {
    const Matrix half = sigma.power(-0.5);
    return {std::log(operator_norm(half * rho * half)), violated};
  }
  const double a = alpha.value();
  const double conj = alpha.conjugate();
  const Matrix w = sigma.power(-0.5 / conj);  // sigma^{(1-a)/(2a)}
  const Matrix m = w * rho * w;
  return {conj * std::log(schatten_norm(m, NormOrder(a))), violated};
}

// Trace form (1/(a-1)) log tr (sigma^{(1-a)/(2a)} rho sigma^{(1-a)/(2a)})^a,
// kept as an independent route for cross-checks.
inline DivergenceValue sandwiched_trace_core(const Matrix& rho, const SpectralPsd& sigma,
                                             const AlphaOrder& alpha) {
  const bool violated = support_violated(rho, sigma);
  if (alpha.greater_than_one() && violated) return DivergenceValue::infinite();
  const double a = alpha.value();
  const Matrix w = sigma.power((1.0 - a) / (2.0 * a));
  const double sum = spectrum_power_sum(psd_spectrum(w * rho * w), a);
  return {std::log(sum) / (a - 1.0), violated};
}

}  // namespace detail

// D_alpha(rho || sigma) in nats for general PSD sigma (support conventions as
// in the density-matrix overload). Used for identities against unnormalized
// reference operators such as the identity.
inline DivergenceValue sandwiched_renyi_general(const Matrix& rho, const Matrix& sigma,
                                                const AlphaOrder& alpha) {
  require_square(rho, "sandwiched_renyi");
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("sandwiched_renyi: dimension mismatch");
  return detail::sandwiched_core(rho, detail::SpectralPsd(sigma, "sandwiched_renyi"), alpha);
}

inline DivergenceValue sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        const AlphaOrder& alpha) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("sandwiched_renyi: dimension mismatch");
  return detail::sandwiched_core(rho.matrix(), detail::SpectralPsd(sigma), alpha);
}

// Independent trace-form route; finite alpha only.
inline DivergenceValue sandwiched_renyi_trace(const DensityMatrix& rho, const DensityMatrix& sigma,
                                              const AlphaOrder& alpha) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("sandwiched_renyi_trace: dimension mismatch");
  if (!alpha.is_finite()) throw std::invalid_argument("sandwiched_renyi_trace: finite alpha required");
  return detail::sandwiched_trace_core(rho.matrix(), detail::SpectralPsd(sigma), alpha);
}

inline DivergenceValue umegaki(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("umegaki: dimension mismatch");
  detail::SpectralPsd r(rho), s(sigma);
  const bool violated = detail::support_violated(rho.matrix(), s);
  return {detail::umegaki_core(r, s, violated), violated};
}

// H_alpha(rho) = (1/(1-alpha)) log tr rho^alpha; alpha = 1 is von Neumann,
// alpha = infinity is min-entropy.
inline double renyi_entropy(const DensityMatrix& rho, const AlphaOrder& alpha) {
  const RealVector& ev = rho.eig().eigenvalues;
  const double top = ev.maxCoeff();
  if (alpha.is_infinite()) return -std::log(top);
  if (alpha.is_one()) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) > kEpsSupport * top) h -= ev(i) * std::log(ev(i));
    return h;
  }
  const double a = alpha.value();
  return std::log(detail::spectrum_power_sum(ev, a)) / (1.0 - a);
}

// Classical alpha-Renyi divergence between probability vectors, in nats.
inline DivergenceValue classical_renyi(const std::vector<double>& p, const std::vector<double>& q,
                                       const AlphaOrder& alpha) {
  if (p.size() != q.size() || p.empty()) throw std::invalid_argument("classical_renyi: size mismatch");
  auto validate = [](const std::vector<double>& v, const char* name) {
    double sum = 0.0, top = 0.0;
    for (double x : v) {
      if (!std::isfinite(x) || x < -kPsdClip)
        throw std::invalid_argument(std::string("classical_renyi: ") + name + " is not a probability vector");
      sum += x;
      top = std::max(top, x);
    }
    if (std::abs(sum - 1.0) > kTraceTol)
      throw std::invalid_argument(std::string("classical_renyi: ") + name + " does not sum to 1");
    return top;
  };
  const double p_top = validate(p, "p");
  const double q_top = validate(q, "q");
  const double p_floor = kEpsSupport * p_top;
  const double q_floor = kEpsSupport * q_top;

  bool violated = false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > p_floor && q[i] <= q_floor) violated = true;

  if (alpha.is_one()) {
    if (violated) return DivergenceValue::infinite();
    double kl = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > p_floor) kl += p[i] * std::log(p[i] / q[i]);
    return {kl, false};
  }
  if (alpha.is_infinite()) {
    if (violated) return DivergenceValue::infinite();
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > p_floor) worst = std::max(worst, p[i] / q[i]);
    return {std::log(worst), false};
  }
  const double a = alpha.value();
  if (a > 1.0 && violated) return DivergenceValue::infinite();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > p_floor && q[i] > q_floor) sum += std::pow(p[i], a) * std::pow(q[i], 1.0 - a);
  return {std::log(sum) / (a - 1.0), violated};
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_norm(a.matrix() - b.matrix());
}

}  // namespace renyi

#endif  // RENYI_DIVERGENCE_HPP
