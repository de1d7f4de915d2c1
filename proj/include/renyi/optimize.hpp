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

#ifndef RENYI_OPTIMIZE_HPP
#define RENYI_OPTIMIZE_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renyi/channels.hpp"
#include "renyi/divergence.hpp"
#include "renyi/states.hpp"

namespace renyi {

// Iterates whose smallest eigenvalue drops below this are flagged as
// boundary-drifting (the optimum may sit on the boundary of the state set).
inline constexpr double kBoundaryFlagTol = 1e-6;

struct OptimizerConfig {
  int restarts = 8;
  int max_iters = 2000;
  double step_init = 0.1;
  double grad_eps = 1e-6;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

inline void validate(const OptimizerConfig& c) {
  if (c.restarts <= 0 || c.max_iters <= 0 || c.step_init <= 0.0 || c.grad_eps <= 0.0 || c.tol <= 0.0 ||
      c.tol >= 1e-3)
    throw std::invalid_argument("OptimizerConfig: all fields must be positive and tol < 1e-3");
}

enum class Direction { Minimize, Maximize };

struct OptimizerResult {
  double value;
  DensityMatrix argopt;
  bool converged;
  int iterations;
  int best_restart;
  bool boundary;
  std::vector<std::string> diagnostics;
};

namespace detail {

struct CoreResult {
  Eigen::VectorXd x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  bool aborted = false;
  std::string note;
};

// Gradient descent with central-difference gradients and step halving on
// non-improvement. Stops once 20 consecutive iterations improve by less than
// tol. NaN objective values abort the run; +infinity is a legal "worse".
inline CoreResult minimize_core(const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x,
                                const OptimizerConfig& cfg) {
  CoreResult res;
  double fx = f(x);
  if (std::isnan(fx)) return {std::move(x), fx, false, 0, true, "objective NaN at initial point"};
  if (std::isinf(fx)) return {std::move(x), fx, false, 0, true, "objective infinite at initial point"};
  const Eigen::Index n = x.size();
  Eigen::VectorXd grad(n), trial(n);
  double step = cfg.step_init;
  int stale = 0;
  int it = 0;
  for (; it < cfg.max_iters && stale < 20; ++it) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double xi = x(i);
      x(i) = xi + cfg.grad_eps;
      const double fp = f(x);
      x(i) = xi - cfg.grad_eps;
      const double fm = f(x);
      x(i) = xi;
      if (std::isnan(fp) || std::isnan(fm))
        return {std::move(x), fx, false, it, true, "objective NaN during gradient"};
      if (std::isfinite(fp) && std::isfinite(fm)) {
        grad(i) = (fp - fm) / (2.0 * cfg.grad_eps);
      } else if (std::isfinite(fp)) {
        grad(i) = (fp - fx) / cfg.grad_eps;  // one-sided next to a domain wall
      } else if (std::isfinite(fm)) {
        grad(i) = (fx - fm) / cfg.grad_eps;
      } else {
        grad(i) = 0.0;
      }
    }
    bool improved = false;
    for (int halvings = 0; halvings < 60 && step > 1e-18; ++halvings) {
      trial = x - step * grad;
      const double ft = f(trial);
      if (std::isnan(ft)) return {std::move(x), fx, false, it, true, "objective NaN at trial point"};
      if (ft < fx) {
        stale = (fx - ft < cfg.tol) ? stale + 1 : 0;
        x.swap(trial);
        fx = ft;
        step *= 1.6;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) {
      ++stale;
      if (step <= 1e-18) {
        ++it;
        break;
      }
    }
  }
  res.x = std::move(x);
  res.value = fx;
  res.converged = it < cfg.max_iters;
  res.iterations = it;
  return res;
}

inline Matrix params_to_factor(const Eigen::VectorXd& x, int dim) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Eigen::Index base = 2 * (static_cast<Eigen::Index>(i) * dim + j);
      a(i, j) = Complex(x(base), x(base + 1));
    }
  return a;
}

inline Eigen::VectorXd factor_to_params(const Matrix& a) {
  const int dim = static_cast<int>(a.rows());
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Eigen::Index base = 2 * (static_cast<Eigen::Index>(i) * dim + j);
      x(base) = a(i, j).real();
      x(base + 1) = a(i, j).imag();
    }
  return x;
}

// sigma = A A† / tr(A A†); NaN marks an unusable parameter point.
inline std::optional<DensityMatrix> params_to_density(const Eigen::VectorXd& x, int dim) {
  if (!x.allFinite()) return std::nullopt;
  const double total = x.squaredNorm();  // = tr(A A†)
  if (total < 1e-100) return std::nullopt;
  Matrix a = params_to_factor(x, dim);
  Matrix s = (a * a.adjoint()) / total;
  return DensityMatrix(std::move(s));
}

}  // namespace detail

// Multi-start gradient optimization over density matrices through the
// unconstrained factorization sigma = A A† / tr(A A†). Warm starts run first,
// then Ginibre-random restarts up to config.restarts total.
inline OptimizerResult optimize_over_density(const std::function<double(const DensityMatrix&)>& objective,
                                             int dim, Direction direction, const OptimizerConfig& config,
                                             const std::vector<DensityMatrix>& warm_starts = {}) {
  validate(config);
  if (dim <= 0) throw std::invalid_argument("optimize_over_density: dim must be positive");
  const double sign = direction == Direction::Maximize ? -1.0 : 1.0;
  auto wrapped = [&](const Eigen::VectorXd& x) -> double {
    std::optional<DensityMatrix> sigma = detail::params_to_density(x, dim);
    if (!sigma) return std::numeric_limits<double>::quiet_NaN();
    return sign * objective(*sigma);
  };
  const int total = std::max(config.restarts, static_cast<int>(warm_starts.size()));
  std::vector<std::string> diagnostics;
  std::optional<detail::CoreResult> best;
  int best_restart = -1;
  for (int r = 0; r < total; ++r) {
    Eigen::VectorXd x0;
    if (r < static_cast<int>(warm_starts.size())) {
      const DensityMatrix& w = warm_starts[static_cast<std::size_t>(r)];
      if (w.dim() != dim) throw std::invalid_argument("optimize_over_density: warm start dimension mismatch");
      x0 = detail::factor_to_params(w.power(0.5));
    } else {
      RandomStream stream(derive_seed(config.seed, static_cast<std::uint64_t>(r)));
      x0 = detail::factor_to_params(ginibre_matrix(dim, dim, stream));
    }
    detail::CoreResult run = detail::minimize_core(wrapped, std::move(x0), config);
    if (run.aborted) {
      diagnostics.push_back("restart " + std::to_string(r) + " aborted: " + run.note);
      continue;
    }
    if (!best || run.value < best->value) {
      best = std::move(run);
      best_restart = r;
    }
  }
  if (!best) throw std::runtime_error("optimize_over_density: every restart aborted");
  DensityMatrix argopt = *detail::params_to_density(best->x, dim);
  const bool boundary = argopt.min_eigenvalue() < kBoundaryFlagTol;
  if (boundary) diagnostics.push_back("argopt drifted to the state-space boundary");
  return {sign * best->value, std::move(argopt), best->converged, best->iterations,
          best_restart,       boundary,          std::move(diagnostics)};
}

namespace detail {

// D_alpha(rho || L (x) sigma) as a function of the right factor sigma; the
// left factor's fractional powers are precomputed once.
class ProductDivergenceObjective {
 public:
  ProductDivergenceObjective(Matrix rho, int dim_left, int dim_right, const Matrix& left,
                             const AlphaOrder& alpha)
      : rho_(std::move(rho)), dim_left_(dim_left), dim_right_(dim_right), left_(left), alpha_(alpha) {
    if (rho_.rows() != static_cast<Eigen::Index>(dim_left) * dim_right)
      throw std::invalid_argument("ProductDivergenceObjective: dimension mismatch");
    SpectralPsd spec(left, "ProductDivergenceObjective");
    left_full_rank_ = spec.full_rank();
    left_support_ = spec.support();
    if (!alpha_.is_one()) {
      const double expo = alpha_.is_infinite() ? -0.5 : -0.5 / alpha_.conjugate();
      left_pow_ = spec.power(expo);
    }
  }

  double operator()(const DensityMatrix& sigma) const {
    if (sigma.dim() != dim_right_) throw std::invalid_argument("ProductDivergenceObjective: sigma dim");
    if (alpha_.is_one())
      return sandwiched_renyi_general(rho_, kron(left_, sigma.matrix()), alpha_).value;
    if (alpha_.greater_than_one() && !(left_full_rank_ && sigma.full_rank())) {
      const Matrix pi = kron(left_support_, sigma.support());
      const Matrix rest = Matrix::Identity(pi.rows(), pi.cols()) - pi;
      if (operator_norm(rest * rho_ * rest) > kSupportViolationTol)
        return std::numeric_limits<double>::infinity();
    }
    const double expo = alpha_.is_infinite() ? -0.5 : -0.5 / alpha_.conjugate();
    const Matrix w = kron(left_pow_, sigma.power(expo));
    const Matrix m = w * rho_ * w;
    if (alpha_.is_infinite()) return std::log(operator_norm(m));
    const double a = alpha_.value();
    return std::log(spectrum_power_sum(psd_spectrum(m), a)) / (a - 1.0);
  }

 private:
  Matrix rho_;
  int dim_left_;
  int dim_right_;
  Matrix left_;
  AlphaOrder alpha_;
  bool left_full_rank_ = true;
  Matrix left_support_;
  Matrix left_pow_;
};

inline void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.dims().size() != 2) throw std::invalid_argument(std::string(what) + ": bipartite dims required");
}

}  // namespace detail

// H_alpha(A|B) = -inf_{sigma_B} D_alpha(rho_AB || I_A (x) sigma_B). The reduced
// state rho_B seeds the first restart.
inline OptimizerResult conditional_renyi_entropy(const DensityMatrix& rho_ab, const AlphaOrder& alpha,
                                                 const OptimizerConfig& config) {
  detail::require_bipartite(rho_ab, "conditional_renyi_entropy");
  const int da = rho_ab.dims()[0], db = rho_ab.dims()[1];
  detail::ProductDivergenceObjective objective(rho_ab.matrix(), da, db,
                                               Matrix::Identity(da, da), alpha);
  DensityMatrix rho_b = partial_trace(rho_ab, {1});
  OptimizerResult res = optimize_over_density(objective, db, Direction::Minimize, config, {rho_b});
  res.value = -res.value;
  return res;
}

// I_alpha(A;B) = min_{sigma_B} D_alpha(rho_AB || rho_A (x) sigma_B). Extra warm
// starts run after rho_B (e.g. product candidates in additivity studies).
inline OptimizerResult mutual_info_primal(const DensityMatrix& rho_ab, const AlphaOrder& alpha,
                                          const OptimizerConfig& config,
                                          const std::vector<DensityMatrix>& extra_warm_starts = {}) {
  detail::require_bipartite(rho_ab, "mutual_info_primal");
  const int da = rho_ab.dims()[0], db = rho_ab.dims()[1];
  Matrix rho_a = partial_trace(rho_ab.matrix(), rho_ab.dims(), {0});
  detail::ProductDivergenceObjective objective(rho_ab.matrix(), da, db, rho_a, alpha);
  std::vector<DensityMatrix> warm{partial_trace(rho_ab, {1})};
  warm.insert(warm.end(), extra_warm_starts.begin(), extra_warm_starts.end());
  return optimize_over_density(objective, db, Direction::Minimize, config, warm);
}

namespace detail {

// tr_{AC} [ (X_A (x) I_B (x) Y_C) |psi><psi| (X_A (x) I_B (x) Y_C)† ] for a
// pure |psi> on A (x) B (x) C with Hermitian local factors.
inline Matrix sandwiched_marginal_b(const Vector& psi, int da, int db, int dc, const Matrix& xa,
                                    const Matrix& yc) {
  std::vector<Complex> t1(static_cast<std::size_t>(da) * db * dc, Complex(0.0));
  auto idx = [db, dc](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * db + static_cast<std::size_t>(b)) * dc + static_cast<std::size_t>(c);
  };
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < dc; ++c) {
        Complex acc = 0.0;
        for (int cp = 0; cp < dc; ++cp) acc += yc(c, cp) * psi(static_cast<Eigen::Index>(idx(a, b, cp)));
        t1[idx(a, b, c)] = acc;
      }
  std::vector<Complex> phi(static_cast<std::size_t>(da) * db * dc, Complex(0.0));
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < dc; ++c) {
        Complex acc = 0.0;
        for (int ap = 0; ap < da; ++ap) acc += xa(a, ap) * t1[idx(ap, b, c)];
        phi[idx(a, b, c)] = acc;
      }
  Matrix m = Matrix::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int bp = 0; bp < db; ++bp) {
      Complex acc = 0.0;
      for (int a = 0; a < da; ++a)
        for (int c = 0; c < dc; ++c) acc += phi[idx(a, b, c)] * std::conj(phi[idx(a, bp, c)]);
      m(b, bp) = acc;
    }
  return m;
}

}  // namespace detail

// Dual expression for I_alpha(A;B), alpha > 1: maximize the beta-quasi-norm of
// the sandwiched B-marginal of a purification over tau_C, with 1/alpha + 1/beta = 2.
inline OptimizerResult mutual_info_dual(const DensityMatrix& rho_ab, const AlphaOrder& alpha,
                                        const OptimizerConfig& config) {
  detail::require_bipartite(rho_ab, "mutual_info_dual");
  if (!alpha.greater_than_one()) throw std::invalid_argument("mutual_info_dual: alpha > 1 required");
  const int da = rho_ab.dims()[0], db = rho_ab.dims()[1];
  const double conj = alpha.conjugate();
  const double beta = alpha.is_infinite() ? 0.5 : 1.0 / (2.0 - 1.0 / alpha.value());
  PureState psi = purify(rho_ab);
  const int dc = psi.dims()[2];
  Matrix rho_a = partial_trace(rho_ab.matrix(), rho_ab.dims(), {0});
  const Matrix xa = detail::SpectralPsd(rho_a, "mutual_info_dual").power(-0.5 / conj);
  const NormOrder beta_order(beta);
  auto objective = [&](const DensityMatrix& tau) -> double {
    const Matrix yc = tau.power(0.5 / conj);
    const Matrix m = detail::sandwiched_marginal_b(psi.amplitudes(), da, db, dc, xa, yc);
    const double sum = detail::spectrum_power_sum(detail::psd_spectrum(m), beta);
    return sum > 0.0 ? std::pow(sum, 1.0 / beta) : 0.0;
  };
  DensityMatrix rho_c(partial_trace(psi.density().matrix(), psi.dims(), {2}));
  OptimizerResult res = optimize_over_density(objective, dc, Direction::Maximize, config, {rho_c});
  res.value = conj * std::log(res.value);
  return res;
}

// f(sigma_B, tau_C) = tr[rho_BC (sigma^{-1/a'} (x) tau^{1/a'})].
inline double minimax_objective(const Matrix& rho_bc, int db, int dc, double alpha_conj,
                                const DensityMatrix& sigma, const DensityMatrix& tau) {
  const Matrix a = sigma.power(-1.0 / alpha_conj);
  const Matrix b = tau.power(1.0 / alpha_conj);
  Complex f = 0.0;
  for (int i = 0; i < db; ++i)
    for (int k = 0; k < db; ++k) {
      Complex t = 0.0;
      for (int j = 0; j < dc; ++j)
        for (int l = 0; l < dc; ++l)
          t += rho_bc(static_cast<Eigen::Index>(i) * dc + j, static_cast<Eigen::Index>(k) * dc + l) * b(l, j);
      f += a(k, i) * t;
    }
  return f.real();
}

enum class MinimaxOrder { InfSup, SupInf };

struct MinimaxResult {
  double value;
  bool converged;
  int rounds;
  DensityMatrix sigma;
  DensityMatrix tau;
};

// Alternating best responses for inf_sigma sup_tau f (or the reversed order).
// The returned value is a final full inner optimization at the outer iterate,
// so InfSup upper-bounds the saddle value and SupInf lower-bounds it.
inline MinimaxResult minimax_value(const DensityMatrix& rho_bc, const AlphaOrder& alpha, MinimaxOrder order,
                                   const OptimizerConfig& config) {
  detail::require_bipartite(rho_bc, "minimax_value");
  if (!alpha.greater_than_one()) throw std::invalid_argument("minimax_value: alpha > 1 required");
  validate(config);
  const int db = rho_bc.dims()[0], dc = rho_bc.dims()[1];
  const double conj = alpha.conjugate();
  const Matrix& rho = rho_bc.matrix();

  OptimizerConfig inner = config;
  inner.restarts = 1;

  DensityMatrix sigma = partial_trace(rho_bc, {0});
  DensityMatrix tau = partial_trace(rho_bc, {1});

  auto best_tau = [&](const DensityMatrix& s, const DensityMatrix& warm, int restarts) {
    OptimizerConfig cfg = inner;
    cfg.restarts = restarts;
    cfg.seed = derive_seed(config.seed, 0x7au);
    auto f = [&](const DensityMatrix& t) { return minimax_objective(rho, db, dc, conj, s, t); };
    return optimize_over_density(f, dc, Direction::Maximize, cfg, {warm});
  };
  auto best_sigma = [&](const DensityMatrix& t, const DensityMatrix& warm, int restarts) {
    OptimizerConfig cfg = inner;
    cfg.restarts = restarts;
    cfg.seed = derive_seed(config.seed, 0x515u);
    auto f = [&](const DensityMatrix& s) { return minimax_objective(rho, db, dc, conj, s, t); };
    return optimize_over_density(f, db, Direction::Minimize, cfg, {warm});
  };

  const int first_restarts = std::min(config.restarts, 2);
  double value = minimax_objective(rho, db, dc, conj, sigma, tau);
  bool converged = false;
  int round = 0;
  for (; round < 100; ++round) {
    const int restarts = round == 0 ? first_restarts : 1;
    if (order == MinimaxOrder::InfSup) {
      tau = best_tau(sigma, tau, restarts).argopt;
      sigma = best_sigma(tau, sigma, restarts).argopt;
    } else {
      sigma = best_sigma(tau, sigma, restarts).argopt;
      tau = best_tau(sigma, tau, restarts).argopt;
    }
    const double next = minimax_objective(rho, db, dc, conj, sigma, tau);
    if (std::abs(next - value) < 10.0 * config.tol) {
      value = next;
      converged = true;
      ++round;
      break;
    }
    value = next;
  }
  double final_value;
  if (order == MinimaxOrder::InfSup) {
    final_value = best_tau(sigma, tau, first_restarts).value;  // sup_tau at the outer argmin
  } else {
    final_value = best_sigma(tau, sigma, first_restarts).value;  // inf_sigma at the outer argmax
  }
  return {final_value, converged, round, std::move(sigma), std::move(tau)};
}

// Pure-state ensemble feeding a channel.
struct Ensemble {
  std::vector<double> probs;
  std::vector<Vector> states;
};

struct EnsembleResult {
  double value;
  Ensemble argopt;
  bool converged;
  int best_restart;
  std::vector<std::string> diagnostics;
};

namespace detail {

// D_alpha(rho_XB || rho_X (x) sigma) for a c-q state, block by block:
// (1/(a-1)) log sum_x p_x tr (sigma^{-1/(2a')} w_x sigma^{-1/(2a')})^a.
inline double cq_divergence(const std::vector<double>& probs, const std::vector<Matrix>& outputs,
                            const DensityMatrix& sigma, const AlphaOrder& alpha) {
  const double expo = alpha.is_infinite() ? -0.5 : -0.5 / alpha.conjugate();
  const Matrix w = sigma.power(expo);
  if (alpha.greater_than_one() && !sigma.full_rank()) {
    const Matrix pi = sigma.support();
    const Matrix rest = Matrix::Identity(pi.rows(), pi.cols()) - pi;
    for (std::size_t x = 0; x < probs.size(); ++x)
      if (probs[x] > kEpsSupport && operator_norm(rest * outputs[x] * rest) > kSupportViolationTol)
        return std::numeric_limits<double>::infinity();
  }
  if (alpha.is_infinite()) {
    double worst = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x)
      if (probs[x] > 0.0) worst = std::max(worst, operator_norm(w * outputs[x] * w));
    return std::log(worst);
  }
  const double a = alpha.value();
  double sum = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    if (probs[x] <= 0.0) continue;
    sum += probs[x] * spectrum_power_sum(psd_spectrum(w * outputs[x] * w), a);
  }
  return std::log(sum) / (a - 1.0);
}

struct DecodedEnsemble {
  std::vector<double> probs;
  std::vector<Vector> states;
  std::vector<Matrix> outputs;
};

inline DecodedEnsemble decode_ensemble(const Eigen::VectorXd& z, int k, int d_in, const Channel& phi) {
  DecodedEnsemble e;
  double zmax = z(0);
  for (int x = 1; x < k; ++x) zmax = std::max(zmax, z(x));
  double norm = 0.0;
  e.probs.resize(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) {
    e.probs[static_cast<std::size_t>(x)] = std::exp(z(x) - zmax);
    norm += e.probs[static_cast<std::size_t>(x)];
  }
  for (double& p : e.probs) p /= norm;
  for (int x = 0; x < k; ++x) {
    Vector v(d_in);
    for (int j = 0; j < d_in; ++j) {
      const Eigen::Index base = k + 2 * (static_cast<Eigen::Index>(x) * d_in + j);
      v(j) = Complex(z(base), z(base + 1));
    }
    const double n = v.norm();
    if (n < 1e-9) {
      v.setZero();
      v(x % d_in) = 1.0;
    } else {
      v /= n;
    }
    e.outputs.push_back(phi.apply(v * v.adjoint()));
    e.states.push_back(std::move(v));
  }
  return e;
}

inline Eigen::VectorXd encode_ensemble(const Ensemble& e, int k, int d_in) {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(k + 2 * static_cast<Eigen::Index>(k) * d_in);
  for (int x = 0; x < k; ++x) z(x) = std::log(std::max(e.probs[static_cast<std::size_t>(x)], 1e-30));
  for (int x = 0; x < k; ++x)
    for (int j = 0; j < d_in; ++j) {
      const Eigen::Index base = k + 2 * (static_cast<Eigen::Index>(x) * d_in + j);
      z(base) = e.states[static_cast<std::size_t>(x)](j).real();
      z(base + 1) = e.states[static_cast<std::size_t>(x)](j).imag();
    }
  return z;
}

}  // namespace detail

// Heuristic lower bound on the alpha-Holevo information of a channel with a
// size-k pure ensemble. Outer ascent over the softmax/unit-vector ensemble
// parameters: gradients come from the c-q divergence at the frozen inner
// minimizer (Danskin direction), but a candidate step is only accepted if it
// improves the true inner minimum, re-solved warm. The reported value is
// always an inner minimum at a feasible ensemble, hence a sound lower bound
// on chi_alpha.
inline EnsembleResult holevo_alpha(const Channel& phi, int k, const AlphaOrder& alpha,
                                   const OptimizerConfig& config, const std::vector<Ensemble>& seed_ensembles = {},
                                   const std::vector<DensityMatrix>& sigma_seeds = {}) {
  validate(config);
  if (k < 1) throw std::invalid_argument("holevo_alpha: ensemble size must be >= 1");
  const int d_in = phi.input_dim();
  const int d_out = phi.output_dim();

  OptimizerConfig inner = config;
  inner.restarts = 1;
  inner.seed = derive_seed(config.seed, 0xC0u);

  // Inner minimization over sigma for a fixed decoded ensemble.
  auto inner_solve = [&](const detail::DecodedEnsemble& e,
                         const std::vector<DensityMatrix>& warm) -> OptimizerResult {
    Matrix avg = Matrix::Zero(d_out, d_out);
    for (std::size_t x = 0; x < e.probs.size(); ++x) avg += e.probs[x] * e.outputs[x];
    std::vector<DensityMatrix> starts = warm;
    starts.emplace_back(avg);
    for (const DensityMatrix& s : sigma_seeds) starts.push_back(s);
    auto f = [&](const DensityMatrix& sigma) { return detail::cq_divergence(e.probs, e.outputs, sigma, alpha); };
    OptimizerConfig cfg = inner;
    cfg.restarts = static_cast<int>(starts.size());
    return optimize_over_density(f, d_out, Direction::Minimize, cfg, starts);
  };

  const int total = std::max(config.restarts, static_cast<int>(seed_ensembles.size()));
  std::vector<std::string> diagnostics;
  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_z;
  bool best_converged = false;
  int best_restart = -1;

  for (int r = 0; r < total; ++r) {
    Eigen::VectorXd z;
    if (r < static_cast<int>(seed_ensembles.size())) {
      const Ensemble& seed = seed_ensembles[static_cast<std::size_t>(r)];
      if (static_cast<int>(seed.probs.size()) != k)
        throw std::invalid_argument("holevo_alpha: seed ensemble size mismatch");
      z = detail::encode_ensemble(seed, k, d_in);
    } else {
      RandomStream stream(derive_seed(config.seed, 0x900dULL + static_cast<std::uint64_t>(r)));
      z = Eigen::VectorXd::Zero(k + 2 * static_cast<Eigen::Index>(k) * d_in);
      for (Eigen::Index i = k; i < z.size(); ++i) z(i) = stream.gaussian();
    }
    detail::DecodedEnsemble e = detail::decode_ensemble(z, k, d_in, phi);
    OptimizerResult sol = inner_solve(e, {});
    double value = sol.value;
    DensityMatrix sigma_star = sol.argopt;
    bool converged = false;

    const Eigen::Index n = z.size();
    Eigen::VectorXd grad(n), trial(n);
    double step = config.step_init;
    int stale = 0;
    bool floored = false;
    for (int it = 0; it < config.max_iters && stale < 20; ++it) {
      // Ascent direction of the fixed-sigma objective at the current iterate.
      for (Eigen::Index i = 0; i < n; ++i) {
        const double zi = z(i);
        z(i) = zi + config.grad_eps;
        detail::DecodedEnsemble ep = detail::decode_ensemble(z, k, d_in, phi);
        const double fp = detail::cq_divergence(ep.probs, ep.outputs, sigma_star, alpha);
        z(i) = zi - config.grad_eps;
        detail::DecodedEnsemble em = detail::decode_ensemble(z, k, d_in, phi);
        const double fm = detail::cq_divergence(em.probs, em.outputs, sigma_star, alpha);
        z(i) = zi;
        grad(i) = (std::isfinite(fp) && std::isfinite(fm)) ? (fp - fm) / (2.0 * config.grad_eps) : 0.0;
      }
      bool improved = false;
      for (int halvings = 0; halvings < 25 && step > 1e-18; ++halvings) {
        trial = z + step * grad;
        if (!trial.allFinite()) {
          step *= 0.5;
          continue;
        }
        detail::DecodedEnsemble et = detail::decode_ensemble(trial, k, d_in, phi);
        OptimizerResult next = inner_solve(et, {sigma_star});
        if (next.value > value) {
          // Outer progress below 10x tol is indistinguishable from inner-solve noise.
          stale = (next.value - value < 10.0 * config.tol) ? stale + 1 : 0;
          z.swap(trial);
          value = next.value;
          sigma_star = std::move(next.argopt);
          step *= 1.6;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) {
        ++stale;
        if (step <= 1e-18) {
          floored = true;
          break;
        }
      }
    }
    converged = stale >= 20 || floored;
    if (!converged)
      diagnostics.push_back("restart " + std::to_string(r) + " stopped before the ascent stabilized");
    if (value > best_value) {
      best_value = value;
      best_z = z;
      best_converged = converged;
      best_restart = r;
    }
  }
  if (best_restart < 0) throw std::runtime_error("holevo_alpha: every restart failed");
  detail::DecodedEnsemble e = detail::decode_ensemble(best_z, k, d_in, phi);
  Ensemble argopt{e.probs, e.states};
  return {best_value, std::move(argopt), best_converged, best_restart, std::move(diagnostics)};
}

}  // namespace renyi

#endif  // RENYI_OPTIMIZE_HPP
