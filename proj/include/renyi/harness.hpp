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

#ifndef RENYI_HARNESS_HPP
#define RENYI_HARNESS_HPP

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "renyi/io.hpp"
#include "renyi/optimize.hpp"

namespace renyi {

inline constexpr double kMarginClamp = 1e12;

// Randomized-check plan. An infinite entry in `alphas` stands for the
// alpha = infinity grid point.
struct TrialPlan {
  std::vector<int> dims{2, 3};
  std::vector<double> alphas{};
  int trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // overrides the check's headline tolerance
  int only_trial = -1;              // replay: run just this trial index
};

inline void validate(const TrialPlan& plan) {
  if (plan.trials < 1) throw std::invalid_argument("TrialPlan: trials must be >= 1");
  for (int d : plan.dims)
    if (d < 2) throw std::invalid_argument("TrialPlan: dims must be >= 2");
  for (double a : plan.alphas)
    if (!(a > 0.0)) throw std::invalid_argument("TrialPlan: alphas must be positive");
}

// Margins are normalized to units of each assertion's tolerance, so one
// failure rule covers checks that mix tolerances: a trial fails when its
// worst normalized margin drops below -1.
struct PropertyReport {
  std::string check;
  int trials = 0;
  int failures = 0;
  int inconclusive = 0;
  int warnings = 0;
  double worst_margin = kMarginClamp;
  std::uint64_t seed = 0;
  double elapsed_s = 0.0;
  std::vector<Json> failure_payloads;
};

namespace detail {

class MarginTracker {
 public:
  void add(double slack, double tol) {
    double m;
    if (std::isnan(slack)) {
      m = -kMarginClamp;
    } else if (std::isinf(slack)) {
      m = slack > 0.0 ? kMarginClamp : -kMarginClamp;
    } else {
      m = std::clamp(slack / tol, -kMarginClamp, kMarginClamp);
    }
    worst_ = std::min(worst_, m);
  }
  double worst() const { return worst_; }
  bool failed() const { return worst_ < -1.0; }

 private:
  double worst_ = kMarginClamp;
};

struct TrialOutcome {
  MarginTracker margins;
  bool inconclusive = false;
  int warnings = 0;
  Json inputs;
};

inline PropertyReport run_trials(const std::string& name, const TrialPlan& plan,
                                 const std::function<void(int, std::uint64_t, TrialOutcome&)>& body) {
  validate(plan);
  const auto t0 = std::chrono::steady_clock::now();
  PropertyReport rep;
  rep.check = name;
  rep.seed = plan.seed;
  for (int t = 0; t < plan.trials; ++t) {
    if (plan.only_trial >= 0 && t != plan.only_trial) continue;
    TrialOutcome out;
    body(t, derive_seed(plan.seed, static_cast<std::uint64_t>(t)), out);
    ++rep.trials;
    rep.warnings += out.warnings;
    if (out.inconclusive) ++rep.inconclusive;
    if (out.margins.failed()) {
      ++rep.failures;
      Json payload = std::move(out.inputs);
      payload["check"] = name;
      payload["trial"] = t;
      payload["seed"] = plan.seed;
      payload["margin"] = out.margins.worst();
      payload["plan"] = Json{{"dims", plan.dims}, {"alphas", plan.alphas}, {"trials", plan.trials}};
      rep.failure_payloads.push_back(std::move(payload));
    }
    rep.worst_margin = std::min(rep.worst_margin, out.margins.worst());
  }
  rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline AlphaOrder to_alpha(double a) {
  return std::isinf(a) ? AlphaOrder::infinity() : AlphaOrder(a);
}

inline std::vector<double> alphas_or(const TrialPlan& plan, std::vector<double> fallback) {
  return plan.alphas.empty() ? std::move(fallback) : plan.alphas;
}

inline Matrix full_rank_ginibre(int dim, RandomStream& stream) {
  for (;;) {
    Matrix x = ginibre_matrix(dim, dim, stream);
    RealVector sv = singular_values(x);
    if (sv(sv.size() - 1) > 1e-3 * sv(0)) return x;
  }
}

inline std::vector<double> random_simplex(int n, RandomStream& stream) {
  std::vector<double> p(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : p) {
    x = -std::log(stream.uniform_open());
    sum += x;
  }
  for (double& x : p) x /= sum;
  return p;
}

inline OptimizerConfig tuned_config(std::uint64_t seed, int restarts) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed-form checks
// ---------------------------------------------------------------------------

// D_alpha >= 0 with equality only at rho = sigma; the infinite branch on
// orthogonal supports counts as satisfied. Strictness below the quantitative
// proxy is recorded as a warning, not a failure.
inline PropertyReport check_positivity(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-9);
  const std::vector<double> alphas = detail::alphas_or(plan, {0.5, 0.75, 1.5, 2.0, 3.0, 10.0});
  return detail::run_trials("positivity", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int dim = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    if (t % 25 == 24) {
      // Orthogonal-support instance: rho lives in the kernel of sigma.
      DensityMatrix sigma = random_density(dim, dim - 1, derive_seed(s, 1));
      Vector kernel = sigma.eig().eigenvectors.col(0);
      DensityMatrix rho(Matrix(kernel * kernel.adjoint()));
      out.inputs["rho"] = matrix_to_json(rho.matrix());
      out.inputs["sigma"] = matrix_to_json(sigma.matrix());
      for (double a : alphas) {
        DivergenceValue d = sandwiched_renyi(rho, sigma, detail::to_alpha(a));
        if (a > 1.0 || std::isinf(a)) {
          out.margins.add(d.is_infinite() && d.support_violated ? 1.0 : -2.0, 1.0);
        } else {
          out.margins.add(d.value, tol);
        }
      }
      return;
    }
    DensityMatrix rho = random_density(dim, 1 + t % dim, derive_seed(s, 1));
    DensityMatrix sigma = random_density(dim, dim, derive_seed(s, 2));
    out.inputs["rho"] = matrix_to_json(rho.matrix());
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    const double dist = trace_distance(rho, sigma);
    for (double a : alphas) {
      AlphaOrder order = detail::to_alpha(a);
      const DivergenceValue d = sandwiched_renyi(rho, sigma, order);
      out.margins.add(d.value, tol);
      const DivergenceValue self = sandwiched_renyi(rho, rho, order);
      out.margins.add(self.value, tol);
      out.margins.add(-self.value, tol);
      if (dist >= 0.1 && d.value < 1e-6) ++out.warnings;
    }
  });
}

// Data processing: D_alpha(rho||sigma) >= D_alpha(Phi rho||Phi sigma) over a
// channel pool spanning Stinespring-random, unitary, depolarizing and partial
// trace; unitary instances must sit at equality.
inline PropertyReport check_dpi(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-8);
  const std::vector<double> alphas =
      detail::alphas_or(plan, {0.5, 0.8, 1.25, 2.0, 4.0, std::numeric_limits<double>::infinity()});
  return detail::run_trials("dpi", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const std::size_t nd = plan.dims.size();
    const int d = plan.dims[static_cast<std::size_t>(t) % nd];
    const int kind = t % 4;
    int in_dim = d;
    Channel phi = Channel::identity(d);
    switch (kind) {
      case 0:
        phi = random_channel(d, d, d, derive_seed(s, 3));
        break;
      case 1:
        phi = random_channel(d, d, 1, derive_seed(s, 3));
        break;
      case 2:
        phi = Channel::depolarizing(d);
        break;
      default: {
        const int d2 = plan.dims[(static_cast<std::size_t>(t) + 1) % nd];
        in_dim = d * d2;
        phi = Channel::partial_trace_channel({d, d2}, {0});
        break;
      }
    }
    DensityMatrix rho = random_density(in_dim, 1 + t % in_dim, derive_seed(s, 1));
    DensityMatrix sigma = random_density(in_dim, in_dim, derive_seed(s, 2));
    DensityMatrix rho_out = apply_channel(phi, rho);
    DensityMatrix sigma_out = apply_channel(phi, sigma);
    out.inputs["rho"] = matrix_to_json(rho.matrix());
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    out.inputs["channel"] = channel_to_json(phi);
    for (double a : alphas) {
      AlphaOrder order = detail::to_alpha(a);
      const double before = sandwiched_renyi(rho, sigma, order).value;
      const double after = sandwiched_renyi(rho_out, sigma_out, order).value;
      out.margins.add(before - after, tol);
      if (kind == 1) out.margins.add(-std::abs(before - after), 1e-9);
    }
  });
}

// Every sampled ratio ||Gamma_{Phi sigma}^{-1} Phi(Gamma_sigma X)||_{a,Phi
// sigma} / ||X||_{a,sigma} is a lower-bound certificate of the contraction
// norm and must stay <= 1. The identity input saturates the alpha = infinity
// case exactly.
inline PropertyReport check_contraction(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-8);
  const std::vector<double> alphas = detail::alphas_or(plan, {1.5, 2.0, 4.0});
  constexpr int kSamples = 20;
  return detail::run_trials("contraction", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 1));
    Channel phi = Channel::identity(d);
    detail::SpectralPsd phi_sigma_spec(Matrix::Identity(d, d), "contraction");
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t cs = derive_seed(s, 100 + attempt);
      switch (t % 3) {
        case 0:
          phi = random_channel(d, d, d, cs);
          break;
        case 1:
          phi = random_channel(d, d, 1, cs);
          break;
        default:
          phi = Channel::depolarizing(d);
          break;
      }
      phi_sigma_spec = detail::SpectralPsd(phi.apply(sigma.matrix()), "contraction");
      if (phi_sigma_spec.full_rank()) break;
      if (attempt > 16) throw std::runtime_error("check_contraction: could not reach full-rank Phi(sigma)");
    }
    const Matrix phi_sigma = phi_sigma_spec.power(1.0);
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    out.inputs["channel"] = channel_to_json(phi);
    RandomStream stream(derive_seed(s, 2));
    for (int j = 0; j < kSamples; ++j) {
      const Matrix x = ginibre_matrix(d, d, stream);
      const Matrix pushed = gamma_map(phi_sigma, phi.apply(gamma_map(sigma.matrix(), x, 1.0)), -1.0);
      for (double a : alphas) {
        const double ratio = weighted_norm(pushed, a, phi_sigma) / weighted_norm(x, a, sigma.matrix());
        out.margins.add(1.0 - ratio, tol);
      }
    }
    const Matrix pushed_id =
        gamma_map(phi_sigma, phi.apply(sigma.matrix()), -1.0);
    const double r_inf = weighted_norm(pushed_id, NormOrder::infinity(), phi_sigma) /
                         weighted_norm(Matrix::Identity(d, d), NormOrder::infinity(), sigma.matrix());
    out.margins.add(-std::abs(r_inf - 1.0), 1e-9);
  });
}

// alpha -> D_alpha is increasing above 1; the norm-power form is monotone as
// well, and the whole curve stays below D_infinity.
inline PropertyReport check_monotonicity_alpha(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-9);
  std::vector<double> grid = detail::alphas_or(plan, {1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0});
  std::sort(grid.begin(), grid.end());
  return detail::run_trials("monotonicity", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    DensityMatrix rho = random_density(d, 1 + t % d, derive_seed(s, 1));
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 2));
    out.inputs["rho"] = matrix_to_json(rho.matrix());
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    const Matrix core = gamma_map(sigma.matrix(), rho.matrix(), -1.0);
    std::vector<double> dvals, npow;
    for (double a : grid) {
      AlphaOrder order(a);
      dvals.push_back(sandwiched_renyi(rho, sigma, order).value);
      npow.push_back(std::pow(weighted_norm(core, a, sigma.matrix()), order.conjugate()));
    }
    const double d_inf = sandwiched_renyi(rho, sigma, AlphaOrder::infinity()).value;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      out.margins.add(dvals[i + 1] - dvals[i], tol);
      out.margins.add(npow[i + 1] - npow[i], tol);
    }
    for (double v : dvals) out.margins.add(d_inf - v, 1e-8);
  });
}

// 1/alpha -> D_alpha/alpha' is convex: three-point secant inequality over all
// grid triples.
inline PropertyReport check_convexity(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-8);
  std::vector<double> grid = detail::alphas_or(plan, {1.2, 1.5, 2.0, 3.0, 6.0});
  std::sort(grid.begin(), grid.end());
  return detail::run_trials("convexity", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    DensityMatrix rho = random_density(d, 1 + t % d, derive_seed(s, 1));
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 2));
    out.inputs["rho"] = matrix_to_json(rho.matrix());
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    std::vector<double> scaled;  // D_alpha / alpha'
    for (double a : grid) {
      AlphaOrder order(a);
      scaled.push_back(sandwiched_renyi(rho, sigma, order).value / order.conjugate());
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j)
        for (std::size_t k = j + 1; k < grid.size(); ++k) {
          const double ia = 1.0 / grid[i], ib = 1.0 / grid[j], ic = 1.0 / grid[k];
          const double theta = (ib - ia) / (ic - ia);
          out.margins.add((1.0 - theta) * scaled[i] + theta * scaled[k] - scaled[j], tol);
        }
  });
}

// Weighted-norm interpolation: ||X||_{p_theta,sigma} never exceeds the
// geometric mean of the endpoint norms.
inline PropertyReport check_interpolation(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-9);
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<double, double>> pairs{{1.0, 2.0}, {1.0, inf}, {2.0, 4.0}};
  const std::vector<double> thetas{0.25, 0.5, 0.75};
  return detail::run_trials("interpolation", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 1));
    RandomStream stream(derive_seed(s, 2));
    const Matrix x = ginibre_matrix(d, d, stream);
    out.inputs["x"] = matrix_to_json(x);
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    for (const auto& [p0, p1] : pairs) {
      const NormOrder o0(p0);
      const NormOrder o1 = std::isinf(p1) ? NormOrder::infinity() : NormOrder(p1);
      const double n0 = weighted_norm(x, o0, sigma.matrix());
      const double n1 = weighted_norm(x, o1, sigma.matrix());
      for (double theta : thetas) {
        const double ipt = (1.0 - theta) / p0 + (std::isinf(p1) ? 0.0 : theta / p1);
        const double lhs = weighted_norm(x, NormOrder(1.0 / ipt), sigma.matrix());
        out.margins.add(std::pow(n0, 1.0 - theta) * std::pow(n1, theta) - lhs, tol);
      }
    }
  });
}

// The Holder family: forward and generalized inequalities, the reverse family
// with one positive exponent, duality attainment, and the equality case built
// from shared singular vectors.
inline PropertyReport check_holder_family(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-10);
  const double inf = std::numeric_limits<double>::infinity();
  return detail::run_trials("holder", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    RandomStream stream(derive_seed(s, 1));
    const Matrix x = ginibre_matrix(d, d, stream);
    const Matrix y = ginibre_matrix(d, d, stream);
    out.inputs["x"] = matrix_to_json(x);
    out.inputs["y"] = matrix_to_json(y);

    // Forward Holder ||XY||_1 <= ||X||_p ||Y||_{p'}.
    for (double p : {1.0, 1.5, 2.0, 4.0, inf}) {
      const NormOrder op = std::isinf(p) ? NormOrder::infinity() : NormOrder(p);
      out.margins.add(schatten_norm(x, op) * schatten_norm(y, holder_conjugate(op)) - trace_norm(x * y), tol);
    }

    // Generalized three-factor Holder.
    {
      static const std::vector<std::array<double, 3>> tuples{
          {2.0, 3.0, 6.0}, {4.0, 4.0, 2.0}, {2.0, 2.0, 2.0}, {1.0, 2.0, 2.0}, {3.0, 3.0, 3.0}};
      const auto& ps = tuples[static_cast<std::size_t>(t) % tuples.size()];
      const double r = 1.0 / (1.0 / ps[0] + 1.0 / ps[1] + 1.0 / ps[2]);
      const Matrix z = ginibre_matrix(d, d, stream);
      const double rhs = schatten_norm(x, ps[0]) * schatten_norm(y, ps[1]) * schatten_norm(z, ps[2]);
      out.margins.add(rhs - schatten_norm(x * y * z, r), tol);
    }

    // Reverse Holder with exactly one positive exponent (full-rank factors).
    {
      RandomStream fr(derive_seed(s, 2));
      const Matrix a = detail::full_rank_ginibre(d, fr);
      const Matrix b = detail::full_rank_ginibre(d, fr);
      out.margins.add(schatten_norm(a * b, 1.0) - schatten_norm(a, 0.5) * schatten_norm(b, -1.0), tol);
      const Matrix c = detail::full_rank_ginibre(d, fr);
      const double lhs = schatten_norm(a * b * c, 1.0);
      out.margins.add(lhs - schatten_norm(a, 0.5) * schatten_norm(b, -2.0) * schatten_norm(c, -2.0), tol);
    }

    // Equality case: |X|^p proportional to |Y^dagger|^q by construction.
    {
      static const std::vector<std::pair<double, double>> pq{{2.0, 2.0}, {3.0, 1.5}, {4.0, 2.0}};
      const auto& [p, q] = pq[static_cast<std::size_t>(t) % pq.size()];
      const double r = 1.0 / (1.0 / p + 1.0 / q);
      RandomStream es(derive_seed(s, 3));
      const Matrix u = haar_unitary(d, es);
      const Matrix v = haar_unitary(d, es);
      const Matrix w = haar_unitary(d, es);
      RealVector diag(d);
      for (int i = 0; i < d; ++i) diag(i) = 0.2 + stream.uniform();
      Vector dp(d), dq(d);
      for (int i = 0; i < d; ++i) {
        dp(i) = std::pow(diag(i), 1.0 / p);
        dq(i) = std::pow(diag(i), 1.0 / q);
      }
      Matrix xe = u * dp.asDiagonal() * v.adjoint();
      Matrix ye = v * dq.asDiagonal() * w.adjoint();
      const double lhs = schatten_norm(xe * ye, r);
      const double rhs = schatten_norm(xe, p) * schatten_norm(ye, q);
      out.margins.add(-std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-8);
    }

    // Duality: random unit-norm tests never beat ||X||_p, the SVD optimizer attains it.
    {
      RandomStream ds(derive_seed(s, 4));
      for (double p : {1.0, 1.5, 2.0, 4.0, inf}) {
        const NormOrder op = std::isinf(p) ? NormOrder::infinity() : NormOrder(p);
        const NormOrder oc = holder_conjugate(op);
        const double xnorm = schatten_norm(x, op);
        double best = 0.0;
        for (int j = 0; j < 200; ++j) {
          Matrix yr = ginibre_matrix(d, d, ds);
          yr /= schatten_norm(yr, oc);
          best = std::max(best, std::abs(hs_inner(yr, x)));
        }
        out.margins.add(xnorm - best, tol);
        const Matrix ystar = holder_dual_optimizer(x, op);
        out.margins.add(-std::abs(std::abs(hs_inner(ystar, x)) - xnorm), 1e-9);
      }
    }

    // Inverse Holder duality for PSD X and 0 < p < 1.
    {
      static const std::vector<double> ps{1.0 / 3.0, 0.5, 0.75};
      const double p = ps[static_cast<std::size_t>(t) % ps.size()];
      const NormOrder op(p);
      const NormOrder oc = holder_conjugate(op);
      DensityMatrix xp = random_density(d, d, derive_seed(s, 5));
      const double xnorm = schatten_norm(xp.matrix(), op);
      RandomStream ys(derive_seed(s, 6));
      for (int j = 0; j < 20; ++j) {
        const Matrix g = detail::full_rank_ginibre(d, ys);
        Matrix yf = g * g.adjoint();
        yf /= schatten_norm(yf, oc);
        out.margins.add((xp.matrix() * yf).trace().real() - xnorm, tol);
      }
      const Matrix ystar = inverse_holder_optimizer(xp.matrix(), op);
      out.margins.add(-std::abs((xp.matrix() * ystar).trace().real() - xnorm), 1e-8);
    }
  });
}

// ---------------------------------------------------------------------------
// Optimizer-backed checks
// ---------------------------------------------------------------------------

// Conditional-entropy duality H_alpha(A|B) = -H_beta(A|C) on tripartite pure
// states, plus the Sion minimax gap on the BC marginal.
inline PropertyReport check_duality(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(2e-5);
  const std::vector<std::pair<double, double>> pairs{{2.0, 2.0 / 3.0}, {3.0, 0.6}, {1.5, 0.75}};
  return detail::run_trials("duality", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const std::vector<int> dims = (t % 2 == 0) ? std::vector<int>{2, 2, 2} : std::vector<int>{2, 2, 4};
    PureState psi = random_pure(dims, derive_seed(s, 1));
    DensityMatrix full = psi.density();
    DensityMatrix rho_ab = partial_trace(full, {0, 1});
    DensityMatrix rho_ac = partial_trace(full, {0, 2});
    DensityMatrix rho_bc = partial_trace(full, {1, 2});
    out.inputs["psi"] = matrix_to_json(psi.amplitudes());
    out.inputs["dims"] = dims;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto& [alpha, beta] = pairs[pi];
      OptimizerResult hb = conditional_renyi_entropy(rho_ab, AlphaOrder(alpha),
                                                     detail::tuned_config(derive_seed(s, 10 + pi), 3));
      OptimizerResult hc = conditional_renyi_entropy(rho_ac, AlphaOrder(beta),
                                                     detail::tuned_config(derive_seed(s, 20 + pi), 3));
      if (!hb.converged || !hc.converged) {
        out.inconclusive = true;
      } else {
        out.margins.add(-std::abs(hb.value + hc.value), tol);
      }
      MinimaxResult lo = minimax_value(rho_bc, AlphaOrder(alpha), MinimaxOrder::SupInf,
                                       detail::tuned_config(derive_seed(s, 30 + pi), 2));
      MinimaxResult hi = minimax_value(rho_bc, AlphaOrder(alpha), MinimaxOrder::InfSup,
                                       detail::tuned_config(derive_seed(s, 40 + pi), 2));
      if (!lo.converged || !hi.converged) {
        out.inconclusive = true;
      } else {
        out.margins.add(-std::abs(hi.value - lo.value), 1e-5);
      }
    }
  });
}

// Additivity of alpha-Renyi mutual information on product states; the joint
// optimization is seeded with the tensor product of the marginal solutions.
inline PropertyReport check_mi_additivity(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(5e-5);
  const std::vector<double> alphas = detail::alphas_or(plan, {1.5, 2.0, 3.0});
  return detail::run_trials("mi-additivity", plan, [&](int /*t*/, std::uint64_t s, detail::TrialOutcome& out) {
    DensityMatrix rho1 = random_density(4, 4, derive_seed(s, 1), {2, 2});
    DensityMatrix rho2 = random_density(4, 4, derive_seed(s, 2), {2, 2});
    Matrix joint_m = permute_subsystems(kron(rho1.matrix(), rho2.matrix()), {2, 2, 2, 2}, {0, 2, 1, 3});
    DensityMatrix joint(std::move(joint_m), {4, 4});
    out.inputs["rho1"] = matrix_to_json(rho1.matrix());
    out.inputs["rho2"] = matrix_to_json(rho2.matrix());
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      AlphaOrder order = detail::to_alpha(alphas[ai]);
      OptimizerResult m1 = mutual_info_primal(rho1, order, detail::tuned_config(derive_seed(s, 10 + ai), 3));
      OptimizerResult m2 = mutual_info_primal(rho2, order, detail::tuned_config(derive_seed(s, 20 + ai), 3));
      OptimizerResult mj = mutual_info_primal(joint, order, detail::tuned_config(derive_seed(s, 30 + ai), 3),
                                              {tensor(m1.argopt, m2.argopt)});
      if (!m1.converged || !m2.converged || !mj.converged) {
        out.inconclusive = true;
        continue;
      }
      out.margins.add(-std::abs(mj.value - m1.value - m2.value), tol);
    }
  });
}

// Super-additivity of the alpha-Holevo estimate; the joint restarts include
// the product of the marginal optimal ensembles, so the inequality is sound
// by construction.
inline PropertyReport check_chi_superadditivity(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-6);
  const std::vector<double> alphas = detail::alphas_or(plan, {2.0});
  return detail::run_trials("chi-superadditivity", plan, [&](int /*t*/, std::uint64_t s, detail::TrialOutcome& out) {
    Channel phi1 = random_channel(2, 2, 2, derive_seed(s, 1));
    Channel phi2 = random_channel(2, 2, 2, derive_seed(s, 2));
    std::vector<Matrix> joint_kraus;
    for (const Matrix& a : phi1.kraus())
      for (const Matrix& b : phi2.kraus()) joint_kraus.push_back(kron(a, b));
    Channel joint(4, 4, std::move(joint_kraus));
    out.inputs["channel1"] = channel_to_json(phi1);
    out.inputs["channel2"] = channel_to_json(phi2);
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      AlphaOrder order = detail::to_alpha(alphas[ai]);
      EnsembleResult m1 = holevo_alpha(phi1, 2, order, detail::tuned_config(derive_seed(s, 10 + ai), 3));
      EnsembleResult m2 = holevo_alpha(phi2, 2, order, detail::tuned_config(derive_seed(s, 20 + ai), 3));
      Ensemble product;
      for (std::size_t i = 0; i < m1.argopt.probs.size(); ++i)
        for (std::size_t j = 0; j < m2.argopt.probs.size(); ++j) {
          product.probs.push_back(m1.argopt.probs[i] * m2.argopt.probs[j]);
          Vector v(4);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) v(a * 2 + b) = m1.argopt.states[i](a) * m2.argopt.states[j](b);
          product.states.push_back(std::move(v));
        }
      EnsembleResult mj =
          holevo_alpha(joint, 4, order, detail::tuned_config(derive_seed(s, 30 + ai), 2), {product});
      if (!m1.converged || !m2.converged || !mj.converged) {
        out.inconclusive = true;
        continue;
      }
      out.margins.add(mj.value - m1.value - m2.value, tol);
    }
  });
}

// D_{1+h} converges linearly to the Umegaki limit: gaps shrink with h and
// successive-gap ratios stay near 1/2. Commuting instances are cross-checked
// against the classical formulas.
inline PropertyReport check_limit_alpha1(const TrialPlan& plan) {
  const double tol = plan.tolerance.value_or(1e-9);
  const std::vector<double> hs{0.1, 0.05, 0.025};
  return detail::run_trials("limit-alpha1", plan, [&](int t, std::uint64_t s, detail::TrialOutcome& out) {
    const int d = plan.dims[static_cast<std::size_t>(t) % plan.dims.size()];
    const bool diagonal = (t % 5 == 4);
    RandomStream stream(derive_seed(s, 1));
    DensityMatrix rho = diagonal
                            ? DensityMatrix([&] {
                                std::vector<double> p = detail::random_simplex(d, stream);
                                Matrix m = Matrix::Zero(d, d);
                                for (int i = 0; i < d; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
                                return m;
                              }())
                            : random_density(d, d, derive_seed(s, 2));
    DensityMatrix sigma = diagonal
                              ? DensityMatrix([&] {
                                  std::vector<double> q = detail::random_simplex(d, stream);
                                  Matrix m = Matrix::Zero(d, d);
                                  for (int i = 0; i < d; ++i) m(i, i) = q[static_cast<std::size_t>(i)];
                                  return m;
                                }())
                              : random_density(d, d, derive_seed(s, 3));
    out.inputs["rho"] = matrix_to_json(rho.matrix());
    out.inputs["sigma"] = matrix_to_json(sigma.matrix());
    const double u = umegaki(rho, sigma).value;
    std::vector<double> gaps;
    for (double h : hs) gaps.push_back(std::abs(sandwiched_renyi(rho, sigma, AlphaOrder(1.0 + h)).value - u));
    bool all_tiny = true;
    for (double g : gaps) all_tiny = all_tiny && g < 1e-12;
    if (!all_tiny) {
      for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        out.margins.add(gaps[i] - gaps[i + 1], tol);
        if (gaps[i] > 0.0) {
          const double ratio = gaps[i + 1] / gaps[i];
          out.margins.add(ratio - 0.3, tol);
          out.margins.add(0.7 - ratio, tol);
        }
      }
    }
    if (diagonal) {
      std::vector<double> p(static_cast<std::size_t>(d)), q(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        p[static_cast<std::size_t>(i)] = rho.matrix()(i, i).real();
        q[static_cast<std::size_t>(i)] = sigma.matrix()(i, i).real();
      }
      out.margins.add(-std::abs(u - classical_renyi(p, q, AlphaOrder::one()).value), 1e-9);
      for (double h : hs)
        out.margins.add(-std::abs(sandwiched_renyi(rho, sigma, AlphaOrder(1.0 + h)).value -
                                  classical_renyi(p, q, AlphaOrder(1.0 + h)).value),
                        1e-9);
    }
  });
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using CheckFunction = PropertyReport (*)(const TrialPlan&);

inline const std::vector<std::pair<std::string, CheckFunction>>& check_registry() {
  static const std::vector<std::pair<std::string, CheckFunction>> registry{
      {"positivity", &check_positivity},
      {"dpi", &check_dpi},
      {"contraction", &check_contraction},
      {"monotonicity", &check_monotonicity_alpha},
      {"convexity", &check_convexity},
      {"interpolation", &check_interpolation},
      {"holder", &check_holder_family},
      {"duality", &check_duality},
      {"mi-additivity", &check_mi_additivity},
      {"chi-superadditivity", &check_chi_superadditivity},
      {"limit-alpha1", &check_limit_alpha1},
  };
  return registry;
}

inline TrialPlan default_plan(const std::string& check, std::uint64_t seed) {
  TrialPlan plan;
  plan.seed = seed;
  if (check == "positivity") {
    plan.dims = {2, 3, 4};
    plan.trials = 500;
  } else if (check == "dpi") {
    plan.dims = {2, 3};
    plan.trials = 200;
  } else if (check == "contraction") {
    plan.dims = {2, 3};
    plan.trials = 100;
  } else if (check == "monotonicity") {
    plan.dims = {2, 3, 4};
    plan.trials = 100;
  } else if (check == "convexity") {
    plan.dims = {2, 3};
    plan.trials = 100;
  } else if (check == "interpolation") {
    plan.dims = {2, 3, 4};
    plan.trials = 200;
  } else if (check == "holder") {
    plan.dims = {2, 3};
    plan.trials = 200;
  } else if (check == "duality") {
    plan.trials = 30;
  } else if (check == "mi-additivity") {
    plan.trials = 20;
  } else if (check == "chi-superadditivity") {
    plan.trials = 10;
  } else if (check == "limit-alpha1") {
    plan.dims = {2, 3};
    plan.trials = 50;
  } else {
    throw std::invalid_argument("unknown check: " + check);
  }
  return plan;
}

inline PropertyReport run_check(const std::string& name, const TrialPlan& plan) {
  for (const auto& [check, fn] : check_registry())
    if (check == name) return fn(plan);
  throw std::invalid_argument("unknown check: " + name);
}

// Report JSON. Wall time is serialized as 0.0 unless include_timing is set:
// byte-identical reports for identical seeds take precedence, real timings go
// to stderr.
inline Json report_to_json(const PropertyReport& r, const std::vector<std::string>& instance_paths,
                           bool include_timing = false) {
  Json j;
  j["check"] = r.check;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["inconclusive"] = r.inconclusive;
  j["warnings"] = r.warnings;
  j["worst_margin"] = r.worst_margin;
  j["seed"] = r.seed;
  j["elapsed_s"] = include_timing ? r.elapsed_s : 0.0;
  j["failure_instances"] = instance_paths;
  return j;
}

}  // namespace renyi

#endif  // RENYI_HARNESS_HPP
