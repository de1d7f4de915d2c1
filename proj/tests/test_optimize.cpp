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

#include <catch2/catch_amalgamated.hpp>

#include "renyi/optimize.hpp"
#include "support/oracles.hpp"

using namespace renyi;

namespace {
constexpr double kLn2 = 0.6931471805599453;

OptimizerConfig cfg_with(std::uint64_t seed, int restarts = 8) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}
}  // namespace

TEST_CASE("optimize_over_density on a linear objective") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  auto objective = [&](const DensityMatrix& sigma) { return (sigma.matrix() * m).trace().real(); };
  OptimizerConfig cfg = cfg_with(3);
  cfg.tol = 1e-15;
  cfg.max_iters = 20000;
  OptimizerResult res = optimize_over_density(objective, 2, Direction::Minimize, cfg);
  REQUIRE(std::abs(res.value - 1.0) <= 1e-6);
  Matrix ground = Matrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  REQUIRE(operator_norm(res.argopt.matrix() - ground) <= 1e-6);
  REQUIRE(res.boundary);  // the minimizer is a pure state
}

TEST_CASE("optimize_over_density finds the divergence minimum at rho") {
  DensityMatrix rho = random_density(2, 2, 404);
  auto objective = [&](const DensityMatrix& sigma) {
    return sandwiched_renyi(rho, sigma, AlphaOrder(2.0)).value;
  };
  OptimizerConfig cfg = cfg_with(5);
  cfg.tol = 1e-15;
  cfg.max_iters = 20000;
  OptimizerResult res = optimize_over_density(objective, 2, Direction::Minimize, cfg);
  REQUIRE(std::abs(res.value) <= 1e-6);
  REQUIRE(operator_norm(res.argopt.matrix() - rho.matrix()) <= 1e-3);
}

TEST_CASE("optimize_over_density aborts on NaN objectives") {
  auto objective = [](const DensityMatrix&) { return std::numeric_limits<double>::quiet_NaN(); };
  REQUIRE_THROWS_AS(optimize_over_density(objective, 2, Direction::Minimize, cfg_with(1)),
                    std::runtime_error);
}

TEST_CASE("optimizer agrees with the Bloch-grid oracle") {
  DensityMatrix rho = random_density(4, 3, 505, {2, 2});
  OptimizerResult opt = conditional_renyi_entropy(rho, AlphaOrder(2.0), cfg_with(6, 4));
  const double oracle = testing::bloch_conditional_entropy(rho, AlphaOrder(2.0));
  REQUIRE(std::abs(opt.value - oracle) <= 2e-3);
  REQUIRE(opt.value >= oracle - 1e-9);  // grid is a subset of feasible points
}

TEST_CASE("conditional Renyi entropy") {
  SECTION("product with maximally mixed A gives ln 2") {
    DensityMatrix prod = tensor(testing::maximally_mixed(2), random_density(2, 2, 606));
    for (double a : {0.5, 2.0, 3.0}) {
      OptimizerResult res = conditional_renyi_entropy(prod, AlphaOrder(a), cfg_with(7, 4));
      REQUIRE(std::abs(res.value - kLn2) <= 2e-5);
    }
  }
  SECTION("maximally entangled pair has H_2(A|B) = -ln 2") {
    OptimizerResult res = conditional_renyi_entropy(testing::bell_state(), AlphaOrder(2.0), cfg_with(8, 4));
    REQUIRE(std::abs(res.value + kLn2) <= 2e-5);
  }
  SECTION("|00> has zero conditional entropy for every alpha") {
    DensityMatrix rho = testing::computational_00();
    for (double a : {0.5, 2.0, 5.0}) {
      OptimizerResult res = conditional_renyi_entropy(rho, AlphaOrder(a), cfg_with(9, 4));
      REQUIRE(std::abs(res.value) <= 2e-5);
    }
    OptimizerResult res = conditional_renyi_entropy(rho, AlphaOrder::infinity(), cfg_with(10, 4));
    REQUIRE(std::abs(res.value) <= 2e-5);
  }
  SECTION("requires bipartite dims") {
    REQUIRE_THROWS_AS(conditional_renyi_entropy(random_density(4, 4, 1), AlphaOrder(2.0), cfg_with(1)),
                      std::invalid_argument);
  }
}

TEST_CASE("mutual information, primal") {
  SECTION("product states carry none") {
    DensityMatrix prod = tensor(random_density(2, 2, 701), random_density(2, 2, 702));
    OptimizerResult res = mutual_info_primal(prod.with_dims({2, 2}), AlphaOrder(2.0), cfg_with(11, 4));
    REQUIRE(std::abs(res.value) <= 1e-6);
  }
  SECTION("classically correlated pair matches the grid oracle") {
    DensityMatrix cc = testing::classically_correlated();
    OptimizerResult res = mutual_info_primal(cc, AlphaOrder(2.0), cfg_with(12, 4));
    const double oracle = testing::bloch_mutual_info(cc, AlphaOrder(2.0));
    REQUIRE(std::abs(res.value - oracle) <= 2e-3);
  }
  SECTION("minimizer validity certificate against random feasible points") {
    DensityMatrix rho = random_density(4, 4, 703, {2, 2});
    OptimizerResult res = mutual_info_primal(rho, AlphaOrder(2.0), cfg_with(13, 4));
    const Matrix rho_a = partial_trace(rho.matrix(), rho.dims(), {0});
    for (int j = 0; j < 50; ++j) {
      DensityMatrix sigma = random_density(2, 2, derive_seed(704, static_cast<std::uint64_t>(j)));
      const double at_sigma =
          sandwiched_renyi_general(rho.matrix(), kron(rho_a, sigma.matrix()), AlphaOrder(2.0)).value;
      REQUIRE(at_sigma >= res.value - 1e-9);
    }
  }
}

TEST_CASE("mutual information, dual route") {
  SECTION("product states give zero") {
    DensityMatrix prod = tensor(random_density(2, 2, 801), random_density(2, 2, 802));
    OptimizerResult res = mutual_info_dual(prod.with_dims({2, 2}), AlphaOrder(2.0), cfg_with(14, 4));
    REQUIRE(std::abs(res.value) <= 1e-5);
  }
  SECTION("primal equals dual on random two-qubit states") {
    for (int rep = 0; rep < 4; ++rep) {
      DensityMatrix rho = random_density(4, 4, derive_seed(810, static_cast<std::uint64_t>(rep)), {2, 2});
      for (double a : {1.5, 2.0, 3.0}) {
        OptimizerResult p = mutual_info_primal(rho, AlphaOrder(a), cfg_with(15, 4));
        OptimizerResult d = mutual_info_dual(rho, AlphaOrder(a), cfg_with(16, 4));
        REQUIRE(std::abs(p.value - d.value) <= 2e-5);
      }
    }
  }
  SECTION("maximally entangled state") {
    OptimizerResult p = mutual_info_primal(testing::bell_state(), AlphaOrder(2.0), cfg_with(17, 4));
    OptimizerResult d = mutual_info_dual(testing::bell_state(), AlphaOrder(2.0), cfg_with(18, 4));
    REQUIRE(p.value >= 0.0);
    REQUIRE(std::abs(p.value - d.value) <= 2e-5);
  }
  SECTION("alpha <= 1 is rejected") {
    REQUIRE_THROWS_AS(mutual_info_dual(testing::bell_state(), AlphaOrder(0.5), cfg_with(1)),
                      std::invalid_argument);
  }
}

TEST_CASE("minimax value") {
  SECTION("maximally mixed BC: both orders coincide") {
    DensityMatrix rho = testing::maximally_mixed(4).with_dims({2, 2});
    MinimaxResult lo = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::SupInf, cfg_with(19, 2));
    MinimaxResult hi = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::InfSup, cfg_with(20, 2));
    REQUIRE(std::abs(hi.value - lo.value) <= 1e-6);
  }
  SECTION("Sion equality on random two-qubit states") {
    for (int rep = 0; rep < 3; ++rep) {
      DensityMatrix rho = random_density(4, 4, derive_seed(820, static_cast<std::uint64_t>(rep)), {2, 2});
      MinimaxResult lo = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::SupInf, cfg_with(21, 2));
      MinimaxResult hi = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::InfSup, cfg_with(22, 2));
      REQUIRE(std::abs(hi.value - lo.value) <= 1e-5);
      REQUIRE(hi.value >= lo.value - 1e-9);  // upper bound meets lower bound
    }
  }
  SECTION("single-point feasible sets return f at that point") {
    DensityMatrix rho(Matrix(Matrix::Identity(1, 1)), {1, 1});
    MinimaxResult lo = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::SupInf, cfg_with(23, 1));
    MinimaxResult hi = minimax_value(rho, AlphaOrder(2.0), MinimaxOrder::InfSup, cfg_with(24, 1));
    REQUIRE(lo.value == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(hi.value == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("separate convexity and concavity of the objective") {
    DensityMatrix rho = random_density(4, 4, 830, {2, 2});
    const double conj = AlphaOrder(2.0).conjugate();
    for (int rep = 0; rep < 20; ++rep) {
      const std::uint64_t s = derive_seed(831, static_cast<std::uint64_t>(rep));
      DensityMatrix s1 = random_density(2, 2, derive_seed(s, 0));
      DensityMatrix s2 = random_density(2, 2, derive_seed(s, 1));
      DensityMatrix tau = random_density(2, 2, derive_seed(s, 2));
      DensityMatrix mid(Matrix(0.5 * (s1.matrix() + s2.matrix())));
      const double lhs = minimax_objective(rho.matrix(), 2, 2, conj, mid, tau);
      const double rhs = 0.5 * (minimax_objective(rho.matrix(), 2, 2, conj, s1, tau) +
                                minimax_objective(rho.matrix(), 2, 2, conj, s2, tau));
      REQUIRE(lhs <= rhs + 1e-9);
      DensityMatrix t1 = random_density(2, 2, derive_seed(s, 3));
      DensityMatrix t2 = random_density(2, 2, derive_seed(s, 4));
      DensityMatrix sig = random_density(2, 2, derive_seed(s, 5));
      DensityMatrix tmid(Matrix(0.5 * (t1.matrix() + t2.matrix())));
      const double clhs = minimax_objective(rho.matrix(), 2, 2, conj, sig, tmid);
      const double crhs = 0.5 * (minimax_objective(rho.matrix(), 2, 2, conj, sig, t1) +
                                 minimax_objective(rho.matrix(), 2, 2, conj, sig, t2));
      REQUIRE(clhs >= crhs - 1e-9);
    }
  }
}

TEST_CASE("holevo estimator") {
  SECTION("identity qubit channel reaches ln 2 with two states") {
    EnsembleResult res = holevo_alpha(Channel::identity(2), 2, AlphaOrder(2.0), cfg_with(25, 4));
    REQUIRE(std::abs(res.value - kLn2) <= 1e-3);
  }
  SECTION("completely depolarizing channel carries nothing") {
    EnsembleResult res = holevo_alpha(Channel::depolarizing(2), 2, AlphaOrder(2.0), cfg_with(26, 3));
    REQUIRE(std::abs(res.value) <= 1e-6);
  }
  SECTION("single-state ensembles carry nothing") {
    EnsembleResult res = holevo_alpha(Channel::identity(2), 1, AlphaOrder(2.0), cfg_with(27, 3));
    REQUIRE(std::abs(res.value) <= 1e-6);
  }
}

TEST_CASE("optimizer reproducibility is bitwise") {
  DensityMatrix rho = random_density(4, 4, 901, {2, 2});
  OptimizerResult a = conditional_renyi_entropy(rho, AlphaOrder(2.0), cfg_with(28, 3));
  OptimizerResult b = conditional_renyi_entropy(rho, AlphaOrder(2.0), cfg_with(28, 3));
  REQUIRE(a.value == b.value);
  REQUIRE(a.argopt.matrix() == b.argopt.matrix());
  REQUIRE(a.iterations == b.iterations);
  REQUIRE(a.best_restart == b.best_restart);
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  cfg.tol = 1e-2;
  REQUIRE_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = OptimizerConfig{};
  cfg.restarts = 0;
  REQUIRE_THROWS_AS(validate(cfg), std::invalid_argument);
}
