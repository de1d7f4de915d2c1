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

#include "renyi/divergence.hpp"
#include "support/oracles.hpp"

using namespace renyi;

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn125 = 0.22314355131420976;  // ln 1.25, from sum p^2/q = 1.25
}  // namespace

TEST_CASE("AlphaOrder guards") {
  REQUIRE_THROWS_AS(AlphaOrder(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(AlphaOrder(-2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(AlphaOrder(1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(AlphaOrder(1.0 + 5e-7), std::invalid_argument);
  REQUIRE(AlphaOrder(3.0).conjugate() == Catch::Approx(1.5));
  REQUIRE(AlphaOrder::infinity().conjugate() == Catch::Approx(1.0));
  REQUIRE(AlphaOrder::one().is_one());
}

TEST_CASE("classical Renyi divergence") {
  SECTION("equal distributions vanish") {
    DivergenceValue d = classical_renyi({0.3, 0.7}, {0.3, 0.7}, AlphaOrder(2.0));
    REQUIRE(std::abs(d.value) < 1e-12);
  }
  SECTION("hand-evaluated alpha = 2 case") {
    DivergenceValue d = classical_renyi({0.75, 0.25}, {0.5, 0.5}, AlphaOrder(2.0));
    REQUIRE(d.value == Catch::Approx(kLn125).margin(1e-12));
  }
  SECTION("support violation is infinite for alpha > 1") {
    DivergenceValue d = classical_renyi({1.0, 0.0}, {0.0, 1.0}, AlphaOrder(2.0));
    REQUIRE(d.is_infinite());
    REQUIRE(d.support_violated);
  }
  SECTION("alpha = infinity is the max ratio") {
    DivergenceValue d = classical_renyi({0.75, 0.25}, {0.5, 0.5}, AlphaOrder::infinity());
    REQUIRE(d.value == Catch::Approx(std::log(1.5)).margin(1e-12));
  }
  SECTION("alpha = 1 is the KL divergence") {
    DivergenceValue d = classical_renyi({0.75, 0.25}, {0.5, 0.5}, AlphaOrder::one());
    REQUIRE(d.value == Catch::Approx(0.75 * std::log(1.5) + 0.25 * std::log(0.5)).margin(1e-12));
  }
  SECTION("non-simplex inputs are rejected") {
    REQUIRE_THROWS_AS(classical_renyi({0.5, 0.6}, {0.5, 0.5}, AlphaOrder(2.0)), std::invalid_argument);
    REQUIRE_THROWS_AS(classical_renyi({1.2, -0.2}, {0.5, 0.5}, AlphaOrder(2.0)), std::invalid_argument);
  }
}

TEST_CASE("sandwiched Renyi divergence basics") {
  SECTION("vanishes at rho = sigma") {
    for (double a : {0.5, 2.0, 5.0}) {
      DensityMatrix rho = random_density(3, 3, 300 + static_cast<std::uint64_t>(a * 10));
      REQUIRE(std::abs(sandwiched_renyi(rho, rho, AlphaOrder(a)).value) <= 1e-9);
    }
  }
  SECTION("commuting case reproduces the classical value") {
    DensityMatrix rho = testing::diagonal_state({0.75, 0.25});
    DensityMatrix sigma = testing::diagonal_state({0.5, 0.5});
    REQUIRE(sandwiched_renyi(rho, sigma, AlphaOrder(2.0)).value == Catch::Approx(kLn125).margin(1e-12));
  }
  SECTION("pure state against the maximally mixed state") {
    DensityMatrix rho = testing::diagonal_state({1.0, 0.0});
    DensityMatrix sigma = testing::maximally_mixed(2);
    for (double a : {0.5, 2.0, 5.0}) {
      REQUIRE(sandwiched_renyi(rho, sigma, AlphaOrder(a)).value == Catch::Approx(kLn2).margin(1e-10));
    }
    REQUIRE(sandwiched_renyi(rho, sigma, AlphaOrder::infinity()).value == Catch::Approx(kLn2).margin(1e-10));
  }
  SECTION("support violation for alpha > 1") {
    DensityMatrix rho = testing::diagonal_state({1.0, 0.0});
    DensityMatrix sigma = testing::diagonal_state({0.0, 1.0});
    DivergenceValue d = sandwiched_renyi(rho, sigma, AlphaOrder(2.0));
    REQUIRE(d.is_infinite());
    REQUIRE(d.support_violated);
  }
  SECTION("alpha < 1 with incomparable supports stays finite but flagged") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 0.8;
    m(0, 1) = 0.25;
    m(1, 0) = 0.25;
    m(1, 1) = 0.2;  // full-rank-ish rho with weight outside supp(sigma)
    DensityMatrix rho(std::move(m));
    DensityMatrix sigma = testing::diagonal_state({1.0, 0.0});
    DivergenceValue d = sandwiched_renyi(rho, sigma, AlphaOrder(0.5));
    REQUIRE(d.support_violated);
    REQUIRE(std::isfinite(d.value));
  }
  SECTION("dimension mismatch") {
    REQUIRE_THROWS_AS(
        sandwiched_renyi(random_density(2, 2, 1), random_density(3, 3, 2), AlphaOrder(2.0)),
        std::invalid_argument);
  }
}

TEST_CASE("trace form and norm form agree") {
  for (int rep = 0; rep < 40; ++rep) {
    const std::uint64_t s = derive_seed(3100, static_cast<std::uint64_t>(rep));
    const int d = 2 + rep % 3;
    DensityMatrix rho = random_density(d, 1 + rep % d, derive_seed(s, 0));
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 1));
    for (double a : {0.5, 0.75, 1.5, 2.0, 3.0, 10.0}) {
      const double norm_form = sandwiched_renyi(rho, sigma, AlphaOrder(a)).value;
      const double trace_form = sandwiched_renyi_trace(rho, sigma, AlphaOrder(a)).value;
      REQUIRE(std::abs(norm_form - trace_form) <= 1e-9);
    }
  }
}

TEST_CASE("commuting reduction to the classical formula") {
  RandomStream stream(3200);
  for (int rep = 0; rep < 30; ++rep) {
    const int d = 2 + rep % 5;
    std::vector<double> p(static_cast<std::size_t>(d)), q(static_cast<std::size_t>(d));
    double sp = 0.0, sq = 0.0;
    for (int i = 0; i < d; ++i) {
      p[static_cast<std::size_t>(i)] = -std::log(stream.uniform_open());
      q[static_cast<std::size_t>(i)] = -std::log(stream.uniform_open());
      sp += p[static_cast<std::size_t>(i)];
      sq += q[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < d; ++i) {
      p[static_cast<std::size_t>(i)] /= sp;
      q[static_cast<std::size_t>(i)] /= sq;
    }
    DensityMatrix rho = testing::diagonal_state(p);
    DensityMatrix sigma = testing::diagonal_state(q);
    for (double a : {0.5, 0.75, 1.5, 2.0, 3.0}) {
      REQUIRE(std::abs(sandwiched_renyi(rho, sigma, AlphaOrder(a)).value -
                       classical_renyi(p, q, AlphaOrder(a)).value) <= 1e-9);
    }
    REQUIRE(std::abs(sandwiched_renyi(rho, sigma, AlphaOrder::infinity()).value -
                     classical_renyi(p, q, AlphaOrder::infinity()).value) <= 1e-9);
  }
}

TEST_CASE("unitary covariance") {
  RandomStream stream(3300);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 2 + rep % 3;
    DensityMatrix rho = random_density(d, d, derive_seed(3301, static_cast<std::uint64_t>(rep)));
    DensityMatrix sigma = random_density(d, d, derive_seed(3302, static_cast<std::uint64_t>(rep)));
    const Matrix u = haar_unitary(d, stream);
    DensityMatrix rho_u(Matrix(u * rho.matrix() * u.adjoint()));
    DensityMatrix sigma_u(Matrix(u * sigma.matrix() * u.adjoint()));
    for (double a : {0.5, 2.0, 4.0}) {
      REQUIRE(std::abs(sandwiched_renyi(rho_u, sigma_u, AlphaOrder(a)).value -
                       sandwiched_renyi(rho, sigma, AlphaOrder(a)).value) <= 1e-9);
    }
  }
}

TEST_CASE("tensor additivity") {
  for (int rep = 0; rep < 15; ++rep) {
    const std::uint64_t s = derive_seed(3400, static_cast<std::uint64_t>(rep));
    DensityMatrix r1 = random_density(2, 2, derive_seed(s, 0));
    DensityMatrix s1 = random_density(2, 2, derive_seed(s, 1));
    DensityMatrix r2 = random_density(3, 3, derive_seed(s, 2));
    DensityMatrix s2 = random_density(3, 3, derive_seed(s, 3));
    for (double a : {0.5, 1.5, 2.0, 3.0}) {
      const double joint = sandwiched_renyi(tensor(r1, r2), tensor(s1, s2), AlphaOrder(a)).value;
      const double parts = sandwiched_renyi(r1, s1, AlphaOrder(a)).value +
                           sandwiched_renyi(r2, s2, AlphaOrder(a)).value;
      REQUIRE(std::abs(joint - parts) <= 1e-8);
    }
  }
}

TEST_CASE("alpha -> 1 limit converges linearly to Umegaki") {
  for (int rep = 0; rep < 10; ++rep) {
    const std::uint64_t s = derive_seed(3500, static_cast<std::uint64_t>(rep));
    const int d = 2 + rep % 2;
    DensityMatrix rho = random_density(d, d, derive_seed(s, 0));
    DensityMatrix sigma = random_density(d, d, derive_seed(s, 1));
    const double u = umegaki(rho, sigma).value;
    double prev_gap = -1.0;
    for (double h : {0.1, 0.05, 0.025}) {
      const double gap = std::abs(sandwiched_renyi(rho, sigma, AlphaOrder(1.0 + h)).value - u);
      if (prev_gap >= 0.0) {
        REQUIRE(gap < prev_gap);
        const double ratio = gap / prev_gap;
        REQUIRE(ratio >= 0.3);
        REQUIRE(ratio <= 0.7);
      }
      prev_gap = gap;
    }
  }
}

TEST_CASE("Umegaki relative entropy") {
  SECTION("vanishes at rho = sigma") {
    DensityMatrix rho = random_density(3, 3, 360);
    REQUIRE(std::abs(umegaki(rho, rho).value) < 1e-10);
  }
  SECTION("hand-evaluated diagonal case") {
    const double expect = 0.75 * std::log(1.5) + 0.25 * std::log(0.5);
    REQUIRE(umegaki(testing::diagonal_state({0.75, 0.25}), testing::diagonal_state({0.5, 0.5})).value ==
            Catch::Approx(expect).margin(1e-12));
  }
  SECTION("pure state against maximally mixed") {
    REQUIRE(umegaki(testing::diagonal_state({1.0, 0.0}), testing::maximally_mixed(2)).value ==
            Catch::Approx(kLn2).margin(1e-10));
  }
  SECTION("support violation is infinite") {
    DivergenceValue d = umegaki(testing::diagonal_state({1.0, 0.0}), testing::diagonal_state({0.0, 1.0}));
    REQUIRE(d.is_infinite());
  }
}

TEST_CASE("Renyi entropy") {
  SECTION("maximally mixed gives log d for any alpha") {
    for (int d : {2, 3, 5}) {
      DensityMatrix rho = testing::maximally_mixed(d);
      for (double a : {0.5, 2.0, 7.0})
        REQUIRE(renyi_entropy(rho, AlphaOrder(a)) == Catch::Approx(std::log(d)).margin(1e-10));
      REQUIRE(renyi_entropy(rho, AlphaOrder::one()) == Catch::Approx(std::log(d)).margin(1e-10));
      REQUIRE(renyi_entropy(rho, AlphaOrder::infinity()) == Catch::Approx(std::log(d)).margin(1e-10));
    }
  }
  SECTION("pure states have zero entropy") {
    DensityMatrix rho = random_density(4, 1, 370);
    for (double a : {0.5, 2.0, 7.0}) REQUIRE(std::abs(renyi_entropy(rho, AlphaOrder(a))) <= 1e-9);
    REQUIRE(std::abs(renyi_entropy(rho, AlphaOrder::infinity())) <= 1e-9);
  }
  SECTION("hand-evaluated collision entropy") {
    REQUIRE(renyi_entropy(testing::diagonal_state({0.75, 0.25}), AlphaOrder(2.0)) ==
            Catch::Approx(-std::log(0.625)).margin(1e-12));
  }
  SECTION("entropy identity H_alpha = -D_alpha(rho || I)") {
    for (int rep = 0; rep < 10; ++rep) {
      DensityMatrix rho = random_density(3, 1 + rep % 3, derive_seed(3700, static_cast<std::uint64_t>(rep)));
      for (double a : {0.5, 1.5, 2.0, 4.0}) {
        const double via_div =
            -sandwiched_renyi_general(rho.matrix(), Matrix::Identity(3, 3), AlphaOrder(a)).value;
        REQUIRE(std::abs(renyi_entropy(rho, AlphaOrder(a)) - via_div) <= 1e-9);
      }
    }
  }
}

TEST_CASE("DivergenceValue infinite branch flag") {
  DensityMatrix rho = testing::diagonal_state({1.0, 0.0});
  DensityMatrix sigma = testing::diagonal_state({0.0, 1.0});
  for (double a : {1.5, 2.0, 10.0}) {
    DivergenceValue d = sandwiched_renyi(rho, sigma, AlphaOrder(a));
    REQUIRE(d.is_infinite() == d.support_violated);
  }
}
