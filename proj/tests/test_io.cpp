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

#include "renyi/io.hpp"

using namespace renyi;

TEST_CASE("matrix JSON round trip is exact") {
  RandomStream stream(7);
  const Matrix m = ginibre_matrix(3, 2, stream);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  REQUIRE(back == m);  // bitwise: shortest-round-trip serialization
}

TEST_CASE("matrix JSON rejects malformed input") {
  Json j = matrix_to_json(Matrix::Identity(2, 2));
  SECTION("length mismatch") {
    j["re"].get_ref<Json::array_t&>().push_back(0.0);
    REQUIRE_THROWS_AS(matrix_from_json(j), std::invalid_argument);
  }
  SECTION("missing field") {
    j.erase("im");
    REQUIRE_THROWS_AS(matrix_from_json(j), std::invalid_argument);
  }
  SECTION("bad dimensions") {
    j["rows"] = 0;
    REQUIRE_THROWS_AS(matrix_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("density JSON carries dims") {
  DensityMatrix rho = random_density(6, 4, 11, {2, 3});
  Json j = density_to_json(rho);
  REQUIRE(j["dims"] == Json::array({2, 3}));
  DensityMatrix back = density_from_json(j);
  // construction re-validates, so match values rather than bits
  REQUIRE(operator_norm(back.matrix() - rho.matrix()) <= 1e-12);
  REQUIRE(back.dims() == rho.dims());
}

TEST_CASE("density JSON validates state invariants") {
  Json j = matrix_to_json(Matrix::Identity(2, 2));  // trace 2
  REQUIRE_THROWS_AS(density_from_json(j), std::invalid_argument);
}

TEST_CASE("channel JSON round trip") {
  Channel phi = random_channel(2, 3, 2, 13);
  Json j = channel_to_json(phi);
  REQUIRE(j["in"] == 2);
  REQUIRE(j["out"] == 3);
  Channel back = channel_from_json(j);
  REQUIRE(back.kraus().size() == phi.kraus().size());
  for (std::size_t i = 0; i < phi.kraus().size(); ++i) REQUIRE(back.kraus()[i] == phi.kraus()[i]);
}

TEST_CASE("channel JSON rejects incomplete Kraus sets") {
  Json j = channel_to_json(Channel::identity(2));
  j["kraus"][0]["re"][0] = 0.5;  // breaks trace preservation
  REQUIRE_THROWS_AS(channel_from_json(j), std::invalid_argument);
}
