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

#ifndef RENYI_IO_HPP
#define RENYI_IO_HPP

#include <json.hpp>

#include <fstream>
#include <string>

#include "renyi/channels.hpp"
#include "renyi/states.hpp"

namespace renyi {

using Json = nlohmann::json;

// Matrix wire format: {"rows": n, "cols": m, "re": [...], "im": [...]},
// row-major. Lengths must match rows * cols exactly.
inline Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index jx = 0; jx < m.cols(); ++jx) {
      re.push_back(m(i, jx).real());
      im.push_back(m(i, jx).imag());
    }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("matrix JSON: expected {rows, cols, re, im}");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix JSON: dimensions must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || static_cast<Eigen::Index>(re.size()) != rows * cols ||
      static_cast<Eigen::Index>(im.size()) != rows * cols)
    throw std::invalid_argument("matrix JSON: re/im length does not match rows * cols");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index jx = 0; jx < cols; ++jx) {
      const std::size_t k = static_cast<std::size_t>(i * cols + jx);
      m(i, jx) = Complex(re.at(k).get<double>(), im.at(k).get<double>());
    }
  require_finite(m, "matrix JSON");
  return m;
}

// Density matrices carry the matrix fields plus "dims".
inline Json density_to_json(const DensityMatrix& rho) {
  Json j = matrix_to_json(rho.matrix());
  j["dims"] = rho.dims();
  return j;
}

inline DensityMatrix density_from_json(const Json& j) {
  Matrix m = matrix_from_json(j);
  std::vector<int> dims;
  if (j.contains("dims")) dims = j.at("dims").get<std::vector<int>>();
  return DensityMatrix(std::move(m), std::move(dims));
}

inline Json channel_to_json(const Channel& phi) {
  Json j;
  j["in"] = phi.input_dim();
  j["out"] = phi.output_dim();
  Json kraus = Json::array();
  for (const Matrix& k : phi.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

inline Channel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("in") || !j.contains("out") || !j.contains("kraus"))
    throw std::invalid_argument("channel JSON: expected {in, out, kraus}");
  const int in = j.at("in").get<int>();
  const int out = j.at("out").get<int>();
  std::vector<Matrix> kraus;
  for (const Json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return Channel(in, out, std::move(kraus));
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace renyi

#endif  // RENYI_IO_HPP
