// Copyright 2026 The petzopt Authors
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

#include "petzopt/io.hpp"

#include <fstream>

namespace petzopt::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Index get_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0) {
    parse_error(std::string("missing or invalid positive integer '") + key + "'");
  }
  return static_cast<Index>(j[key].get<long long>());
}

Complex entry_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  parse_error("matrix entry must be [re, im]");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    parse_error("matrix must be a non-empty list of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      parse_error("matrix rows have unequal length");
    }
    for (Index c = 0; c < cols; ++c) m(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  require_finite(m, "matrix");
  return m;
}

Json channel_to_json(const KrausChannel& ch) {
  Json j;
  j["d"] = ch.input_dim();
  j["n"] = ch.output_dim();
  Json ops = Json::array();
  for (const Matrix& e : ch.kraus()) ops.push_back(matrix_to_json(e));
  j["kraus"] = std::move(ops);
  return j;
}

KrausChannel channel_from_json(const Json& j) {
  if (!j.is_object()) parse_error("channel must be a JSON object");
  const Index d = get_dim(j, "d");
  const Index n = get_dim(j, "n");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    parse_error("channel needs a non-empty 'kraus' list");
  }
  std::vector<Matrix> ops;
  for (const Json& e : j["kraus"]) {
    Matrix m = matrix_from_json(e);
    if (m.rows() != n || m.cols() != d) parse_error("Kraus operator is not n x d");
    ops.push_back(std::move(m));
  }
  return KrausChannel(std::move(ops));
}

Json choi_to_json(const ChoiMatrix& c) {
  Json j;
  j["d"] = c.logical_dim;
  j["n"] = c.physical_dim;
  j["matrix"] = matrix_to_json(c.matrix);
  return j;
}

ChoiMatrix choi_from_json(const Json& j, ChoiSide side) {
  if (!j.is_object() || !j.contains("matrix")) parse_error("Choi JSON needs 'matrix'");
  ChoiMatrix c;
  c.logical_dim = get_dim(j, "d");
  c.physical_dim = get_dim(j, "n");
  c.side = side;
  c.matrix = matrix_from_json(j["matrix"]);
  if (c.matrix.rows() != c.logical_dim * c.physical_dim ||
      c.matrix.cols() != c.matrix.rows()) {
    parse_error("Choi matrix is not (d * n) square");
  }
  return c;
}

Json certificate_to_json(const OptimalityCertificate& c) {
  Json j;
  j["b_min_eig"] = c.b_min_eig;
  j["b_herm_residual"] = c.b_herm_residual;
  j["commutator_general"] = c.commutator_general;
  j["commutator_pgm"] = c.commutator_pgm;
  j["kl_residual"] = c.kl_residual;
  j["verdict"] = std::string(to_string(c.verdict));
  return j;
}

Json kkt_to_json(const KktCertificate& k) {
  Json j;
  j["lambda_min_eig"] = k.lambda_min_eig;
  j["lambda_herm_residual"] = k.lambda_herm_residual;
  j["gamma_min_eig"] = k.gamma_min_eig;
  j["slackness_lambda"] = k.slackness_lambda;
  j["slackness_gamma"] = k.slackness_gamma;
  j["stationarity_residual"] = k.stationarity_residual;
  j["satisfied"] = k.satisfied;
  return j;
}

Json solution_to_json(const RecoverySolution& s) {
  Json j;
  j["fidelity"] = s.fidelity;
  j["iterations"] = s.iterations;
  j["converged"] = s.converged;
  j["tp_defect"] = s.tp_defect;
  j["choi"] = matrix_to_json(s.choi.matrix);
  return j;
}

Json fixture_to_json(const ZooFixture& f) {
  Json j;
  j["name"] = f.name;
  const Json ch = channel_to_json(f.channel);
  for (auto it = ch.begin(); it != ch.end(); ++it) j[it.key()] = it.value();
  j["parameters"] = Json(f.parameters);
  Json expected = Json::object();
  for (const auto& [k, v] : f.expected) expected[k] = v;
  j["expected"] = std::move(expected);
  j["provenance"] = f.provenance;
  return j;
}

DensityOperator density_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("matrix")) parse_error("state object needs 'matrix'");
    return DensityOperator(matrix_from_json(j["matrix"]));
  }
  return DensityOperator(matrix_from_json(j));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace petzopt::io
