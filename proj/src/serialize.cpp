// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qcorr {

Json json_number(double value) {
  if (!std::isfinite(value))
    return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

Json complex_to_json(const Complex& z) {
  return Json::array({json_number(z.real()), json_number(z.imag())});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorKind::ParseError, "complex number must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

bool looks_like_complex(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

}  // namespace

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json_flat(const CMatrix& m) {
  Json flat = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      flat.push_back(complex_to_json(m(i, j)));
  return flat;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::ParseError, "matrix must be a nonempty array");
  if (looks_like_complex(j[0])) {
    // flat row-major; length must be a perfect square
    const auto n = j.size();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(
        static_cast<double>(n))));
    if (d * d != static_cast<Eigen::Index>(n))
      throw Error(ErrorKind::ParseError,
                  "flat matrix length is not a perfect square",
                  static_cast<double>(n));
    CMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k)
        m(i, k) = complex_from_json(j[static_cast<std::size_t>(i * d + k)]);
    return m;
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::ParseError, "ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const DensityMatrix& rho) {
  Json j;
  j["dims"] = rho.dims;
  j["matrix"] = to_json(rho.matrix);
  return j;
}

DensityMatrix density_from_json(const Json& j, const Tolerances& tol) {
  if (!j.contains("dims") || !j.contains("matrix"))
    throw Error(ErrorKind::ParseError, "state needs \"dims\" and \"matrix\"");
  std::vector<int> dims = j["dims"].get<std::vector<int>>();
  return validate_density(matrix_from_json(j["matrix"]), std::move(dims), tol);
}

Json to_json(const KrausChannel& ch) {
  Json j;
  j["dim"] = ch.dim;
  Json ops = Json::array();
  for (const auto& e : ch.kraus) ops.push_back(to_json_flat(e));
  j["kraus"] = std::move(ops);
  return j;
}

KrausChannel channel_from_json(const Json& j, const Tolerances& tol) {
  if (!j.contains("dim") || !j.contains("kraus"))
    throw Error(ErrorKind::ParseError, "channel needs \"dim\" and \"kraus\"");
  const int dim = j["dim"].get<int>();
  std::vector<CMatrix> kraus;
  for (const Json& op : j["kraus"]) {
    CMatrix e = matrix_from_json(op);
    if (e.rows() != dim)
      throw Error(ErrorKind::ParseError, "Kraus operator size != dim");
    kraus.push_back(std::move(e));
  }
  return validate_channel(std::move(kraus), tol);
}

Json to_json(const BlochVector& v) {
  return Json::array(
      {json_number(v.x), json_number(v.y), json_number(v.z)});
}

Json to_json(const ChannelClass& cls) {
  Json j;
  j["unital"] = cls.unital;
  j["semi_classical"] = cls.semi_classical;
  j["can_create_qc"] = cls.can_create_qc;
  j["advisory"] = cls.advisory;
  j["sc_basis"] = cls.sc_basis ? to_json(*cls.sc_basis) : Json(nullptr);
  j["mixed_state_shift"] =
      cls.mixed_state_shift ? to_json(*cls.mixed_state_shift) : Json(nullptr);
  return j;
}

Json to_json(const ProductBasis& basis) {
  Json locals = Json::array();
  for (const auto& u : basis.locals) locals.push_back(to_json(u));
  Json j;
  j["locals"] = std::move(locals);
  return j;
}

ProductBasis product_basis_from_json(const Json& j) {
  if (!j.contains("locals"))
    throw Error(ErrorKind::ParseError, "product basis needs \"locals\"");
  std::vector<CMatrix> locals;
  for (const Json& u : j["locals"]) locals.push_back(matrix_from_json(u));
  return make_product_basis(std::move(locals));
}

Json to_json(const ClassicalityVerdict& verdict) {
  Json j;
  j["is_cc"] = verdict.is_cc;
  j["residual"] = json_number(verdict.residual);
  j["exact"] = verdict.exact;
  j["witness_basis"] =
      verdict.witness_basis ? to_json(*verdict.witness_basis) : Json(nullptr);
  return j;
}

Json to_json(const CCState& cc) {
  Json probs = Json::array();
  for (Eigen::Index i = 0; i < cc.probs.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < cc.probs.cols(); ++k)
      row.push_back(json_number(cc.probs(i, k)));
    probs.push_back(std::move(row));
  }
  Json j;
  j["probs"] = std::move(probs);
  j["basis"] = to_json(cc.basis);
  return j;
}

CCState cc_state_from_json(const Json& j) {
  if (!j.contains("probs") || !j.contains("basis"))
    throw Error(ErrorKind::ParseError, "CC state needs \"probs\" and \"basis\"");
  ProductBasis basis = product_basis_from_json(j["basis"]);
  const auto dims = basis.dims();
  const Json& rows = j["probs"];
  RMatrix probs(dims[0], dims[1]);
  if (static_cast<int>(rows.size()) != dims[0])
    throw Error(ErrorKind::ParseError, "probability table shape mismatch");
  for (int i = 0; i < dims[0]; ++i) {
    if (static_cast<int>(rows[i].size()) != dims[1])
      throw Error(ErrorKind::ParseError, "probability table shape mismatch");
    for (int k = 0; k < dims[1]; ++k) probs(i, k) = rows[i][k].get<double>();
  }
  return make_cc_state(std::move(probs), std::move(basis));
}

Json to_json(const MeasureResult& result) {
  Json j;
  j["value"] = json_number(result.value);
  j["witness"] = to_json(result.witness);
  Json d;
  d["restarts"] = result.diagnostics.restarts;
  d["best_restart"] = result.diagnostics.best_restart;
  d["converged"] = result.diagnostics.converged;
  d["grad_norm"] = json_number(result.diagnostics.grad_norm);
  j["diagnostics"] = std::move(d);
  return j;
}

Json to_json(const ReproReport& report) {
  Json j;
  j["case"] = report.name;
  j["pass"] = report.pass();
  Json quantities;
  for (const auto& [name, value] : report.quantities)
    quantities[name] = json_number(value);
  j["quantities"] = std::move(quantities);
  Json assertions = Json::array();
  for (const auto& a : report.assertions) {
    Json row;
    row["name"] = a.name;
    row["pass"] = a.pass;
    row["measured"] = json_number(a.measured);
    row["comparison"] = a.comparison;
    row["threshold"] = json_number(a.threshold);
    assertions.push_back(std::move(row));
  }
  j["assertions"] = std::move(assertions);
  return j;
}

namespace {

void table_lines(const Json& node, const std::string& prefix,
                 std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      const std::string path = prefix.empty() ? key : prefix + "." + key;
      table_lines(value, path, out);
    }
    return;
  }
  if (node.is_array()) {
    const bool scalars = std::all_of(
        node.begin(), node.end(), [](const Json& v) { return !v.is_structured(); });
    if (scalars) {
      out << prefix << " = ";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) out << ", ";
        out << node[i].dump();
      }
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i)
      table_lines(node[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << " = " << node.dump() << "\n";
}

}  // namespace

std::string to_table(const Json& payload) {
  std::ostringstream out;
  table_lines(payload, "", out);
  return out.str();
}

}  // namespace qcorr
