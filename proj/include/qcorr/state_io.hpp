// Copyright 2026 The qcorr Authors.
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

/**
 * @file state_io.hpp
 * JSON serialization for states and measurement bases.
 *
 * Density matrix document:
 *
 *   {
 *     "labels": ["A", "B"],
 *     "dims": [2, 2],
 *     "matrix": [[[re, im], ...], ...]   // row-major, one row per entry
 *   }
 *
 * Pure state document: same "labels"/"dims", plus "vector": [[re, im], ...].
 * A basis document reuses the matrix schema; the matrix is interpreted as
 * a unitary whose columns are the measured basis vectors, and "labels" /
 * "dims" must describe the single measured subsystem.
 */

#ifndef QCORR_STATE_IO_HPP
#define QCORR_STATE_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace detail {

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

inline SubsystemLayout layout_from_json(const nlohmann::json& doc, const std::string& what) {
  if (!doc.contains("labels") || !doc["labels"].is_array())
    throw ValidationError(what + ": missing \"labels\" array");
  if (!doc.contains("dims") || !doc["dims"].is_array())
    throw ValidationError(what + ": missing \"dims\" array");
  if (doc["labels"].size() != doc["dims"].size())
    throw ValidationError(what + ": \"labels\" and \"dims\" differ in length");
  std::vector<Subsystem> factors;
  for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
    if (!doc["labels"][i].is_string())
      throw ValidationError(what + ": labels must be strings");
    if (!doc["dims"][i].is_number_integer() || doc["dims"][i].get<long long>() < 1)
      throw ValidationError(what + ": dims must be positive integers");
    factors.push_back({doc["labels"][i].get<std::string>(),
                       static_cast<std::size_t>(doc["dims"][i].get<long long>())});
  }
  return SubsystemLayout(factors);
}

inline cplx entry_from_json(const nlohmann::json& cell, const std::string& what) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
    throw ValidationError(what + ": entries must be [re, im] number pairs");
  return {cell[0].get<double>(), cell[1].get<double>()};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& doc, std::size_t dim,
                                      const std::string& what) {
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw ValidationError(what + ": missing \"matrix\" array");
  const nlohmann::json& rows = doc["matrix"];
  if (rows.size() != dim)
    throw ValidationError(what + ": matrix has " + std::to_string(rows.size()) +
                          " rows, layout dimension is " + std::to_string(dim));
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      throw ValidationError(what + ": matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = entry_from_json(rows[r][c], what);
  }
  return m;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json layout_to_json(const SubsystemLayout& layout) {
  nlohmann::json doc;
  doc["labels"] = nlohmann::json::array();
  doc["dims"] = nlohmann::json::array();
  for (std::size_t i = 0; i < layout.factor_count(); ++i) {
    doc["labels"].push_back(layout.factor(i).label);
    doc["dims"].push_back(layout.factor(i).dim);
  }
  return doc;
}

}  // namespace detail

inline DensityMatrix density_from_json(const nlohmann::json& doc) {
  const SubsystemLayout layout = detail::layout_from_json(doc, "density matrix document");
  return DensityMatrix(detail::matrix_from_json(doc, layout.total_dim(), "density matrix document"),
                       layout);
}

inline PureState pure_from_json(const nlohmann::json& doc) {
  const SubsystemLayout layout = detail::layout_from_json(doc, "pure state document");
  if (!doc.contains("vector") || !doc["vector"].is_array())
    throw ValidationError("pure state document: missing \"vector\" array");
  const nlohmann::json& cells = doc["vector"];
  if (cells.size() != layout.total_dim())
    throw ValidationError("pure state document: vector has " + std::to_string(cells.size()) +
                          " entries, layout dimension is " + std::to_string(layout.total_dim()));
  std::vector<cplx> amps(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    amps[i] = detail::entry_from_json(cells[i], "pure state document");
  return PureState(std::move(amps), layout);
}

/// Load either document kind: "vector" selects a pure state, which is
/// converted to its density matrix.
inline DensityMatrix state_from_file(const std::string& path) {
  const nlohmann::json doc = detail::load_json_file(path);
  if (doc.contains("vector")) return from_pure(pure_from_json(doc));
  return density_from_json(doc);
}

inline PureState pure_from_file(const std::string& path) {
  const nlohmann::json doc = detail::load_json_file(path);
  if (!doc.contains("vector"))
    throw ValidationError(path + ": expected a pure state document with a \"vector\" key");
  return pure_from_json(doc);
}

inline nlohmann::json density_to_json(const DensityMatrix& rho) {
  nlohmann::json doc = detail::layout_to_json(rho.layout());
  doc["matrix"] = detail::matrix_to_json(rho.matrix());
  return doc;
}

inline nlohmann::json pure_to_json(const PureState& psi) {
  nlohmann::json doc = detail::layout_to_json(psi.layout());
  nlohmann::json cells = nlohmann::json::array();
  for (const cplx& a : psi.amplitudes()) cells.push_back({a.real(), a.imag()});
  doc["vector"] = std::move(cells);
  return doc;
}

/// Basis file: matrix schema, columns of "matrix" are the measurement
/// basis vectors for subsystem `measured`.
inline Povm basis_from_file(const std::string& path, const std::string& measured) {
  const nlohmann::json doc = detail::load_json_file(path);
  const SubsystemLayout layout = detail::layout_from_json(doc, "basis document");
  if (layout.factor_count() != 1)
    throw ValidationError("basis document: expected exactly one subsystem");
  const ComplexMatrix u =
      detail::matrix_from_json(doc, layout.total_dim(), "basis document");
  return basis_from_unitary(u, measured);
}

}  // namespace qcorr

#endif  // QCORR_STATE_IO_HPP
