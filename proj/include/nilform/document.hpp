#ifndef NILFORM_DOCUMENT_HPP
#define NILFORM_DOCUMENT_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilform/errors.hpp"
#include "nilform/gallery.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/matrix.hpp"
#include "nilform/metric.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

using json = nlohmann::json;

inline std::size_t max_document_dim() {
  if (const char* env = std::getenv("NILFORM_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return std::size_t(v);
    throw validation_error("NILFORM_MAX_DIM is not a positive integer");
  }
  return 64;
}

/// Interchange document: an algebra by sparse bracket triples, an optional
/// symmetric form, and optional annotations. Rationals travel as strings.
struct AlgebraDocument {
  std::string name;
  LieAlgebra algebra;
  std::optional<SymBilinearForm> form;
  std::optional<Matrix> stabilizer_h;  // rows: basis vectors of h
  std::optional<Matrix> center_part_a; // rows: designated center part A

  static Matrix parse_matrix(const json& j, const std::string& what,
                             std::size_t expected_cols) {
    if (!j.is_array()) throw validation_error(what + " must be an array of rows");
    std::vector<Vec> rows;
    for (const auto& jrow : j) {
      if (!jrow.is_array()) throw validation_error(what + " rows must be arrays");
      Vec row;
      for (const auto& cell : jrow) {
        if (!cell.is_string())
          throw validation_error(what + " entries must be rational strings");
        row.push_back(Rational::parse(cell.get<std::string>()));
      }
      if (row.size() != expected_cols)
        throw validation_error(what + " row length does not match the dimension");
      rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix(0, expected_cols);
    return Matrix::from_rows(rows);
  }

  static json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
      rows.push_back(std::move(row));
    }
    return rows;
  }

  static AlgebraDocument from_json(const json& j, std::size_t max_dim = max_document_dim()) {
    if (!j.is_object()) throw validation_error("document must be a JSON object");
    AlgebraDocument doc;
    doc.name = j.value("name", std::string("unnamed"));
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
      throw validation_error("document needs a nonnegative integer 'dim'");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (dim > max_dim)
      throw validation_error("dimension " + std::to_string(dim) + " exceeds the cap " +
                             std::to_string(max_dim) + " (NILFORM_MAX_DIM)");
    std::vector<std::string> labels;
    if (j.contains("basis")) {
      for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
      if (labels.size() != dim)
        throw validation_error("basis label count does not match the dimension");
    }
    LieAlgebra g(dim, labels);
    if (j.contains("brackets")) {
      if (!j["brackets"].is_array()) throw validation_error("'brackets' must be an array");
      for (const auto& br : j["brackets"]) {
        if (!br.contains("i") || !br.contains("j") || !br.contains("coeffs"))
          throw validation_error("bracket entries need fields i, j, coeffs");
        const std::size_t i = br["i"].get<std::size_t>();
        const std::size_t jj = br["j"].get<std::size_t>();
        if (i >= dim || jj >= dim) throw validation_error("bracket index out of range");
        if (i >= jj) throw validation_error("bracket entries must have i < j");
        Vec coeffs(dim, Rational(0));
        for (const auto& [key, val] : br["coeffs"].items()) {
          std::size_t k = 0;
          try {
            k = std::stoul(key);
          } catch (...) {
            throw validation_error("bracket coefficient key '" + key + "' is not an index");
          }
          if (k >= dim) throw validation_error("bracket coefficient index out of range");
          if (!val.is_string())
            throw validation_error("bracket coefficients must be rational strings");
          coeffs[k] = Rational::parse(val.get<std::string>());
        }
        g.set_bracket(i, jj, coeffs);
      }
    }
    if (auto issue = g.validate()) throw validation_error(issue->str());
    doc.algebra = std::move(g);
    if (j.contains("form") && !j["form"].is_null()) {
      Matrix gram = parse_matrix(j["form"], "form", dim);
      if (gram.rows() != dim) throw validation_error("form must be a dim x dim matrix");
      doc.form = SymBilinearForm(std::move(gram)); // validates symmetry
    }
    if (j.contains("annotations") && !j["annotations"].is_null()) {
      const auto& ann = j["annotations"];
      if (ann.contains("stabilizer_h"))
        doc.stabilizer_h = parse_matrix(ann["stabilizer_h"], "stabilizer_h", dim);
      if (ann.contains("center_part_A"))
        doc.center_part_a = parse_matrix(ann["center_part_A"], "center_part_A", dim);
    }
    return doc;
  }

  static AlgebraDocument from_gallery(const GalleryEntry& e) {
    AlgebraDocument doc;
    doc.name = e.name;
    doc.algebra = e.algebra;
    doc.form = e.form;
    doc.stabilizer_h = e.stabilizer_h;
    doc.center_part_a = e.center_part_a;
    return doc;
  }

  json to_json() const {
    json j;
    j["name"] = name;
    j["dim"] = algebra.dim();
    j["basis"] = algebra.labels();
    json brackets = json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i)
      for (std::size_t jj = i + 1; jj < algebra.dim(); ++jj) {
        json coeffs = json::object();
        for (std::size_t k = 0; k < algebra.dim(); ++k)
          if (!algebra.c(i, jj, k).is_zero())
            coeffs[std::to_string(k)] = algebra.c(i, jj, k).str();
        if (!coeffs.empty())
          brackets.push_back(json{{"i", i}, {"j", jj}, {"coeffs", coeffs}});
      }
    j["brackets"] = std::move(brackets);
    if (form) j["form"] = matrix_to_json(form->gram);
    json ann = json::object();
    if (stabilizer_h) ann["stabilizer_h"] = matrix_to_json(*stabilizer_h);
    if (center_part_a) ann["center_part_A"] = matrix_to_json(*center_part_a);
    if (!ann.empty()) j["annotations"] = std::move(ann);
    return j;
  }
};

/// Resolves "gallery://NAME" or a filesystem path.
inline AlgebraDocument load_document(const std::string& source) {
  const std::string prefix = "gallery://";
  if (source.rfind(prefix, 0) == 0)
    return AlgebraDocument::from_gallery(gallery_get(source.substr(prefix.size())));
  std::ifstream in(source);
  if (!in) throw validation_error("cannot open input file '" + source + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("JSON parse error: ") + e.what());
  }
  return AlgebraDocument::from_json(j);
}

/// FNV-1a digest of the canonical serialization; stable input fingerprint.
inline std::string document_digest(const AlgebraDocument& doc) {
  const std::string dump = doc.to_json().dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

} // namespace nilform

#endif
