#include "filiform/json_io.hpp"

#include <set>
#include <sstream>

namespace filiform {

namespace {

Index require_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw document_error(what + " must be an integer");
  return j.get<Index>();
}

}  // namespace

Json document_to_json(const AlgebraDocument& doc) {
  Json out;
  out["dim"] = doc.algebra.dim();
  if (doc.name) out["name"] = *doc.name;
  if (doc.params) out["params"] = *doc.params;
  Json constants = Json::array();
  for (const auto& [key, g] : doc.algebra.constants()) {
    Json entry;
    entry["i"] = key[0] + 1;
    entry["j"] = key[1] + 1;
    entry["k"] = key[2] + 1;
    entry["value"] = to_string(g);
    constants.push_back(std::move(entry));
  }
  out["constants"] = std::move(constants);
  return out;
}

std::string serialize_document(const AlgebraDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

AlgebraDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw document_error("document must be a JSON object");
  if (!j.contains("dim")) throw document_error("document is missing \"dim\"");
  const Index dim = require_integer(j.at("dim"), "\"dim\"");
  if (dim <= 0) throw document_error("\"dim\" must be positive");
  Algebra a(dim);
  if (!j.contains("constants") || !j.at("constants").is_array()) {
    throw document_error("document is missing the \"constants\" array");
  }
  std::set<Algebra::Key> seen;
  for (const Json& entry : j.at("constants")) {
    if (!entry.is_object()) throw document_error("constants entries must be objects");
    for (const char* field : {"i", "j", "k", "value"}) {
      if (!entry.contains(field)) {
        throw document_error(std::string("constants entry is missing \"") + field + "\"");
      }
    }
    const Index i = require_integer(entry.at("i"), "\"i\"");
    const Index jj = require_integer(entry.at("j"), "\"j\"");
    const Index k = require_integer(entry.at("k"), "\"k\"");
    for (Index idx : {i, jj, k}) {
      if (idx < 1 || idx > dim) {
        std::ostringstream os;
        os << "constant index " << idx << " out of range [1, " << dim << "]";
        throw document_error(os.str());
      }
    }
    if (!entry.at("value").is_string()) throw document_error("\"value\" must be a rational string");
    Rat v;
    try {
      v = parse_rational(entry.at("value").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw document_error(e.what());
    }
    std::ostringstream at;
    at << "(" << i << "," << jj << "," << k << ")";
    if (sgn(v) == 0) throw document_error("zero constant at " + at.str());
    if (!seen.insert({i - 1, jj - 1, k - 1}).second) {
      throw document_error("duplicate constant at " + at.str());
    }
    a.set(i - 1, jj - 1, k - 1, std::move(v));
  }
  AlgebraDocument doc(std::move(a));
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw document_error("\"name\" must be a string");
    doc.name = j.at("name").get<std::string>();
  }
  if (j.contains("params")) doc.params = j.at("params");
  return doc;
}

AlgebraDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw document_error(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

Json weights_to_json(const WeightVector& w) {
  Json out = Json::array();
  for (Index i = 0; i < w.size(); ++i) out.push_back(w(i));
  return out;
}

WeightVector weights_from_json(const Json& j) {
  if (!j.is_array()) throw document_error("weights must be an integer array");
  WeightVector w(static_cast<Index>(j.size()));
  Index t = 0;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw document_error("weights must be integers");
    w(t++) = v.get<std::int64_t>();
  }
  return w;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw document_error("matrix must be a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.at(0).size());
  RatMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw document_error("matrix rows must all have the same length");
    }
    for (Index c = 0; c < cols; ++c) {
      const Json& v = row.at(static_cast<std::size_t>(c));
      if (!v.is_string()) throw document_error("matrix entries must be rational strings");
      try {
        m(r, c) = parse_rational(v.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw document_error(e.what());
      }
    }
  }
  return m;
}

}  // namespace filiform
