#pragma once

#include "filiform/algebra.hpp"
#include "filiform/gradation.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace filiform {

using Json = nlohmann::ordered_json;

/// Thrown on malformed or semantically invalid documents. For malformed
/// JSON the message carries the byte position reported by the parser.
class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interchange form of an algebra: dimension plus the nonzero constants
/// as 1-based index triples with canonical rational strings, optionally
/// tagged with the family name and parameters that produced it.
struct AlgebraDocument {
  Algebra algebra;
  std::optional<std::string> name;
  std::optional<Json> params;

  explicit AlgebraDocument(Algebra a) : algebra(std::move(a)) {}
};

/// Serialization is canonical: constants sorted by (i, j, k), values in
/// lowest terms, fixed key order. parse(serialize(d)) == d.
Json document_to_json(const AlgebraDocument& doc);
std::string serialize_document(const AlgebraDocument& doc);

AlgebraDocument document_from_json(const Json& j);
/// Throws document_error on malformed JSON (with position info) and on
/// invalid documents (bad indices, zero or duplicate constants).
AlgebraDocument parse_document(const std::string& text);

Json weights_to_json(const WeightVector& w);
WeightVector weights_from_json(const Json& j);

/// n x n matrix as an array of rows of canonical rational strings.
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

}  // namespace filiform
