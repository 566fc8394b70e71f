#pragma once

#include <optional>
#include <string>

#include "nlie/algebra.hpp"

namespace nlie {

struct ParseError : NLieError {
  using NLieError::NLieError;
};

/// Algebra file format:
///   { "arity": n, "dim": d, "field": "Q" | "GF(p)",
///     "brackets": [ { "args": [i1 < ... < in], "value": { "k": "scalar" } } ] }
/// Indices are 1-based, omitted coordinates are zero, duplicate args entries
/// are rejected. fallback_field applies when the file omits "field".
NLieAlgebra parse_algebra(const std::string& json_text,
                          std::optional<FieldSpec> fallback_field = std::nullopt);

/// Canonical serialization: emit -> parse -> emit is byte-identical.
std::string emit_algebra(const NLieAlgebra& a);

NLieAlgebra read_algebra_file(const std::string& path,
                              std::optional<FieldSpec> fallback_field = std::nullopt);
void write_file(const std::string& path, const std::string& text);

/// FNV-1a digest of the canonical serialization, as fixed-width hex.
std::string algebra_digest(const NLieAlgebra& a);

/// Reinterpret the table over another field; requires integral coefficients
/// when moving between Q and GF(p).
NLieAlgebra reinterpret_field(const NLieAlgebra& a, const FieldSpec& target);

}  // namespace nlie
