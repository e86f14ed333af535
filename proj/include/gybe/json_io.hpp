#pragma once

#include <nlohmann/json.hpp>

#include "gybe/matrix.hpp"

namespace gybe {

// Reports and file formats use insertion-ordered JSON so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

/// Serialized scalar: list of terms {"p": numerator, "q": denominator,
/// "k": exponent}, meaning Σ (p/q)·ζ_N^k with N from the enclosing header.
Json scalar_to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const Json& j, int order, const std::string& where);

/// Matrix file: {"cyclotomic_order", "rows", "cols", "entries": row-major
/// scalar array}.
Json matrix_to_json(const ExactMatrix& m);
/// Decimal export for human inspection; clearly marked non-authoritative.
Json matrix_to_decimal_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json complex_to_json(const std::complex<double>& z);

}  // namespace gybe
