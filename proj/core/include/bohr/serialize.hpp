#pragma once

// JSON interchange. Matrices are {"dim": n, "entries": [[[re, im], ...], ...]}
// in row-major order (non-square Kraus operators use "rows"/"cols" instead of
// "dim"); vectors are [[re, im], ...]. Parsers throw InputError carrying the
// JSON path of the offending value.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohr/inequalities.hpp"
#include "bohr/linalg.hpp"
#include "bohr/order.hpp"
#include "bohr/posmaps.hpp"

namespace bohr {

using json = nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j, const std::string& path = "");

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& path = "");
/// Square, finite and Hermitian within tolerance.
HermitianMatrix hermitian_from_json(const json& j, const std::string& path = "");

json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j, const std::string& path = "");

std::vector<double> reals_from_json(const json& j, const std::string& path = "");
double real_from_json(const json& j, const std::string& path = "");

/// {"kind": "kraus" | "congruence", "data": [<matrix>, ...]}
json map_to_json(const PositiveMap& phi);
PositiveMap map_from_json(const json& j, const std::string& path = "");

/// {"entries": [{"mu", "alpha", "A", "phi"}, ...]}; "mu" defaults to 1 and a
/// missing "phi" means the identity map.
json field_to_json(const WeightedField& field);
WeightedField field_from_json(const json& j);

/// Same layout as a field, with "beta" in place of "alpha" and Hermitian
/// (not necessarily positive) operators.
json jensen_terms_to_json(std::span<const JensenTerm> terms);
std::vector<JensenTerm> jensen_terms_from_json(const json& j);

/// {context, r, alpha, dims, seed, min_gap_eigenvalue, verdict, tolerance,
///  gap_spectrum, near_equality}
json report_to_json(const InequalityReport& report);
/// {context, lhs, rhs, gap, verdict, tolerance, near_equality, r, alpha, z
///  [, cross_check_rhs]}
json scalar_report_to_json(const ScalarReport& report);

/// Parses a file, turning syntax errors into InputError with the byte
/// position reported by the parser.
json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& source);

/// Serialization used for every numeric output: 2-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace bohr
