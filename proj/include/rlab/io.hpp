#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rlab/cayley.hpp"
#include "rlab/matpoly.hpp"
#include "rlab/multipoly.hpp"
#include "rlab/rootfinder.hpp"

namespace rlab::io {

using nlohmann::json;

json domain_to_json(const Domain& domain);
Domain domain_from_json(const json& j);

/// {"name": "chebyshev"} or {"name": "custom", "alpha": [...], "beta": [...],
/// "gamma": [[...]], "domain": ...}. Complex table entries are [re, im].
json basis_to_json(const DegreeGradedBasis& basis);
DegreeGradedBasis basis_from_json(const json& j);

/// {"basis", "dim", "polys": [{"degrees", "coeffs_real", "coeffs_imag"}], "domain"};
/// coefficients flat row-major, last variable fastest.
json system_to_json(const PolynomialSystem& sys);
PolynomialSystem system_from_json(const json& j);

/// {"basis", "size", "degree", "coeffs": [{"real": [...], "imag": [...]}]},
/// each coefficient matrix flattened row-major.
json matpoly_to_json(const MatrixPolynomial& p);
MatrixPolynomial matpoly_from_json(const json& j);

/// matpoly JSON plus "unfolding": {"taus", "row_strides", "col_strides"}.
json cayley_to_json(const CayleyResultant& res);

json reports_to_json(const std::vector<RootReport>& reports);
std::string reports_to_csv(const std::vector<RootReport>& reports);

json conditions_to_json(const std::vector<ConditionReport>& rows);
std::string conditions_to_csv(const std::vector<ConditionReport>& rows);

/// 17 significant digits, so values round-trip through parsing.
std::string format_double(double x);

json read_json_file(const std::string& path);

/// Writes to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace rlab::io
