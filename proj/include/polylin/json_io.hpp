#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "polylin/bases.hpp"
#include "polylin/equivalence.hpp"
#include "polylin/normal_forms.hpp"
#include "polylin/pencils.hpp"
#include "polylin/verify.hpp"

namespace polylin {

using Json = nlohmann::ordered_json;

// Writers. Rationals are strings "p/q" or "p".
Json to_json(const Rational& r);
Json to_json(const Matrix& m);
/// Entry = coefficient strings, constant term first, length grade+1.
Json to_json(const Poly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const BasisSpec& b);
Json to_json(const MatrixPolynomial& p);
Json to_json(const Pencil& l);
Json to_json(const Verdict& v);
Json mask_json(const std::vector<std::string>& grid);

// Readers; throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Poly poly_from_json(const Json& j);
PolyMatrix poly_matrix_from_json(const Json& j);
BasisSpec basis_from_json(const Json& j);
MatrixPolynomial matrix_polynomial_from_json(const Json& j);
Pencil pencil_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);
std::vector<std::string> mask_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace polylin
