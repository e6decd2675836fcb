#include "polylin/json_io.hpp"

#include "polylin/errors.hpp"

namespace polylin {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<Rational> rationals(const Json& j, const char* what) {
  std::vector<Rational> out;
  for (const auto& v : array(j, what)) out.push_back(rational_from_json(v));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Poly& p) { return rationals_json(p.graded_coeffs()); }

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const BasisSpec& b) {
  Json j = {{"kind", to_string(b.kind)}, {"grade", b.grade}};
  if (b.kind == BasisKind::Recurrence) {
    j["alpha"] = rationals_json(b.alpha);
    j["beta"] = rationals_json(b.beta);
    j["gamma"] = rationals_json(b.gamma);
  }
  if (b.kind == BasisKind::Lagrange) j["nodes"] = rationals_json(b.nodes);
  return j;
}

Json to_json(const MatrixPolynomial& p) {
  Json c = Json::array();
  for (const auto& m : p.coeffs) c.push_back(to_json(m));
  return {{"n", p.n}, {"basis", to_json(p.basis)}, {"coeffs", std::move(c)}};
}

Json to_json(const Pencil& l) {
  return {{"n", l.n}, {"blocks", l.blocks}, {"C1", to_json(l.c1)}, {"C0", to_json(l.c0)},
          {"basis", to_string(l.basis)}};
}

Json to_json(const Verdict& v) {
  Json j = {{"check", v.check}, {"ok", v.ok}};
  j["constant"] = v.constant ? to_json(*v.constant) : Json(nullptr);
  if (v.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    Json c = Json::object();
    for (const auto& [k, val] : v.counterexample) c[k] = val;
    j["counterexample"] = std::move(c);
  }
  return j;
}

Json mask_json(const std::vector<std::string>& grid) {
  Json rows = Json::array();
  for (const auto& r : grid) {
    Json row = Json::array();
    for (char c : r) row.push_back(std::string(1, c));
    rows.push_back(std::move(row));
  }
  return {{"mask", std::move(rows)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Matrix matrix_from_json(const Json& j) {
  array(j, "matrix");
  const std::size_t r = j.size();
  const std::size_t c = r == 0 ? 0 : array(j[0], "matrix row").size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (array(j[i], "matrix row").size() != c) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Poly poly_from_json(const Json& j) {
  auto c = rationals(j, "polynomial");
  if (c.empty()) throw ParseError("polynomial needs at least one coefficient");
  const int grade = static_cast<int>(c.size()) - 1;
  return Poly(std::move(c), grade);
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  const Json& e = j.is_array() ? j : field(j, "entries");
  array(e, "entries");
  const std::size_t r = e.size();
  const std::size_t c = r == 0 ? 0 : array(e[0], "row").size();
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (array(e[i], "row").size() != c) throw ParseError("ragged polynomial matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = poly_from_json(e[i][k]);
  }
  if (j.is_object() && j.contains("rows") && static_cast<std::size_t>(integer(j["rows"], "rows")) != r)
    throw ParseError("rows does not match entries");
  if (j.is_object() && j.contains("cols") && static_cast<std::size_t>(integer(j["cols"], "cols")) != c)
    throw ParseError("cols does not match entries");
  return m;
}

BasisSpec basis_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("kind must be a string");
  BasisSpec b;
  b.kind = parse_basis_kind(k.get<std::string>());
  if (b.kind == BasisKind::Recurrence) {
    b.alpha = rationals(field(j, "alpha"), "alpha");
    b.beta = rationals(field(j, "beta"), "beta");
    b.gamma = rationals(field(j, "gamma"), "gamma");
  }
  if (b.kind == BasisKind::Lagrange) b.nodes = rationals(field(j, "nodes"), "nodes");
  if (j.contains("grade")) {
    b.grade = static_cast<int>(integer(j["grade"], "grade"));
  } else if (b.kind == BasisKind::Recurrence) {
    b.grade = static_cast<int>(b.alpha.size());
  } else if (b.kind == BasisKind::Lagrange) {
    b.grade = static_cast<int>(b.nodes.size()) - 1;
  } else {
    throw ParseError("missing field 'grade'");
  }
  return b;
}

MatrixPolynomial matrix_polynomial_from_json(const Json& j) {
  MatrixPolynomial p;
  p.basis = basis_from_json(field(j, "basis"));
  for (const auto& c : array(field(j, "coeffs"), "coeffs")) {
    // Scalars are accepted for n = 1.
    if (c.is_array()) p.coeffs.push_back(matrix_from_json(c));
    else p.coeffs.push_back(Matrix{{rational_from_json(c)}});
  }
  p.n = j.contains("n") ? static_cast<std::size_t>(integer(j["n"], "n"))
                        : (p.coeffs.empty() ? 1 : p.coeffs[0].rows());
  if (p.coeffs.size() != static_cast<std::size_t>(p.basis.grade) + 1)
    throw ParseError("coeffs must have grade+1 entries");
  for (const auto& c : p.coeffs)
    if (c.rows() != p.n || c.cols() != p.n) throw ParseError("coefficient blocks must be n x n");
  return p;
}

Pencil pencil_from_json(const Json& j) {
  Pencil l;
  l.n = static_cast<std::size_t>(integer(field(j, "n"), "n"));
  l.blocks = static_cast<std::size_t>(integer(field(j, "blocks"), "blocks"));
  l.c1 = matrix_from_json(field(j, "C1"));
  l.c0 = matrix_from_json(field(j, "C0"));
  const Json& b = field(j, "basis");
  l.basis = parse_basis_kind(b.is_string() ? b.get<std::string>() : field(b, "kind").get<std::string>());
  const std::size_t nn = l.n * l.blocks;
  if (l.c1.rows() != nn || l.c1.cols() != nn || l.c0.rows() != nn || l.c0.cols() != nn)
    throw ParseError("pencil matrices must be (n*blocks) square");
  return l;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.check = field(j, "check").get<std::string>();
  v.ok = field(j, "ok").get<bool>();
  if (j.contains("constant") && !j["constant"].is_null()) v.constant = rational_from_json(j["constant"]);
  if (j.contains("counterexample") && j["counterexample"].is_object())
    for (const auto& [k, val] : j["counterexample"].items()) v.counterexample[k] = val.get<std::string>();
  return v;
}

std::vector<std::string> mask_from_json(const Json& j) {
  std::vector<std::string> out;
  for (const auto& row : array(field(j, "mask"), "mask")) {
    std::string s;
    for (const auto& c : array(row, "mask row")) s += c.get<std::string>();
    out.push_back(s);
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace polylin
