#include "polylin/bases.hpp"

#include <algorithm>

#include "polylin/errors.hpp"

namespace polylin {

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::Recurrence: return "recurrence";
    case BasisKind::Bernstein: return "bernstein";
    case BasisKind::Lagrange: return "lagrange";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& s) {
  if (s == "monomial") return BasisKind::Monomial;
  if (s == "recurrence") return BasisKind::Recurrence;
  if (s == "bernstein") return BasisKind::Bernstein;
  if (s == "lagrange") return BasisKind::Lagrange;
  throw ParseError("unknown basis kind '" + s + "'");
}

BasisSpec BasisSpec::monomial(int grade) { return {BasisKind::Monomial, grade, {}, {}, {}, {}}; }

BasisSpec BasisSpec::bernstein(int grade) { return {BasisKind::Bernstein, grade, {}, {}, {}, {}}; }

BasisSpec BasisSpec::lagrange(std::vector<Rational> nodes) {
  const int grade = static_cast<int>(nodes.size()) - 1;
  return {BasisKind::Lagrange, grade, {}, {}, {}, std::move(nodes)};
}

BasisSpec BasisSpec::recurrence(std::vector<Rational> alpha, std::vector<Rational> beta,
                                std::vector<Rational> gamma) {
  const int grade = static_cast<int>(alpha.size());
  return {BasisKind::Recurrence, grade, std::move(alpha), std::move(beta), std::move(gamma), {}};
}

BasisSpec BasisSpec::chebyshev(int grade) {
  std::vector<Rational> a(grade, Rational(1, 2)), b(grade, Rational(0)), g(grade, Rational(1, 2));
  if (grade > 0) {
    a[0] = 1;
    g[0] = 0;
  }
  return recurrence(std::move(a), std::move(b), std::move(g));
}

void validate(const BasisSpec& s) {
  if (s.grade < 0) throw PreconditionError("negative grade");
  switch (s.kind) {
    case BasisKind::Monomial:
    case BasisKind::Bernstein:
      break;
    case BasisKind::Recurrence: {
      const std::size_t l = s.grade;
      if (s.alpha.size() != l || s.beta.size() != l || s.gamma.size() != l)
        throw PreconditionError("recurrence arrays must have length grade");
      for (std::size_t k = 0; k < l; ++k)
        if (s.alpha[k] == 0) throw PreconditionError("zero alpha_" + std::to_string(k));
      break;
    }
    case BasisKind::Lagrange: {
      if (s.nodes.size() != static_cast<std::size_t>(s.grade) + 1)
        throw PreconditionError("lagrange basis needs grade+1 nodes");
      for (std::size_t i = 0; i < s.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < s.nodes.size(); ++j)
          if (s.nodes[i] == s.nodes[j]) throw PreconditionError("duplicate nodes");
      break;
    }
  }
}

void validate(const MatrixPolynomial& p) {
  validate(p.basis);
  if (p.coeffs.size() != static_cast<std::size_t>(p.grade()) + 1)
    throw DimensionError("coefficient count must be grade+1");
  for (const auto& c : p.coeffs)
    if (c.rows() != p.n || c.cols() != p.n) throw DimensionError("coefficient block is not n x n");
}

Poly BarycentricData::node_poly() const {
  std::vector<Rational> c = node_poly_coeffs;
  c.push_back(1);
  return Poly(std::move(c));
}

BarycentricData barycentric_weights(const std::vector<Rational>& nodes) {
  BarycentricData d;
  d.nodes = nodes;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Rational prod = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      if (nodes[j] == nodes[k]) throw PreconditionError("duplicate nodes");
      prod *= nodes[k] - nodes[j];
    }
    d.weights.push_back(1 / prod);
  }
  Poly w(1);
  for (const auto& t : nodes) w *= Poly::linear_root(t);
  d.node_poly_coeffs = w.coeffs();
  d.node_poly_coeffs.pop_back();
  return d;
}

std::vector<Poly> recurrence_basis_polys(const BasisSpec& s) {
  if (s.kind != BasisKind::Recurrence) throw PreconditionError("not a recurrence basis");
  validate(s);
  std::vector<Poly> phi{Poly(1)};
  for (int k = 0; k < s.grade; ++k) {
    Poly next = (Poly::z() - Poly(s.beta[k])) * phi[k];
    if (k > 0) next -= s.gamma[k] * phi[k - 1];
    phi.push_back(next * (1 / s.alpha[k]));
  }
  return phi;
}

std::vector<Poly> basis_polys(const BasisSpec& s) {
  validate(s);
  const int l = s.grade;
  std::vector<Poly> phi;
  switch (s.kind) {
    case BasisKind::Monomial:
      for (int k = 0; k <= l; ++k) phi.push_back(Poly::monomial(1, k));
      break;
    case BasisKind::Recurrence:
      phi = recurrence_basis_polys(s);
      break;
    case BasisKind::Bernstein: {
      const Poly one_minus_z({Rational(1), Rational(-1)});
      for (int k = 0; k <= l; ++k) {
        Poly b(Rational(binomial(l, k)));
        for (int i = 0; i < k; ++i) b *= Poly::z();
        for (int i = k; i < l; ++i) b *= one_minus_z;
        phi.push_back(b);
      }
      break;
    }
    case BasisKind::Lagrange: {
      auto bary = barycentric_weights(s.nodes);
      const Poly w = bary.node_poly();
      for (int k = 0; k <= l; ++k)
        phi.push_back(bary.weights[k] * exact_div(w, Poly::linear_root(s.nodes[k])));
      break;
    }
  }
  for (auto& p : phi) p = p.with_grade(l);
  return phi;
}

PolyMatrix MatrixPolynomial::to_poly_matrix() const {
  return PolyMatrix::from_coefficients(to_monomial(*this).coeffs);
}

Matrix MatrixPolynomial::eval(const Rational& x) const {
  auto phi = basis_polys(basis);
  Matrix out(n, n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k] * phi[k].eval(x);
  return out;
}

MatrixPolynomial MatrixPolynomial::scalar(BasisSpec basis, const std::vector<Rational>& c) {
  MatrixPolynomial p;
  p.n = 1;
  p.basis = std::move(basis);
  for (const auto& v : c) p.coeffs.push_back(Matrix{{v}});
  validate(p);
  return p;
}

MatrixPolynomial to_monomial(const MatrixPolynomial& p) {
  validate(p);
  if (p.basis.kind == BasisKind::Monomial) return p;
  const int l = p.grade();
  auto phi = basis_polys(p.basis);
  MatrixPolynomial out;
  out.n = p.n;
  out.basis = BasisSpec::monomial(l);
  out.coeffs.assign(l + 1, Matrix(p.n, p.n));
  for (int k = 0; k <= l; ++k)
    for (int j = 0; j <= phi[k].degree(); ++j)
      if (phi[k][j] != 0) out.coeffs[j] += p.coeffs[k] * phi[k][j];
  return out;
}

int degree(const MatrixPolynomial& p) {
  auto m = to_monomial(p);
  for (int k = m.grade(); k >= 0; --k)
    if (!m.coeffs[k].is_zero()) return k;
  return Poly::kZeroDegree;
}

MatrixPolynomial from_monomial(const MatrixPolynomial& p, const BasisSpec& target) {
  validate(target);
  const MatrixPolynomial m = to_monomial(p);
  if (target.grade < degree(m)) throw PreconditionError("grade too small");
  const int l = target.grade;
  const std::size_t n = p.n;
  std::vector<Matrix> a(l + 1, Matrix(n, n));
  for (int k = 0; k <= std::min(l, m.grade()); ++k) a[k] = m.coeffs[k];

  MatrixPolynomial out;
  out.n = n;
  out.basis = target;
  switch (target.kind) {
    case BasisKind::Monomial:
      out.coeffs = std::move(a);
      break;
    case BasisKind::Lagrange: {
      const PolyMatrix pm = PolyMatrix::from_coefficients(a);
      for (const auto& t : target.nodes) out.coeffs.push_back(pm.eval(t));
      break;
    }
    case BasisKind::Recurrence:
    case BasisKind::Bernstein: {
      // Monomial coefficients a_j = sum_k c_k T[k][j]; solve for c.
      auto phi = basis_polys(target);
      Matrix t(l + 1, l + 1);
      for (int k = 0; k <= l; ++k)
        for (int j = 0; j <= l; ++j) t(k, j) = phi[k][j];
      const Matrix tinv = inverse(t);
      out.coeffs.assign(l + 1, Matrix(n, n));
      for (int k = 0; k <= l; ++k)
        for (int j = 0; j <= l; ++j)
          if (tinv(j, k) != 0) out.coeffs[k] += a[j] * tinv(j, k);
      break;
    }
  }
  return out;
}

MatrixPolynomial convert(const MatrixPolynomial& p, const BasisSpec& target) {
  return from_monomial(p, target);
}

MatrixPolynomial degree_elevate(const MatrixPolynomial& p) {
  if (p.basis.kind != BasisKind::Bernstein) throw PreconditionError("degree_elevate: wrong basis");
  validate(p);
  const int l = p.grade();
  MatrixPolynomial out;
  out.n = p.n;
  out.basis = BasisSpec::bernstein(l + 1);
  for (int k = 0; k <= l + 1; ++k) {
    Matrix y(p.n, p.n);
    const Rational f = Rational(k) / (l + 1);
    if (k > 0) y += p.coeffs[k - 1] * f;
    if (k <= l) y += p.coeffs[k] * (1 - f);
    out.coeffs.push_back(std::move(y));
  }
  return out;
}

}  // namespace polylin
