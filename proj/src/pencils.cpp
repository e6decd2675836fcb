#include "polylin/pencils.hpp"

#include "polylin/errors.hpp"

namespace polylin {

namespace {

Pencil empty_pencil(const MatrixPolynomial& p, std::size_t blocks) {
  Pencil out;
  out.n = p.n;
  out.blocks = blocks;
  out.basis = p.basis.kind;
  out.c1 = Matrix(p.n * blocks, p.n * blocks);
  out.c0 = Matrix(p.n * blocks, p.n * blocks);
  return out;
}

void require_kind(const MatrixPolynomial& p, BasisKind k) {
  validate(p);
  if (p.basis.kind != k) throw PreconditionError("pencil builder: wrong basis kind");
}

}  // namespace

Pencil build_monomial_pencil(const MatrixPolynomial& p) {
  require_kind(p, BasisKind::Monomial);
  const std::size_t l = p.grade();
  if (l < 1) throw PreconditionError("monomial pencil needs grade >= 1");
  const std::size_t n = p.n;
  const Matrix id = Matrix::identity(n);
  Pencil out = empty_pencil(p, l);
  out.c1.set_block(0, 0, p.coeffs[l]);
  for (std::size_t j = 0; j < l; ++j) out.c0.set_block(0, j, -p.coeffs[l - 1 - j]);
  for (std::size_t r = 1; r < l; ++r) {
    out.c1.set_block(r, r, id);
    out.c0.set_block(r, r - 1, id);
  }
  return out;
}

Pencil build_recurrence_pencil(const MatrixPolynomial& p) {
  require_kind(p, BasisKind::Recurrence);
  const std::size_t l = p.grade();
  if (l < 2) throw PreconditionError("recurrence pencil needs grade >= 2");
  const auto& s = p.basis;
  const std::size_t n = p.n;
  const Matrix id = Matrix::identity(n);
  const Matrix& al = p.coeffs[l];
  const Rational& a = s.alpha[l - 1];
  Pencil out = empty_pencil(p, l);
  out.c1.set_block(0, 0, al * (1 / a));
  for (std::size_t j = 0; j < l; ++j) out.c0.set_block(0, j, -p.coeffs[l - 1 - j]);
  out.c0.set_block(0, 0, out.c0.block(0, 0, n) + al * (s.beta[l - 1] / a));
  out.c0.set_block(0, 1, out.c0.block(0, 1, n) + al * (s.gamma[l - 1] / a));
  for (std::size_t r = 1; r < l; ++r) {
    const std::size_t k = l - 1 - r;
    out.c1.set_block(r, r, id);
    out.c0.set_block(r, r - 1, id * s.alpha[k]);
    out.c0.set_block(r, r, id * s.beta[k]);
    if (r + 1 < l) out.c0.set_block(r, r + 1, id * s.gamma[k]);
  }
  return out;
}

Pencil build_bernstein_pencil(const MatrixPolynomial& p) {
  require_kind(p, BasisKind::Bernstein);
  const std::size_t l = p.grade();
  if (l < 2) throw PreconditionError("bernstein pencil needs grade >= 2");
  const std::size_t n = p.n;
  const Matrix id = Matrix::identity(n);
  const auto& y = p.coeffs;
  Pencil out = empty_pencil(p, l);
  out.c1.set_block(0, 0, y[l] * Rational(1, l) - y[l - 1]);
  out.c0.set_block(0, 0, -y[l - 1]);
  for (std::size_t j = 1; j < l; ++j) {
    out.c1.set_block(0, j, -y[l - 1 - j]);
    out.c0.set_block(0, j, -y[l - 1 - j]);
  }
  for (std::size_t r = 1; r < l; ++r) {
    out.c1.set_block(r, r - 1, id);
    out.c0.set_block(r, r - 1, id);
    out.c1.set_block(r, r, id * (Rational(r + 1) / (l - r)));
  }
  return out;
}

Pencil build_lagrange_pencil(const MatrixPolynomial& p) {
  require_kind(p, BasisKind::Lagrange);
  const std::size_t l = p.grade();
  if (l < 1) throw PreconditionError("lagrange pencil needs grade >= 1");
  const std::size_t n = p.n;
  const Matrix id = Matrix::identity(n);
  const auto bary = barycentric_weights(p.basis.nodes);
  Pencil out = empty_pencil(p, l + 2);
  for (std::size_t j = 1; j <= l + 1; ++j) out.c0.set_block(0, j, p.coeffs[l + 1 - j]);
  for (std::size_t r = 1; r <= l + 1; ++r) {
    const std::size_t k = l + 1 - r;
    out.c1.set_block(r, r, id);
    out.c0.set_block(r, 0, id * -bary.weights[k]);
    out.c0.set_block(r, r, id * p.basis.nodes[k]);
  }
  return out;
}

Pencil build_pencil(const MatrixPolynomial& p) {
  switch (p.basis.kind) {
    case BasisKind::Monomial: return build_monomial_pencil(p);
    case BasisKind::Recurrence: return build_recurrence_pencil(p);
    case BasisKind::Bernstein: return build_bernstein_pencil(p);
    case BasisKind::Lagrange: return build_lagrange_pencil(p);
  }
  throw PreconditionError("unknown basis");
}

Pencil standard_reversal(const Pencil& l) {
  Pencil out = l;
  out.c1 = l.c0;
  out.c0 = l.c1;
  return out;
}

Pencil shifted_reversal(const Pencil& l) {
  Pencil out = l;
  out.c1 = l.c0;
  out.c0 = l.c1 - l.c0;
  return out;
}

}  // namespace polylin
