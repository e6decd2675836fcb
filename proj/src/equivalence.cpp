#include "polylin/equivalence.hpp"

#include "polylin/errors.hpp"

namespace polylin {

namespace {

PolyMatrix scaled_identity(const Poly& s, std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

PolyMatrix divide_by_linear(const PolyMatrix& m, const Rational& a) {
  PolyMatrix out(m.rows(), m.cols());
  const Poly d = Poly::linear_root(a);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = exact_div(m(i, j), d);
  return out;
}

void expect(bool ok, const std::string& what, int grade) {
  if (!ok) throw ConjectureFailure(what, grade);
}

void check_analogue(const HermiteAnalogue& ha, const Pencil& l, int grade) {
  expect(ha.uinv * ha.h == l.to_poly_matrix(), "Uinv * H != L", grade);
}

MatrixPolynomial padded_monomial(const MatrixPolynomial& p, int grade) {
  MatrixPolynomial m = to_monomial(p);
  m.coeffs.resize(grade + 1, Matrix(p.n, p.n));
  m.basis = BasisSpec::monomial(grade);
  return m;
}

void check_strict(const StrictEquivalence& se, const Pencil& from, const Pencil& to,
                  const std::string& what, int grade) {
  expect(se.u * from.c1 * se.w == to.c1, what + ": U C1 W != C1'", grade);
  expect(se.u * from.c0 * se.w == to.c0, what + ": U C0 W != C0'", grade);
}

}  // namespace

Matrix block_reversal(std::size_t blocks, std::size_t n) {
  Matrix j(blocks, blocks);
  for (std::size_t i = 0; i < blocks; ++i) j(i, blocks - 1 - i) = 1;
  return j.kron_identity(n);
}

CofactorPair monomial_cofactors(const MatrixPolynomial& p) {
  if (p.basis.kind != BasisKind::Monomial) throw PreconditionError("monomial_cofactors: wrong basis");
  validate(p);
  const std::size_t l = p.grade(), n = p.n;
  if (l < 1) throw PreconditionError("monomial_cofactors needs grade >= 1");
  const Poly z = Poly::z();
  CofactorPair cf{PolyMatrix(l * n, l * n), PolyMatrix(l * n, l * n)};
  cf.e.set_block(0, 0, PolyMatrix::identity(n));
  PolyMatrix h(p.coeffs[l]);
  for (std::size_t k = l - 1; k >= 1; --k) {
    h = PolyMatrix(p.coeffs[k]) + h * z;
    cf.e.set_block(0, l - k, h);
  }
  for (std::size_t r = 1; r < l; ++r)
    for (std::size_t j = l - r; j < l; ++j)
      cf.e.set_block(r, j, scaled_identity(Poly::monomial(-1, j - (l - r)), n));
  for (std::size_t i = 0; i < l; ++i) {
    cf.f.set_block(i, 0, scaled_identity(Poly::monomial(1, l - 1 - i), n));
    if (i + 1 < l) cf.f.set_block(i, l - 1 - i, PolyMatrix::identity(n));
  }
  return cf;
}

HermiteAnalogue recurrence_hermite_analogue(const MatrixPolynomial& p, const Pencil& l,
                                            bool monic) {
  if (p.basis.kind != BasisKind::Recurrence) throw PreconditionError("recurrence_hermite_analogue: wrong basis");
  const std::size_t m = l.blocks, n = p.n;
  const auto phi = recurrence_basis_polys(p.basis);
  PolyMatrix corner = p.to_poly_matrix();
  PolyMatrix u0 = PolyMatrix::identity(n);
  if (monic) {
    const Matrix lead = to_monomial(p).coeffs[p.grade()];
    auto inv = try_inverse(lead);
    if (!inv) throw GenericityFailure();
    u0 = PolyMatrix(lead);
    corner = PolyMatrix(*inv) * corner;
  }
  HermiteAnalogue ha{l.to_poly_matrix(), PolyMatrix::identity(m * n), n, m, m - 1};
  for (std::size_t r = 0; r < m; ++r) ha.uinv.set_block(r, m - 1, PolyMatrix(n, n));
  ha.uinv.set_block(0, m - 1, u0);
  for (std::size_t r = 0; r + 1 < m; ++r) ha.h.set_block(r, m - 1, scaled_identity(-phi[m - 1 - r], n));
  ha.h.set_block(m - 1, m - 1, corner);
  check_analogue(ha, l, p.grade());
  return ha;
}

HermiteAnalogue bernstein_hermite_analogue(const MatrixPolynomial& p, const Pencil& l) {
  if (p.basis.kind != BasisKind::Bernstein) throw PreconditionError("bernstein_hermite_analogue: wrong basis");
  const std::size_t m = l.blocks, n = p.n;
  const int ell = p.grade();
  auto inv = try_inverse(p.coeffs[ell]);
  if (!inv) throw SingularAtOne();
  const PolyMatrix p1inv(*inv);
  const PolyMatrix pz = p.to_poly_matrix();
  const PolyMatrix lz = l.to_poly_matrix();
  const Poly z = Poly::z();

  std::vector<PolyMatrix> w(m), x(m - 1);
  w[m - 1] = p1inv * Poly(ell);
  x[m - 2] = divide_by_linear(scaled_identity(Rational(ell) * z, n) - w[m - 1] * pz, 1);
  for (std::size_t r = m - 2; r >= 1; --r) {
    const Rational d = Rational(r + 1) / (ell - r);
    w[r] = -PolyMatrix(x[r].eval(1)) * p1inv * Poly(d);
    x[r - 1] = divide_by_linear(-(x[r] * (d * z)) - w[r] * pz, 1);
  }
  Matrix acc(n, n);
  for (std::size_t j = 0; j + 1 < m; ++j) acc += lz.block(0, j, n).eval(1) * x[j].eval(1);
  w[0] = -PolyMatrix(acc) * p1inv;

  HermiteAnalogue ha{lz, PolyMatrix::identity(m * n), n, m, m - 1};
  for (std::size_t r = 0; r < m; ++r) ha.uinv.set_block(r, m - 1, w[r]);
  for (std::size_t r = 0; r + 1 < m; ++r) ha.h.set_block(r, m - 1, x[r]);
  ha.h.set_block(m - 1, m - 1, pz);
  check_analogue(ha, l, ell);
  return ha;
}

HermiteAnalogue lagrange_hermite_factors(const MatrixPolynomial& p, const Pencil& l) {
  if (p.basis.kind != BasisKind::Lagrange) throw PreconditionError("lagrange_hermite_factors: wrong basis");
  const std::size_t ell = p.grade(), n = p.n, m = ell + 2;
  std::vector<Matrix> pinv;
  for (std::size_t k = 0; k <= ell; ++k) {
    auto inv = try_inverse(p.coeffs[k]);
    if (!inv) throw SingularNodeValue(k);
    pinv.push_back(std::move(*inv));
  }
  const auto bary = barycentric_weights(p.basis.nodes);
  const auto& tau = p.basis.nodes;
  const auto& beta = bary.weights;
  const PolyMatrix pz = p.to_poly_matrix();

  const PolyMatrix g = scaled_identity(Poly::linear_root(tau[0]) * (1 / beta[0]), n);
  HermiteAnalogue ha{l.to_poly_matrix(), PolyMatrix::identity(m * n), n, m, m - 1};
  for (std::size_t r = 0; r < m; ++r) ha.uinv.set_block(r, m - 1, PolyMatrix(n, n));
  ha.h.set_block(0, m - 1, g);
  for (std::size_t k = 1; k <= ell; ++k) {
    const std::size_t r = ell + 1 - k;
    const PolyMatrix uk(pinv[k] * (-(beta[k] / beta[0]) * (tau[k] - tau[0])));
    const PolyMatrix hk = -divide_by_linear(g * Poly(beta[k]) + uk * pz, tau[k]);
    ha.uinv.set_block(r, m - 1, uk);
    ha.h.set_block(r, m - 1, hk);
  }
  ha.h.set_block(m - 1, m - 1, pz);
  check_analogue(ha, l, static_cast<int>(ell));
  return ha;
}

CofactorPair assemble_cofactors(const HermiteAnalogue& ha) {
  const std::size_t m = ha.blocks, n = ha.n, c = ha.corner_block;
  const PolyMatrix j(block_reversal(m, n));
  PolyMatrix k = PolyMatrix::identity(m * n);
  for (std::size_t r = 0; r < m; ++r)
    if (r != c) k.set_block(r, c, -ha.h.block(r, c, n));
  return {j * inverse_unimodular(ha.uinv), k * j};
}

CofactorPair cofactors(const MatrixPolynomial& p, const Pencil& l) {
  switch (p.basis.kind) {
    case BasisKind::Monomial: return monomial_cofactors(p);
    case BasisKind::Recurrence: return assemble_cofactors(recurrence_hermite_analogue(p, l));
    case BasisKind::Bernstein: return assemble_cofactors(bernstein_hermite_analogue(p, l));
    case BasisKind::Lagrange: return assemble_cofactors(lagrange_hermite_factors(p, l));
  }
  throw PreconditionError("unknown basis");
}

Matrix bernstein_w(int l) {
  Matrix w(l, l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= i; ++j) {
      Rational v(binomial(l, i) * binomial(i - 1, j - 1));
      w(i - 1, j - 1) = (i + j) % 2 == 0 ? v : Rational(-v);
    }
  return w;
}

Matrix bernstein_uinv(const MatrixPolynomial& p) {
  const std::size_t l = p.grade(), n = p.n;
  const Pencil lb = build_bernstein_pencil(p);
  const Matrix w = bernstein_w(static_cast<int>(l));
  const Matrix cb1w = lb.c1 * w.kron_identity(n);
  Matrix uinv = Matrix::identity(l * n);
  // Block row 1 of U^-1 C_m1 equals [A_l, R_2, ..., R_l] since C_m1 = diag(A_l, I).
  for (std::size_t j = 1; j < l; ++j) uinv.set_block(0, j, cb1w.block(0, j, n));
  uinv.set_slice(n, n, w.slice(0, 0, l - 1, l - 1).kron_identity(n));
  return uinv;
}

StrictEquivalence bernstein_strict_equivalence(const MatrixPolynomial& p) {
  if (p.basis.kind != BasisKind::Bernstein) throw PreconditionError("bernstein_strict_equivalence: wrong basis");
  const int l = p.grade();
  const Pencil lb = build_bernstein_pencil(p);
  const Pencil lm = build_monomial_pencil(to_monomial(p));
  auto u = try_inverse(bernstein_uinv(p));
  expect(u.has_value(), "bernstein U^-1 singular", l);
  StrictEquivalence se{*u, bernstein_w(l).kron_identity(p.n)};
  check_strict(se, lb, lm, "bernstein strict equivalence", l);
  return se;
}

std::vector<Matrix> bernstein_reversal_coeffs(const std::vector<Matrix>& y) {
  if (y.empty()) throw DimensionError("empty coefficient list");
  const long l = static_cast<long>(y.size()) - 1;
  std::vector<Matrix> d;
  for (long k = 0; k <= l; ++k) {
    Matrix s(y[0].rows(), y[0].cols());
    for (long j = 0; j <= k; ++j) s += y[l - j] * Rational(binomial(k, j));
    d.push_back(std::move(s));
  }
  return d;
}

std::vector<Matrix> standard_reversal_coeffs(const std::vector<Matrix>& y) {
  if (y.empty()) throw DimensionError("empty coefficient list");
  const long l = static_cast<long>(y.size()) - 1;
  std::vector<Matrix> e;
  for (long k = 0; k <= l; ++k) {
    Matrix s(y[0].rows(), y[0].cols());
    for (long m = 0; m <= l - k; ++m) {
      Rational c(binomial(l - k, m));
      s += y[l - m] * (m % 2 == 0 ? c : Rational(-c));
    }
    e.push_back(std::move(s));
  }
  return e;
}

BernsteinReversal bernstein_reversal_equivalence(const MatrixPolynomial& p) {
  if (p.basis.kind != BasisKind::Bernstein) throw PreconditionError("bernstein_reversal_equivalence: wrong basis");
  validate(p);
  const int l = p.grade();
  if (l < 2) throw PreconditionError("bernstein reversal needs grade >= 2");
  const std::size_t n = p.n;
  MatrixPolynomial rev = p;
  rev.coeffs = bernstein_reversal_coeffs(p.coeffs);

  BernsteinReversal br;
  br.original = build_bernstein_pencil(p);
  br.reversed = build_bernstein_pencil(rev);

  br.u_closed = Matrix(l, l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      br.u_closed(i - 1, j - 1) = -(Rational(l - i + 1) / i) * Rational(binomial(i, l + 1 - j));

  const Matrix id = Matrix::identity(n);
  br.z_closed = Matrix(l * n, l * n);
  for (int i = 1; i < l; ++i) {
    for (int j = 1; j < l; ++j)
      br.z_closed.set_block(i - 1, j - 1, id * (-(Rational(l - i) / j) * Rational(binomial(i, l - j))));
    br.z_closed.set_block(i - 1, l - 1, rev.coeffs[i] - p.coeffs[l] * (Rational(l - i) / l));
  }
  br.z_closed.set_block(l - 1, l - 1, id);

  // Map from the flipped-transposed orientation to the pencil's own.
  Matrix u(l * n, l * n);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) u.set_block(i, j, br.z_closed.block(l - 1 - j, l - 1 - i, n));
  const Matrix jl = block_reversal(l, 1);
  auto uci = try_inverse(br.u_closed);
  expect(uci.has_value(), "bernstein reversal closed-form U singular", l);
  br.se = {u, (jl * uci->transpose() * jl).kron_identity(n)};
  check_strict(br.se, br.reversed, shifted_reversal(br.original), "bernstein reversal", l);
  return br;
}

Matrix lagrange_vandermonde(const std::vector<Rational>& nodes) {
  const std::size_t s = nodes.size();
  Matrix v(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Rational x = 1;
      for (std::size_t e = 0; e < s - 1 - i; ++e) x *= nodes[s - 1 - j];
      v(i, j) = x;
    }
  return v;
}

StrictEquivalence lagrange_strict_equivalence(const MatrixPolynomial& p) {
  if (p.basis.kind != BasisKind::Lagrange) throw PreconditionError("lagrange_strict_equivalence: wrong basis");
  validate(p);
  const std::size_t l = p.grade(), n = p.n, s = l + 1;
  const auto bary = barycentric_weights(p.basis.nodes);
  const Matrix v = lagrange_vandermonde(p.basis.nodes);
  Matrix q(1, s);
  for (std::size_t j = 0; j < s; ++j) q(0, j) = bary.node_poly_coeffs[l - j];
  const Matrix id = Matrix::identity(n);

  StrictEquivalence se{Matrix((s + 1) * n, (s + 1) * n), Matrix((s + 1) * n, (s + 1) * n)};
  se.u.set_slice(0, 0, -id);
  se.u.set_slice(n, n, v.kron_identity(n));
  se.w.set_slice(0, 0, -id);
  se.w.set_slice(0, n, -q.kron_identity(n));
  se.w.set_slice(n, n, inverse(v).kron_identity(n));

  const Pencil ll = build_lagrange_pencil(p);
  const Pencil lm = build_monomial_pencil(padded_monomial(p, static_cast<int>(l) + 2));
  check_strict(se, ll, lm, "lagrange strict equivalence", static_cast<int>(l));
  return se;
}

}  // namespace polylin
