#include "polylin/random_instances.hpp"

#include <algorithm>

namespace polylin {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(eng_() % span);
}

Rational Rng::rational() {
  const long p = uniform(-9, 9);
  const long q = uniform(1, 9);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
  return m;
}

std::vector<Rational> random_nodes(Rng& rng, std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = rng.rational();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

BasisSpec random_basis(Rng& rng, BasisKind kind, int grade) {
  switch (kind) {
    case BasisKind::Monomial: return BasisSpec::monomial(grade);
    case BasisKind::Bernstein: return BasisSpec::bernstein(grade);
    case BasisKind::Lagrange: return BasisSpec::lagrange(random_nodes(rng, grade + 1));
    case BasisKind::Recurrence: {
      std::vector<Rational> a, b, g;
      for (int k = 0; k < grade; ++k) {
        a.push_back(rng.nonzero_rational());
        b.push_back(rng.rational());
        g.push_back(k == 0 ? Rational(0) : rng.rational());
      }
      return BasisSpec::recurrence(std::move(a), std::move(b), std::move(g));
    }
  }
  return BasisSpec::monomial(grade);
}

MatrixPolynomial random_polynomial(Rng& rng, const BasisSpec& basis, std::size_t n) {
  MatrixPolynomial p;
  p.n = n;
  p.basis = basis;
  for (int k = 0; k <= basis.grade; ++k) p.coeffs.push_back(random_matrix(rng, n, n));
  return p;
}

PolyMatrix random_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, int grade) {
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Rational> c;
      for (int k = 0; k <= grade; ++k) c.push_back(rng.rational());
      m(i, j) = Poly(std::move(c), grade);
    }
  return m;
}

PolyMatrix random_unimodular(Rng& rng, std::size_t n, int grade) {
  PolyMatrix u = PolyMatrix::identity(n);
  if (n < 2) {
    u(0, 0) = Poly(rng.nonzero_rational());
    return u;
  }
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = rng.uniform(0, n - 1);
    std::size_t k = rng.uniform(0, n - 2);
    if (k >= i) ++k;
    std::vector<Rational> c;
    for (int d = 0; d <= grade; ++d) c.push_back(rng.rational());
    const Poly q(std::move(c));
    for (std::size_t j = 0; j < n; ++j) u(i, j) += q * u(k, j);
  }
  const std::size_t s = rng.uniform(0, n - 1);
  const Rational c = rng.nonzero_rational();
  for (std::size_t j = 0; j < n; ++j) u(s, j) *= c;
  return u;
}

Matrix random_singular_matrix(Rng& rng, std::size_t n) {
  if (n == 1) return Matrix(1, 1);
  Matrix m = random_matrix(rng, n, n);
  // Last row = combination of the others.
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational c = rng.rational();
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) += c * m(i, j);
  }
  return m;
}

}  // namespace polylin
