#pragma once

#include <cstddef>

#include "polylin/bases.hpp"
#include "polylin/matrix.hpp"
#include "polylin/poly_matrix.hpp"

namespace polylin {

/// L(z) = z*C1 - C0 with `blocks` block rows/columns of size n.
struct Pencil {
  Matrix c1, c0;
  std::size_t n = 1;
  std::size_t blocks = 0;
  BasisKind basis = BasisKind::Monomial;

  std::size_t size() const { return n * blocks; }
  PolyMatrix to_poly_matrix() const { return PolyMatrix::pencil(c1, c0); }

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

/// Second companion form: first block row [zA_l + A_{l-1}, A_{l-2}, ..., A_0],
/// subdiagonal -I, diagonal zI.
Pencil build_monomial_pencil(const MatrixPolynomial& p);
/// Three-term recurrence (colleague/comrade) pencil; needs l >= 2.
Pencil build_recurrence_pencil(const MatrixPolynomial& p);
/// Bernstein pencil; needs l >= 2.
Pencil build_bernstein_pencil(const MatrixPolynomial& p);
/// Arrowhead pencil with l+2 blocks.
Pencil build_lagrange_pencil(const MatrixPolynomial& p);
/// Dispatch on p.basis.kind.
Pencil build_pencil(const MatrixPolynomial& p);

/// z*C0 - C1, the linearization of z^l P(1/z) when (C1, C0) linearizes P.
Pencil standard_reversal(const Pencil& l);
/// z*C0 - (C1 - C0), the linearization of (z+1)^l P(1/(z+1)).
Pencil shifted_reversal(const Pencil& l);

}  // namespace polylin
