#pragma once

#include <cstddef>
#include <vector>

#include "polylin/bases.hpp"
#include "polylin/matrix.hpp"
#include "polylin/pencils.hpp"
#include "polylin/poly_matrix.hpp"

namespace polylin {

/// Uinv * H = L, H the identity except for its last block column, which
/// carries P(z) (possibly normalized) in the corner block.
struct HermiteAnalogue {
  PolyMatrix uinv;
  PolyMatrix h;
  std::size_t n = 1;
  std::size_t blocks = 0;
  std::size_t corner_block = 0;
};

/// E * L * F = diag(P, I, ..., I).
struct CofactorPair {
  PolyMatrix e;
  PolyMatrix f;
};

/// U * (z C1 - C0) * W = z C1' - C0' for constant U, W.
struct StrictEquivalence {
  Matrix u;
  Matrix w;
};

CofactorPair monomial_cofactors(const MatrixPolynomial& p);

/// The universal form has u0 = I and corner P(z). With `monic` set the corner
/// is lead^-1 P(z), lead the monomial leading block (GenericityFailure if
/// singular).
HermiteAnalogue recurrence_hermite_analogue(const MatrixPolynomial& p, const Pencil& l,
                                            bool monic = false);
/// Needs P(1) = Y_l nonsingular, else SingularAtOne.
HermiteAnalogue bernstein_hermite_analogue(const MatrixPolynomial& p, const Pencil& l);
/// Needs every node value P_k nonsingular, else SingularNodeValue(k).
HermiteAnalogue lagrange_hermite_factors(const MatrixPolynomial& p, const Pencil& l);

/// E = J Uinv^-1 and F = K J, K clearing the off-corner entries of the H
/// column and J the block reversal.
CofactorPair assemble_cofactors(const HermiteAnalogue& ha);

/// Hermite analogue for the pencil's basis, then assemble_cofactors. The
/// monomial basis uses monomial_cofactors.
CofactorPair cofactors(const MatrixPolynomial& p, const Pencil& l);

/// Binomial W of the Bernstein-to-monomial strict equivalence (l x l).
Matrix bernstein_w(int grade);
/// U^-1 = [[I, R], [0, W_lead (x) I]] with R solved exactly.
Matrix bernstein_uinv(const MatrixPolynomial& p);
/// U L_B W = L_m, L_m the monomial pencil of P at the same grade.
StrictEquivalence bernstein_strict_equivalence(const MatrixPolynomial& p);

/// d_k = sum_{j<=k} C(k,j) y_{l-j}: Bernstein coefficients of (z+1)^l p(1/(z+1)).
std::vector<Matrix> bernstein_reversal_coeffs(const std::vector<Matrix>& y);
/// e_k = sum_{m<=l-k} (-1)^m C(l-k,m) y_{l-m}: Bernstein coefficients of z^l p(1/z).
std::vector<Matrix> standard_reversal_coeffs(const std::vector<Matrix>& y);

struct BernsteinReversal {
  /// Closed forms in the flipped-transposed orientation: the l x l matrix
  /// with entries -((l-i+1)/i) C(i, l+1-j) and the block matrix with
  /// z_ij = -((l-i)/j) C(i, l-j) I, z_il = d_i - ((l-i)/l) Y_l, last row e_l^T.
  Matrix u_closed;
  Matrix z_closed;
  /// U A_R W = B - A and U B_R W = A for the pencils (A, B) of y, (A_R, B_R) of d.
  StrictEquivalence se;
  Pencil original;
  Pencil reversed;
};

BernsteinReversal bernstein_reversal_equivalence(const MatrixPolynomial& p);

/// U L_L W = L_m, L_m the monomial pencil of P regarded as grade l+2.
StrictEquivalence lagrange_strict_equivalence(const MatrixPolynomial& p);
/// V[i][j] = tau_{l-j}^{l-i}
Matrix lagrange_vandermonde(const std::vector<Rational>& nodes);

/// Block reversal J (x) I_n.
Matrix block_reversal(std::size_t blocks, std::size_t n);

}  // namespace polylin
