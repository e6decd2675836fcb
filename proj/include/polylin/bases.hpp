#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polylin/matrix.hpp"
#include "polylin/poly.hpp"
#include "polylin/poly_matrix.hpp"

namespace polylin {

enum class BasisKind { Monomial, Recurrence, Bernstein, Lagrange };

std::string to_string(BasisKind k);
BasisKind parse_basis_kind(const std::string& s);

/// Basis descriptor. Only the arrays of the matching kind are populated:
/// alpha/beta/gamma (length grade, index k = 0..grade-1) for Recurrence,
/// nodes (length grade+1) for Lagrange.
struct BasisSpec {
  BasisKind kind = BasisKind::Monomial;
  int grade = 0;
  std::vector<Rational> alpha, beta, gamma;
  std::vector<Rational> nodes;

  static BasisSpec monomial(int grade);
  static BasisSpec bernstein(int grade);
  static BasisSpec lagrange(std::vector<Rational> nodes);
  static BasisSpec recurrence(std::vector<Rational> alpha, std::vector<Rational> beta,
                              std::vector<Rational> gamma);
  /// T_k: alpha_0 = 1, then alpha = gamma = 1/2, beta = 0.
  static BasisSpec chebyshev(int grade);

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Throws PreconditionError on zero alpha_k, duplicate nodes, wrong lengths.
void validate(const BasisSpec& spec);

/// P(z) = sum_k coeffs[k] phi_k(z), each coefficient n x n.
struct MatrixPolynomial {
  std::size_t n = 1;
  BasisSpec basis;
  std::vector<Matrix> coeffs;

  int grade() const { return basis.grade; }
  /// Entries of P(z) in the monomial basis, each of grade `grade()`.
  PolyMatrix to_poly_matrix() const;
  Matrix eval(const Rational& x) const;

  /// 1x1 coefficients from a list of scalars.
  static MatrixPolynomial scalar(BasisSpec basis, const std::vector<Rational>& c);

  friend bool operator==(const MatrixPolynomial&, const MatrixPolynomial&) = default;
};

/// Throws DimensionError / PreconditionError.
void validate(const MatrixPolynomial& p);

struct BarycentricData {
  std::vector<Rational> nodes;
  std::vector<Rational> weights;
  /// w(z) = z^(l+1) + sum_k q[k] z^k, k = 0..l.
  std::vector<Rational> node_poly_coeffs;

  Poly node_poly() const;
};

BarycentricData barycentric_weights(const std::vector<Rational>& nodes);

/// phi_0..phi_l with phi_0 = 1 and
/// phi_{k+1} = ((z - beta_k) phi_k - gamma_k phi_{k-1}) / alpha_k.
std::vector<Poly> recurrence_basis_polys(const BasisSpec& spec);
/// phi_0..phi_l for any basis kind, each of grade l.
std::vector<Poly> basis_polys(const BasisSpec& spec);

MatrixPolynomial to_monomial(const MatrixPolynomial& p);
/// Throws PreconditionError("grade too small") when target.grade < deg P.
MatrixPolynomial from_monomial(const MatrixPolynomial& p, const BasisSpec& target);
MatrixPolynomial convert(const MatrixPolynomial& p, const BasisSpec& target);

/// Actual degree of P (kZeroDegree for P = 0).
int degree(const MatrixPolynomial& p);

/// Bernstein grade l -> grade l+1 by the degree-elevation recurrence.
MatrixPolynomial degree_elevate(const MatrixPolynomial& p);

}  // namespace polylin
