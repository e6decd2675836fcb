#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polylin/matrix.hpp"
#include "polylin/poly.hpp"

namespace polylin {

/// Matrix with entries in Q[z], row-major. Entry grades are kept per entry.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  explicit PolyMatrix(const Matrix& constant);

  static PolyMatrix identity(std::size_t n);
  /// z*c1 - c0
  static PolyMatrix pencil(const Matrix& c1, const Matrix& c0);
  /// sum_k coeffs[k] z^k
  static PolyMatrix from_coefficients(const std::vector<Matrix>& coeffs);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix block(std::size_t bi, std::size_t bj, std::size_t bs) const;
  void set_block(std::size_t bi, std::size_t bj, const PolyMatrix& b);
  PolyMatrix slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_slice(std::size_t r0, std::size_t c0, const PolyMatrix& b);

  PolyMatrix transpose() const;
  Matrix eval(const Rational& x) const;
  /// Coefficient matrix of z^k.
  Matrix coefficient(int k) const;
  /// Largest entry degree (kZeroDegree for the zero matrix).
  int degree() const;
  bool is_zero() const;
  bool is_identity() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(PolyMatrix a, const Poly& s);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

/// Determinant by evaluation at 0..D and interpolation, D a degree bound.
Poly det(const PolyMatrix& m);

/// The unit det(m) when m is unimodular, nullopt otherwise.
std::optional<Rational> unimodular_unit(const PolyMatrix& m);
inline bool is_unimodular(const PolyMatrix& m) { return unimodular_unit(m).has_value(); }

/// Exact inverse of a unimodular matrix; throws NotUnimodular.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

/// Block diagonal diag(p, I_n, ..., I_n) with `blocks` blocks of size p.rows().
PolyMatrix diag_with_identity(const PolyMatrix& p, std::size_t blocks);

}  // namespace polylin
