#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polylin/rational.hpp"

namespace polylin {

/// Dense constant matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Block (bi, bj) of size bs x bs.
  Matrix block(std::size_t bi, std::size_t bj, std::size_t bs) const;
  void set_block(std::size_t bi, std::size_t bj, const Matrix& b);
  /// Arbitrary sub-matrix.
  Matrix slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_slice(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  /// this (x) I_n
  Matrix kron_identity(std::size_t n) const;

  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Fraction-free (Bareiss) determinant after clearing row denominators.
Rational det(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Exact inverse; throws SingularMatrix.
Matrix inverse(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Some X with X * a = b (a: k x m, b: r x m, X: r x k), or nullopt if the
/// system is inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

}  // namespace polylin
