#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polylin/rational.hpp"

namespace polylin {

/// Dense univariate polynomial over Q in the monomial basis.
///
/// Two sizes are tracked separately: the degree (from the coefficients,
/// trailing zeros never stored) and the grade, a declared upper bound on the
/// degree. Arithmetic propagates grades the way bounds combine (sum for
/// products, max for sums); equality compares values only.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  /// coeffs[k] is the coefficient of z^k. grade < 0 means "use the degree".
  explicit Poly(std::vector<Rational> coeffs, int grade = -1);

  static Poly z();
  /// c * z^k
  static Poly monomial(const Rational& c, int k);
  /// z - a
  static Poly linear_root(const Rational& a);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int grade() const { return grade_; }
  /// Same value with a new declared grade; grade must be >= degree.
  Poly with_grade(int grade) const;

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of z^k (zero beyond the degree).
  Rational operator[](int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficients padded with zeros to length grade()+1.
  std::vector<Rational> graded_coeffs() const;

  Rational leading() const;
  Rational eval(const Rational& x) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'z') const;

 private:
  void trim();

  std::vector<Rational> c_;
  int grade_ = 0;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Quotient of a division required to be exact; throws Error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);

/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Polynomial through (xs[i], ys[i]) via Newton divided differences.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace polylin
