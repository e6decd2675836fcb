#include "polylin/poly.hpp"

#include <algorithm>
#include <sstream>

#include "polylin/errors.hpp"

namespace polylin {

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs, int grade) : c_(std::move(coeffs)) {
  trim();
  grade_ = std::max(grade, std::max(degree(), 0));
}

Poly Poly::z() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int k) {
  std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
  cs[static_cast<std::size_t>(k)] = c;
  return Poly(std::move(cs), k);
}

Poly Poly::linear_root(const Rational& a) { return Poly({-a, Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::with_grade(int grade) const {
  if (grade < degree())
    throw PreconditionError("grade " + std::to_string(grade) +
                            " below degree " + std::to_string(degree()));
  Poly out = *this;
  out.grade_ = std::max(grade, 0);
  return out;
}

Rational Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

std::vector<Rational> Poly::graded_coeffs() const {
  std::vector<Rational> out = c_;
  out.resize(static_cast<std::size_t>(grade_) + 1);
  return out;
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.c_) c *= inv;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  grade_ = std::max(grade_, o.grade_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  grade_ = std::max(grade_, o.grade_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  out.grade_ = a.grade_ + b.grade_;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << polylin::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
  Rational inv = 1 / b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error("inexact division: remainder " + r.to_string());
  return q.with_grade(std::max(q.degree(), a.grade() - b.degree()));
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  if (ys.size() != m) throw DimensionError("interpolate: size mismatch");
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Horner on the Newton form.
  Poly acc;
  for (std::size_t k = m; k-- > 0;) {
    acc = acc * Poly::linear_root(xs[k]) + Poly(dd[k]);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace polylin
