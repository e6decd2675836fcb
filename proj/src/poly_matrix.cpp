#include "polylin/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "polylin/errors.hpp"

namespace polylin {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

PolyMatrix::PolyMatrix(const Matrix& c) : PolyMatrix(c.rows(), c.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Poly(c(i, j));
}

PolyMatrix PolyMatrix::identity(std::size_t n) { return PolyMatrix(Matrix::identity(n)); }

PolyMatrix PolyMatrix::pencil(const Matrix& c1, const Matrix& c0) {
  if (c1.rows() != c0.rows() || c1.cols() != c0.cols())
    throw DimensionError("pencil: C1 and C0 differ in shape");
  PolyMatrix m(c1.rows(), c1.cols());
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = Poly({-c0(i, j), c1(i, j)}, 1);
  return m;
}

PolyMatrix PolyMatrix::from_coefficients(const std::vector<Matrix>& coeffs) {
  if (coeffs.empty()) throw DimensionError("from_coefficients: empty list");
  const std::size_t r = coeffs[0].rows(), c = coeffs[0].cols();
  const int grade = static_cast<int>(coeffs.size()) - 1;
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Rational> v(coeffs.size());
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].rows() != r || coeffs[k].cols() != c)
          throw DimensionError("from_coefficients: ragged coefficients");
        v[k] = coeffs[k](i, j);
      }
      m(i, j) = Poly(std::move(v), grade);
    }
  return m;
}

PolyMatrix PolyMatrix::block(std::size_t bi, std::size_t bj, std::size_t bs) const {
  return slice(bi * bs, bj * bs, bs, bs);
}

void PolyMatrix::set_block(std::size_t bi, std::size_t bj, const PolyMatrix& b) {
  set_slice(bi * b.rows_, bj * b.cols_, b);
}

PolyMatrix PolyMatrix::slice(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("slice out of range");
  PolyMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void PolyMatrix::set_slice(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw DimensionError("set_slice out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix PolyMatrix::eval(const Rational& x) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(x);
  return m;
}

Matrix PolyMatrix::coefficient(int k) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)[k];
  return m;
}

int PolyMatrix::degree() const {
  int d = Poly::kZeroDegree;
  for (const auto& p : a_) d = std::max(d, p.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Poly(i == j ? 1 : 0)) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("polymatrix +: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("polymatrix -: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("polymatrix *: inner dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly acc;
      int grade = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        grade = std::max(grade, x.grade() + y.grade());
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = acc.with_grade(grade);
    }
  return out;
}

PolyMatrix operator*(PolyMatrix a, const Poly& s) {
  for (auto& p : a.a_) p *= s;
  return a;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.a_) p = -p;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Degree bounds from row and column maxima. Returns false if some row or
// column is identically zero.
bool degree_sums(const PolyMatrix& m, long& row_sum, long& col_sum, int& row_min,
                 int& col_min) {
  const std::size_t n = m.rows();
  row_sum = col_sum = 0;
  row_min = col_min = 1 << 30;
  std::vector<int> cmax(n, Poly::kZeroDegree);
  for (std::size_t i = 0; i < n; ++i) {
    int rmax = Poly::kZeroDegree;
    for (std::size_t j = 0; j < n; ++j) {
      int d = m(i, j).degree();
      rmax = std::max(rmax, d);
      cmax[j] = std::max(cmax[j], d);
    }
    if (rmax < 0) return false;
    row_sum += rmax;
    row_min = std::min(row_min, rmax);
  }
  for (int d : cmax) {
    if (d < 0) return false;
    col_sum += d;
    col_min = std::min(col_min, d);
  }
  return true;
}

std::vector<Rational> points(long count) {
  std::vector<Rational> xs;
  xs.reserve(count);
  for (long k = 0; k < count; ++k) xs.emplace_back(k);
  return xs;
}

}  // namespace

Poly det(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix not square");
  if (m.rows() == 0) return Poly(1);
  long rs, cs;
  int rmin, cmin;
  if (!degree_sums(m, rs, cs, rmin, cmin)) return Poly();
  const long bound = std::min(rs, cs);
  auto xs = points(bound + 1);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(det(m.eval(x)));
  return interpolate(xs, ys);
}

std::optional<Rational> unimodular_unit(const PolyMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  Poly d = det(m);
  if (d.is_zero() || d.degree() != 0) return std::nullopt;
  return d[0];
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  long rs, cs;
  int rmin, cmin;
  if (!degree_sums(m, rs, cs, rmin, cmin)) throw NotUnimodular("inverse: zero row or column");
  // Entries of the inverse are cofactors over a constant determinant.
  const long bound = std::min(rs - rmin, cs - cmin);
  auto xs = points(bound + 1);
  std::vector<Matrix> vals;
  vals.reserve(xs.size());
  for (const auto& x : xs) {
    auto inv = try_inverse(m.eval(x));
    if (!inv) throw NotUnimodular("inverse: singular at an evaluation point");
    vals.push_back(std::move(*inv));
  }
  PolyMatrix out(n, n);
  std::vector<Rational> ys(xs.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < xs.size(); ++k) ys[k] = vals[k](i, j);
      out(i, j) = interpolate(xs, ys);
    }
  if (!(m * out).is_identity()) throw NotUnimodular("inverse: matrix is not unimodular");
  return out;
}

PolyMatrix diag_with_identity(const PolyMatrix& p, std::size_t blocks) {
  const std::size_t n = p.rows();
  PolyMatrix out = PolyMatrix::identity(n * blocks);
  out.set_slice(0, 0, p);
  return out;
}

}  // namespace polylin
