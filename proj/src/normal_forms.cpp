#include "polylin/normal_forms.hpp"

#include <utility>

#include "polylin/errors.hpp"

namespace polylin {

namespace {

Poly normalized(const Poly& p) { return Poly(p.coeffs()); }

// Dense working copy with elementary row/column operations. Optional
// companions receive the matching updates: `left` gets the row operations
// (U with U*M = H); `e` and `f` maintain M = E*S*F.
struct Work {
  std::size_t rows, cols;
  std::vector<std::vector<Poly>> a;
  PolyMatrix* left = nullptr;
  PolyMatrix* e = nullptr;
  PolyMatrix* f = nullptr;

  explicit Work(const PolyMatrix& m) : rows(m.rows()), cols(m.cols()), a(rows) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i].push_back(normalized(m(i, j)));
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    if (left)
      for (std::size_t j = 0; j < left->cols(); ++j) std::swap((*left)(i, j), (*left)(k, j));
    if (e)
      for (std::size_t r = 0; r < e->rows(); ++r) std::swap((*e)(r, i), (*e)(r, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a) std::swap(row[j], row[k]);
    if (f)
      for (std::size_t c = 0; c < f->cols(); ++c) std::swap((*f)(j, c), (*f)(k, c));
  }

  // row i += q * row k
  void add_row(std::size_t i, std::size_t k, const Poly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < cols; ++j)
      if (!a[k][j].is_zero()) a[i][j] = normalized(a[i][j] + q * a[k][j]);
    if (left)
      for (std::size_t j = 0; j < left->cols(); ++j)
        if (!(*left)(k, j).is_zero()) (*left)(i, j) = normalized((*left)(i, j) + q * (*left)(k, j));
    if (e)
      for (std::size_t r = 0; r < e->rows(); ++r)
        if (!(*e)(r, i).is_zero()) (*e)(r, k) = normalized((*e)(r, k) - q * (*e)(r, i));
  }

  // col j += q * col k
  void add_col(std::size_t j, std::size_t k, const Poly& q) {
    if (q.is_zero()) return;
    for (auto& row : a)
      if (!row[k].is_zero()) row[j] = normalized(row[j] + q * row[k]);
    if (f)
      for (std::size_t c = 0; c < f->cols(); ++c)
        if (!(*f)(j, c).is_zero()) (*f)(k, c) = normalized((*f)(k, c) - q * (*f)(j, c));
  }

  void scale_row(std::size_t i, const Rational& s) {
    for (auto& v : a[i]) v *= s;
    if (left)
      for (std::size_t j = 0; j < left->cols(); ++j) (*left)(i, j) *= s;
    if (e)
      for (std::size_t r = 0; r < e->rows(); ++r) (*e)(r, i) *= 1 / s;
  }

  PolyMatrix matrix() const {
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
    return m;
  }

  // Clear column c below row r by Euclidean steps; pivot ends at (r, c).
  // Returns false if the column is zero from row r down.
  bool clear_below(std::size_t r, std::size_t c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (!a[i][c].is_zero() && (best == rows || a[i][c].degree() < a[best][c].degree())) best = i;
      if (best == rows) return false;
      swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c].is_zero()) continue;
        add_row(i, r, -divmod(a[i][c], a[r][c]).first);
        if (!a[i][c].is_zero()) done = false;
      }
      if (done) return true;
    }
  }

  // Clear row r right of column c, pivot ends at (r, c). Assumes a[r][c] != 0
  // or some entry right of it is nonzero.
  void clear_right(std::size_t r, std::size_t c) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero() && (best == cols || a[r][j].degree() < a[r][best].degree())) best = j;
      if (best == cols) return;
      swap_cols(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j].is_zero()) continue;
        add_col(j, c, -divmod(a[r][j], a[r][c]).first);
        if (!a[r][j].is_zero()) done = false;
      }
      if (done) return;
    }
  }
};

void smith_reduce(Work& w) {
  const std::size_t n = std::min(w.rows, w.cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Bring a minimal-degree nonzero entry of the trailing block to (t, t).
    std::size_t bi = w.rows, bj = w.cols;
    for (std::size_t i = t; i < w.rows; ++i)
      for (std::size_t j = t; j < w.cols; ++j)
        if (!w.a[i][j].is_zero() && (bi == w.rows || w.a[i][j].degree() < w.a[bi][bj].degree())) {
          bi = i;
          bj = j;
        }
    if (bi == w.rows) return;
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);
    for (;;) {
      w.clear_below(t, t);
      w.clear_right(t, t);
      bool col_clear = true;
      for (std::size_t i = t + 1; i < w.rows; ++i)
        if (!w.a[i][t].is_zero()) col_clear = false;
      if (!col_clear) continue;
      std::size_t bad = w.rows;
      for (std::size_t i = t + 1; i < w.rows && bad == w.rows; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (!divides(w.a[t][t], w.a[i][j])) {
            bad = i;
            break;
          }
      if (bad == w.rows) break;
      w.add_row(t, bad, Poly(1));
    }
    w.scale_row(t, 1 / w.a[t][t].leading());
  }
}

}  // namespace

HermiteResult hermite_form(const PolyMatrix& m) {
  HermiteResult res;
  res.u = PolyMatrix::identity(m.rows());
  Work w(m);
  w.left = &res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    if (!w.clear_below(r, c)) {
      res.rank_deficient = true;
      continue;
    }
    w.scale_row(r, 1 / w.a[r][c].leading());
    for (std::size_t i = 0; i < r; ++i)
      if (!w.a[i][c].is_zero()) w.add_row(i, r, -divmod(w.a[i][c], w.a[r][c]).first);
    res.pivot_cols.push_back(c);
    ++r;
  }
  if (r < w.rows) res.rank_deficient = true;
  res.h = w.matrix();
  return res;
}

std::vector<Poly> SmithResult::factors() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) out.push_back(s(i, i));
  return out;
}

SmithResult smith_form(const PolyMatrix& m) {
  SmithResult res;
  res.e = PolyMatrix::identity(m.rows());
  res.f = PolyMatrix::identity(m.cols());
  Work w(m);
  w.e = &res.e;
  w.f = &res.f;
  smith_reduce(w);
  res.s = w.matrix();
  return res;
}

std::vector<Poly> invariant_factors(const PolyMatrix& m) {
  Work w(m);
  smith_reduce(w);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < std::min(w.rows, w.cols); ++i) out.push_back(w.a[i][i]);
  return out;
}

std::vector<std::string> mask(const PolyMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j).is_zero() ? '0' : 'x';
    out.push_back(row);
  }
  return out;
}

}  // namespace polylin
