#include "polylin/verify.hpp"

#include <algorithm>

#include "polylin/errors.hpp"

namespace polylin {

namespace {

Verdict pass(std::string check, std::optional<Rational> c = std::nullopt) {
  return {std::move(check), true, std::move(c), {}};
}

Verdict fail(std::string check, std::map<std::string, std::string> why) {
  return {std::move(check), false, std::nullopt, std::move(why)};
}

// First differing block of two equally shaped matrices, as "(i,j)".
template <class M>
std::string first_diff(const M& a, const M& b, std::size_t n) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j)))
        return "(" + std::to_string(i / n) + "," + std::to_string(j / n) + ")";
  return "";
}

std::string factors_string(const std::vector<Poly>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].to_string();
  return s + "]";
}

std::vector<Poly> padded_with_ones(std::vector<Poly> f, std::size_t total) {
  std::vector<Poly> out(total - f.size(), Poly(1));
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace

PolyMatrix reverse(const PolyMatrix& p, int grade) {
  PolyMatrix out(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const Poly& e = p(i, j);
      if (e.degree() > grade) throw PreconditionError("reverse: grade below degree");
      std::vector<Rational> c(grade + 1);
      for (int k = 0; k <= e.degree(); ++k) c[grade - k] = e[k];
      out(i, j) = Poly(std::move(c), grade);
    }
  return out;
}

Verdict verify_companion(const Pencil& l, const MatrixPolynomial& p) {
  const std::string name = "companion";
  if (l.size() != l.c1.rows() || l.n != p.n) return fail(name, {{"reason", "dimension mismatch"}});
  const Poly dl = det(l.to_poly_matrix());
  const Poly dp = det(p.to_poly_matrix());
  if (dp.is_zero() || dl.is_zero()) {
    if (dp.is_zero() && dl.is_zero()) return pass(name);
    return fail(name, {{"reason", "exactly one determinant vanishes"},
                       {"detL", dl.to_string()}, {"detP", dp.to_string()}});
  }
  auto [q, r] = divmod(dl, dp);
  if (!r.is_zero() || q.degree() != 0)
    return fail(name, {{"reason", "determinant ratio is not a constant"},
                       {"detL", dl.to_string()}, {"detP", dp.to_string()}});
  return pass(name, q[0]);
}

Verdict verify_linearization(const Pencil& l, const MatrixPolynomial& p, const CofactorPair& cf) {
  const std::string name = "linearization";
  const std::size_t nn = l.size();
  if (cf.e.rows() != nn || cf.e.cols() != nn || cf.f.rows() != nn || cf.f.cols() != nn || p.n != l.n)
    return fail(name, {{"reason", "dimension mismatch"}});
  const PolyMatrix lhs = cf.e * l.to_poly_matrix() * cf.f;
  const PolyMatrix rhs = diag_with_identity(p.to_poly_matrix(), l.blocks);
  if (!(lhs == rhs))
    return fail(name, {{"reason", "E L F != diag(P, I, ..., I)"}, {"block", first_diff(lhs, rhs, l.n)}});
  auto ue = unimodular_unit(cf.e);
  if (!ue) return fail(name, {{"reason", "E is not unimodular"}});
  auto uf = unimodular_unit(cf.f);
  if (!uf) return fail(name, {{"reason", "F is not unimodular"}});
  return pass(name, *ue * *uf);
}

Verdict verify_strict(const StrictEquivalence& se, const Pencil& from, const Pencil& to) {
  const std::string name = "strict";
  const std::size_t a = from.c1.rows(), b = to.c1.rows();
  if (se.u.rows() != b || se.u.cols() != a || se.w.rows() != a || se.w.cols() != b)
    return fail(name, {{"reason", "dimension mismatch"}});
  const Matrix m1 = se.u * from.c1 * se.w, m0 = se.u * from.c0 * se.w;
  if (!(m1 == to.c1)) return fail(name, {{"reason", "U C1 W != C1'"}, {"block", first_diff(m1, to.c1, to.n)}});
  if (!(m0 == to.c0)) return fail(name, {{"reason", "U C0 W != C0'"}, {"block", first_diff(m0, to.c0, to.n)}});
  const Rational du = det(se.u), dw = det(se.w);
  if (du == 0) return fail(name, {{"reason", "U is singular"}});
  if (dw == 0) return fail(name, {{"reason", "W is singular"}});
  return pass(name, du * dw);
}

Verdict verify_hermite_analogue(const HermiteAnalogue& ha, const Pencil& l) {
  const std::string name = "hermite-analogue";
  const std::size_t nn = l.size();
  if (ha.uinv.rows() != nn || ha.h.rows() != nn || ha.uinv.cols() != nn || ha.h.cols() != nn)
    return fail(name, {{"reason", "dimension mismatch"}});
  const PolyMatrix lz = l.to_poly_matrix();
  const PolyMatrix prod = ha.uinv * ha.h;
  if (!(prod == lz)) return fail(name, {{"reason", "Uinv H != L"}, {"block", first_diff(prod, lz, l.n)}});
  const std::size_t c0 = ha.corner_block * ha.n, c1 = c0 + ha.n;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      if (j >= c0 && j < c1) continue;
      if (!(ha.h(i, j) == Poly(i == j ? 1 : 0)))
        return fail(name, {{"reason", "H differs from I outside the corner column"}});
    }
  auto u = unimodular_unit(ha.uinv);
  if (!u) return fail(name, {{"reason", "Uinv is not unimodular"}});
  return pass(name, *u);
}

Verdict verify_strong(const Pencil& l, const MatrixPolynomial& p) {
  const std::string name = "strong";
  const int g = static_cast<int>(l.blocks);
  const PolyMatrix rl = PolyMatrix::pencil(l.c0, l.c1);
  const PolyMatrix rp = reverse(p.to_poly_matrix(), g);
  const auto fl = invariant_factors(rl);
  const auto fp = padded_with_ones(invariant_factors(rp), l.size());
  if (fl != fp)
    return fail(name, {{"reason", "Smith forms of the reversals differ"},
                       {"pencil", factors_string(fl)}, {"expected", factors_string(fp)}});
  return pass(name);
}

Verdict smith_equivalence_check(const Pencil& l, const MatrixPolynomial& p) {
  const std::string name = "smith-equivalence";
  const auto fl = invariant_factors(l.to_poly_matrix());
  const auto fp = padded_with_ones(invariant_factors(p.to_poly_matrix()), l.size());
  if (fl != fp)
    return fail(name, {{"reason", "Smith forms differ"},
                       {"pencil", factors_string(fl)}, {"expected", factors_string(fp)}});
  return pass(name);
}

Verdict verify_hermite(const PolyMatrix& m, const HermiteResult& r) {
  const std::string name = "hermite";
  if (!(r.u * m == r.h)) return fail(name, {{"reason", "U M != H"}});
  auto unit = unimodular_unit(r.u);
  if (!unit) return fail(name, {{"reason", "U is not unimodular"}});
  // Echelon shape, monic pivots, reduced entries above pivots.
  std::size_t row = 0;
  for (std::size_t c : r.pivot_cols) {
    for (std::size_t j = 0; j < c; ++j)
      if (!r.h(row, j).is_zero()) return fail(name, {{"reason", "entry left of a pivot"}});
    const Poly& piv = r.h(row, c);
    if (piv.is_zero() || piv.leading() != 1) return fail(name, {{"reason", "pivot not monic"}});
    for (std::size_t i = 0; i < row; ++i)
      if (r.h(i, c).degree() >= piv.degree()) return fail(name, {{"reason", "entry above pivot not reduced"}});
    for (std::size_t i = row + 1; i < r.h.rows(); ++i)
      if (!r.h(i, c).is_zero()) return fail(name, {{"reason", "entry below pivot"}});
    ++row;
  }
  for (std::size_t i = row; i < r.h.rows(); ++i)
    for (std::size_t j = 0; j < r.h.cols(); ++j)
      if (!r.h(i, j).is_zero()) return fail(name, {{"reason", "nonzero row below the pivots"}});
  return pass(name, *unit);
}

Verdict verify_smith(const PolyMatrix& m, const SmithResult& r) {
  const std::string name = "smith";
  if (!(r.e * r.s * r.f == m)) return fail(name, {{"reason", "E S F != M"}});
  if (!is_unimodular(r.e)) return fail(name, {{"reason", "E is not unimodular"}});
  if (!is_unimodular(r.f)) return fail(name, {{"reason", "F is not unimodular"}});
  for (std::size_t i = 0; i < r.s.rows(); ++i)
    for (std::size_t j = 0; j < r.s.cols(); ++j)
      if (i != j && !r.s(i, j).is_zero()) return fail(name, {{"reason", "S not diagonal"}});
  const auto f = r.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero() && f[i].leading() != 1) return fail(name, {{"reason", "factor not monic"}});
    if (i + 1 < f.size()) {
      const bool ok = f[i].is_zero() ? f[i + 1].is_zero() : divides(f[i], f[i + 1]);
      if (!ok) return fail(name, {{"reason", "divisibility chain broken"}});
    }
  }
  return pass(name);
}

}  // namespace polylin
