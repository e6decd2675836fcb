// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polylin/bases.hpp"
#include "polylin/equivalence.hpp"
#include "polylin/errors.hpp"
#include "polylin/normal_forms.hpp"
#include "polylin/pencils.hpp"
#include "polylin/random_instances.hpp"
#include "polylin/verify.hpp"

using namespace polylin;

namespace {

struct Ctx {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

bool is_unit_pm1(const std::optional<Rational>& u) { return u && (*u == 1 || *u == -1); }

std::vector<std::vector<Rational>> probe(std::size_t len) {
  std::vector<std::vector<Rational>> out(1, std::vector<Rational>(len, Rational(0)));
  for (std::size_t k = 0; k < len; ++k) {
    out.push_back(out[0]);
    out.back()[k] = 1;
  }
  Rng rng(99);
  std::vector<Rational> r;
  for (std::size_t k = 0; k < len; ++k) r.push_back(rng.nonzero_rational());
  out.push_back(r);
  return out;
}

std::vector<std::string> grid(std::initializer_list<const char*> r) { return {r.begin(), r.end()}; }

Rational vandermonde_product(const std::vector<Rational>& t) {
  Rational p = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) p *= t[j] - t[i];
  return p;
}

MatrixPolynomial padded_monomial(const MatrixPolynomial& p, int grade) {
  return from_monomial(to_monomial(p), BasisSpec::monomial(grade));
}

// 1
void monomial_cofactors_criterion(Ctx& c) {
  Rng rng(1001);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.uniform(0, 2);
    int l = static_cast<int>(rng.uniform(1, 6));
    auto p = random_polynomial(rng, BasisSpec::monomial(l), n);
    if (t % 5 == 0) p.coeffs[l] = n > 1 ? random_singular_matrix(rng, n) : Matrix(1, 1);
    PolyMatrix lz = build_monomial_pencil(p).to_poly_matrix();
    CofactorPair cf = monomial_cofactors(p);
    c.expect(cf.e * lz * cf.f == diag_with_identity(p.to_poly_matrix(), l), "E L F = diag(P, I, ...)");
    c.expect(is_unit_pm1(unimodular_unit(cf.e)), "det E = +-1");
    c.expect(is_unit_pm1(unimodular_unit(cf.f)), "det F = +-1");
  }
  for (const auto& a : probe(6)) {
    auto p = MatrixPolynomial::scalar(BasisSpec::monomial(5), a);
    CofactorPair cf = monomial_cofactors(p);
    Poly h[6];
    h[5] = a[5];
    for (int k = 4; k >= 1; --k) h[k] = Poly(a[k]) + Poly::z() * h[k + 1];
    PolyMatrix e(5, 5), f(5, 5), l(5, 5);
    e(0, 0) = 1;
    for (int j = 1; j < 5; ++j) e(0, j) = h[5 - j];
    for (int i = 1; i < 5; ++i)
      for (int j = 5 - i; j < 5; ++j) e(i, j) = -oracle::power(Poly::z(), i + j - 5);
    for (int i = 0; i < 5; ++i) f(i, 0) = oracle::power(Poly::z(), 4 - i);
    for (int i = 0; i < 4; ++i) f(i, 4 - i) = 1;
    l(0, 0) = Poly({a[4], a[5]});
    for (int j = 1; j < 5; ++j) l(0, j) = a[4 - j];
    for (int i = 1; i < 5; ++i) l(i, i - 1) = -1, l(i, i) = Poly::z();
    c.expect(cf.e == e, "grade-5 E closed form");
    c.expect(cf.f == f, "grade-5 F closed form");
    c.expect(build_monomial_pencil(p).to_poly_matrix() == l, "grade-5 L closed form");
  }
}

// 2
void recurrence_criterion(Ctx& c) {
  auto t = recurrence_basis_polys(BasisSpec::chebyshev(5));
  for (const auto& a : probe(6)) {
    auto p = MatrixPolynomial::scalar(BasisSpec::chebyshev(5), a);
    Pencil pen = build_recurrence_pencil(p);
    CofactorPair cf = cofactors(p, pen);
    PolyMatrix einv = inverse_unimodular(cf.e), finv = inverse_unimodular(cf.f);
    const Poly row[] = {Poly(1), Poly(a[1]), Poly(a[2]), Poly(Rational(a[3] - a[5])), Poly({a[4], 2 * a[5]})};
    for (int j = 0; j < 5; ++j) c.expect(einv(0, j) == row[j], "E^-1 first row");
    c.expect(finv(0, 4) == Poly(1), "F^-1 last column top");
    for (int i = 1; i < 5; ++i) c.expect(finv(i, 4) == -t[i], "F^-1 last column -T_k");
    c.expect(verify_linearization(pen, p, cf).ok, "chebyshev cofactors verify");
  }
  Rng rng(2002);
  int done = 0;
  while (done < 60) {
    int l = static_cast<int>(rng.uniform(2, 6));
    std::size_t n = 1 + rng.uniform(0, 2);
    auto p = random_polynomial(rng, random_basis(rng, BasisKind::Recurrence, l), n);
    if (det(to_monomial(p).coeffs[l]) == 0) continue;
    ++done;
    Pencil pen = build_recurrence_pencil(p);
    c.expect(verify_linearization(pen, p, cofactors(p, pen)).ok, "recurrence cofactors verify");
    HermiteAnalogue ha = recurrence_hermite_analogue(p, pen, true);
    c.expect(verify_hermite_analogue(ha, pen).ok, "monic hermite analogue verifies");
    Matrix lead = to_monomial(p).coeffs[l];
    c.expect(PolyMatrix(lead) * ha.h.block(ha.corner_block, ha.corner_block, n) == p.to_poly_matrix(),
             "monic corner is lead^-1 P");
  }
}

// 3
void bernstein_criterion(Ctx& c) {
  const Rational diag[] = {parse_rational("2/4"), parse_rational("3/3"), parse_rational("4/2"), parse_rational("5/1")};
  for (const auto& y : probe(6)) {
    Pencil pen = build_bernstein_pencil(MatrixPolynomial::scalar(BasisSpec::bernstein(5), y));
    PolyMatrix l = pen.to_poly_matrix();
    for (int i = 1; i < 5; ++i) {
      c.expect(l(i, i) == Poly::monomial(diag[i - 1], 1), "diagonal 2/4, 3/3, 4/2, 5/1");
      c.expect(l(i, i - 1) == Poly({Rational(-1), Rational(1)}), "subdiagonal z - 1");
    }
  }
  Matrix w{{5, 0, 0, 0, 0}, {-10, 10, 0, 0, 0}, {10, -20, 10, 0, 0}, {-5, 15, -15, 5, 0}, {1, -4, 6, -4, 1}};
  c.expect(bernstein_w(5) == w, "W at grade 5");
  Rng rng(3003);
  std::size_t singular_seen = 0;
  for (int l = 2; l <= 6; ++l) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 4; ++rep) {
        auto p = random_polynomial(rng, BasisSpec::bernstein(l), n);
        if (rep >= 2) p.coeffs[l] = n > 1 ? random_singular_matrix(rng, n) : Matrix(1, 1);
        Pencil pen = build_bernstein_pencil(p);
        const bool singular = det(p.eval(1)) == 0;
        c.expect(p.eval(1) == p.coeffs[l], "P(1) = Y_l");
        try {
          HermiteAnalogue ha = bernstein_hermite_analogue(p, pen);
          c.expect(!singular, "SingularAtOne raised when P(1) singular");
          c.expect(verify_hermite_analogue(ha, pen).ok, "bernstein hermite analogue verifies");
          c.expect(verify_linearization(pen, p, assemble_cofactors(ha)).ok, "bernstein cofactors verify");
        } catch (const SingularAtOne&) {
          c.expect(singular, "SingularAtOne only when P(1) singular");
          ++singular_seen;
        }
        StrictEquivalence se = bernstein_strict_equivalence(p);
        c.expect(verify_strict(se, pen, build_monomial_pencil(to_monomial(p))).ok, "bernstein strict equivalence");
      }
    }
  }
  c.expect(singular_seen >= 30, "singular P(1) instances covered");
}

// 4
void reversal_criterion(Ctx& c) {
  Rng rng(4004);
  for (int l = 2; l <= 6; ++l) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto p = random_polynomial(rng, BasisSpec::bernstein(l), n);
      BernsteinReversal br = bernstein_reversal_equivalence(p);
      const Matrix &a = br.original.c0, &b = br.original.c1;
      c.expect(br.se.u * br.reversed.c0 * br.se.w == b - a, "U A_R W = B - A");
      c.expect(br.se.u * br.reversed.c1 * br.se.w == a, "U B_R W = A");
      Rational du = det(br.se.u), dw = det(br.se.w);
      c.expect(du == 1 || du == -1, "det U = +-1");
      c.expect(dw == 1 || dw == -1, "det W = +-1");
      auto d = bernstein_reversal_coeffs(p.coeffs), e = standard_reversal_coeffs(p.coeffs);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Rational> yy, dd, ee;
          for (int k = 0; k <= l; ++k) {
            yy.push_back(p.coeffs[k](i, j));
            dd.push_back(d[k](i, j));
            ee.push_back(e[k](i, j));
          }
          Poly pz = oracle::bernstein_sum(yy);
          c.expect(oracle::bernstein_sum(dd) == oracle::shifted_reversal(pz, l), "d matches (z+1)^l p(1/(z+1))");
          c.expect(oracle::bernstein_sum(ee) == oracle::standard_reversal(pz, l), "e matches z^l p(1/z)");
        }
    }
  }
}

// 5
void lagrange_criterion(Ctx& c) {
  Rng rng(5005);
  for (int l = 1; l <= 5; ++l) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto nodes = random_nodes(rng, l + 1);
      auto beta = barycentric_weights(nodes).weights;
      auto p = random_polynomial(rng, BasisSpec::lagrange(nodes), n);
      for (auto& v : p.coeffs)
        while (det(v) == 0) v = random_matrix(rng, n, n);
      Pencil pen = build_lagrange_pencil(p);
      HermiteAnalogue ha = lagrange_hermite_factors(p, pen);
      c.expect(verify_hermite_analogue(ha, pen).ok, "lagrange Hermite factorization");
      c.expect(verify_linearization(pen, p, assemble_cofactors(ha)).ok, "lagrange cofactors");
      const std::size_t last = l + 1;
      PolyMatrix sum(n, n);
      for (int k = 1; k <= l; ++k) sum += PolyMatrix(p.coeffs[k]) * ha.h.block(l + 1 - k, last, n);
      c.expect(sum == PolyMatrix(p.coeffs[0]), "sum P_k H_k = P_0");
      c.expect(ha.h.block(0, last, n) == PolyMatrix::identity(n) * (Poly::linear_root(nodes[0]) * Rational(1 / beta[0])),
               "G = (z - t_0)/b_0");

      for (int variant = 0; variant < 3; ++variant) {
        auto q = random_polynomial(rng, BasisSpec::lagrange(nodes), n);
        if (variant == 1) q.coeffs[rng.uniform(0, l)] = n > 1 ? random_singular_matrix(rng, n) : Matrix(1, 1);
        if (variant == 2)
          for (auto& v : q.coeffs) v.set_slice(n - 1, 0, Matrix(1, n));
        if (variant == 2) c.expect(det(q.to_poly_matrix()).is_zero(), "nonregular instance");
        if (variant == 1) {
          bool raised = false;
          try {
            lagrange_hermite_factors(q, build_lagrange_pencil(q));
          } catch (const SingularNodeValue&) {
            raised = true;
          }
          c.expect(raised, "SingularNodeValue raised");
        }
        StrictEquivalence se = lagrange_strict_equivalence(q);
        c.expect(verify_strict(se, build_lagrange_pencil(q), build_monomial_pencil(padded_monomial(q, l + 2))).ok,
                 "lagrange strict equivalence");
        Rational vp = 1, base = vandermonde_product(nodes);
        for (std::size_t i = 0; i < n; ++i) vp *= base;
        c.expect(det(lagrange_vandermonde(nodes).kron_identity(n)) == vp, "det(V (x) I) = prod^n");
        c.expect(det(se.u) == (n % 2 ? Rational(-vp) : vp), "det U = (-1)^n prod^n");
      }
    }
  }
}

MatrixPolynomial special_instance(Rng& rng, BasisKind kind, int l, std::size_t n, int variant) {
  auto p = random_polynomial(rng, random_basis(rng, kind, l), n);
  auto singular = [&] { return n > 1 ? random_singular_matrix(rng, n) : Matrix(1, 1); };
  if (variant == 1) {
    if (kind == BasisKind::Bernstein || kind == BasisKind::Lagrange) p.coeffs[kind == BasisKind::Bernstein ? l : 0] = singular();
    else p.coeffs[l] = singular();
  }
  if (variant == 2)
    for (auto& v : p.coeffs) v.set_slice(n - 1, 0, Matrix(1, n));
  return p;
}

// 6
void smith_criterion(Ctx& c) {
  Rng rng(6006);
  std::size_t degenerate = 0;
  for (auto kind : {BasisKind::Monomial, BasisKind::Recurrence, BasisKind::Bernstein, BasisKind::Lagrange}) {
    const int lmin = (kind == BasisKind::Recurrence || kind == BasisKind::Bernstein) ? 2 : 1;
    for (int l = lmin; l <= 4; ++l)
      for (std::size_t n = 1; n <= 2; ++n)
        for (int variant = 0; variant < 3; ++variant) {
          auto p = special_instance(rng, kind, l, n, variant);
          Pencil pen = build_pencil(p);
          const Poly d = det(p.to_poly_matrix());
          if (d.is_zero()) ++degenerate;
          if (kind == BasisKind::Bernstein && det(p.eval(1)) == 0) ++degenerate;
          if (kind == BasisKind::Lagrange && det(p.coeffs[0]) == 0) ++degenerate;
          Verdict v = smith_equivalence_check(pen, p);
          c.expect(v.ok, "smith(L) = diag(smith(P), I) for " + to_string(kind));
          c.expect(verify_strong(pen, p).ok, "reversal pencil matches rev P for " + to_string(kind));
        }
  }
  c.expect(degenerate >= 40, "singular and nonregular instances covered");
}

// 7
void normal_form_criterion(Ctx& c) {
  const auto ident_last = grid({"x000x", "0x00x", "00x0x", "000xx", "0000x"});
  Rng basis_rng(7);
  for (const auto& spec : {BasisSpec::chebyshev(5), random_basis(basis_rng, BasisKind::Recurrence, 5)}) {
    std::vector<Rational> a{3, -1, 4, 1, -5, 9};
    auto p = MatrixPolynomial::scalar(spec, a);
    PolyMatrix l = build_recurrence_pencil(p).to_poly_matrix();
    HermiteResult r = hermite_form(l);
    c.expect(mask(r.h) == ident_last, "recurrence H mask");
    c.expect(r.h(4, 4) == p.to_poly_matrix()(0, 0).monic(), "recurrence corner is monic P");
    c.expect(mask(inverse_unimodular(r.u)) == grid({"xxxxx", "xxx00", "0xxx0", "00xx0", "000x0"}), "recurrence U^-1 mask");
  }
  {
    std::vector<Rational> nodes{0, 1, 2, 3}, vals{3, -2, 5, 7};
    auto p = MatrixPolynomial::scalar(BasisSpec::lagrange(nodes), vals);
    HermiteResult r = hermite_form(build_lagrange_pencil(p).to_poly_matrix());
    c.expect(mask(r.h) == ident_last, "lagrange H mask");
    c.expect(mask(inverse_unimodular(r.u)) == grid({"0xxx0", "xx00x", "x0x0x", "x00xx", "x0000"}), "lagrange U^-1 mask");
    HermiteAnalogue ha = lagrange_hermite_factors(p, build_lagrange_pencil(p));
    c.expect(mask(ha.uinv) == mask(inverse_unimodular(r.u)), "lagrange U^-1 has the HNF shape");
  }
  Rng rng(7007);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng.uniform(0, 3);
    PolyMatrix m = random_poly_matrix(rng, n, n, static_cast<int>(rng.uniform(0, 3)));
    if (t % 10 == 0 && n > 1) m.set_slice(n - 1, 0, m.slice(0, 0, 1, n));
    HermiteResult h = hermite_form(m);
    c.expect(h.u * m == h.h, "U M = H");
    c.expect(verify_hermite(m, h).ok, "hermite form verifies");
    SmithResult s = smith_form(m);
    c.expect(s.e * s.s * s.f == m, "E S F = M");
    auto f = s.factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) c.expect(divides(f[i], f[i + 1]), "divisibility chain");
    c.expect(verify_smith(m, s).ok, "smith form verifies");
  }
}

// 8
void identity_criterion(Ctx& c) {
  Rng rng(8008);
  const Poly z = Poly::z();
  for (int l = 0; l <= 6; ++l) {
    for (int rep = 0; rep < 5; ++rep) {
      auto nodes = random_nodes(rng, l + 1);
      auto bd = barycentric_weights(nodes);
      Poly w = bd.node_poly(), s1, sz;
      Rational sum = 0;
      for (int k = 0; k <= l; ++k) {
        Poly wk = exact_div(w, Poly::linear_root(nodes[k]));
        s1 += bd.weights[k] * wk;
        sz += Rational(bd.weights[k] * nodes[k]) * wk;
        sum += bd.weights[k];
      }
      c.expect(s1 == Poly(1), "sum b_k w/(z - t_k) = 1");
      c.expect(l == 0 || sz == z, "sum b_k t_k w/(z - t_k) = z");
      c.expect(l == 0 || sum == 0, "sum b_k = 0");
      std::vector<Rational> vals;
      for (int k = 0; k <= l; ++k) vals.push_back(rng.rational());
      Poly bary;
      for (int k = 0; k <= l; ++k) bary += Rational(bd.weights[k] * vals[k]) * exact_div(w, Poly::linear_root(nodes[k]));
      c.expect(bary == oracle::lagrange(nodes, vals), "first barycentric form");
    }
    Poly unity;
    for (const auto& b : basis_polys(BasisSpec::bernstein(l))) unity += b;
    c.expect(unity == Poly(1), "bernstein partition of unity");
    if (l >= 1) {
      auto bl = basis_polys(BasisSpec::bernstein(l)), bm = basis_polys(BasisSpec::bernstein(l - 1));
      for (int j = 0; j < l; ++j)
        c.expect(Rational(j + 1) * bl[j + 1] + Rational(l - j) * bl[j] == Rational(l) * bm[j], "degree-elevation recurrence");
    }
    auto p = random_polynomial(rng, BasisSpec::bernstein(l), 2);
    auto e = degree_elevate(p);
    c.expect(e.grade() == l + 1 && e.to_poly_matrix() == p.to_poly_matrix(), "degree elevation preserves P");
    c.expect(e.coeffs.front() == p.coeffs.front() && e.coeffs.back() == p.coeffs.back(), "elevation keeps end coefficients");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Ctx&)> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {"monomial cofactors", monomial_cofactors_criterion, 10},
      {"recurrence basis cofactors", recurrence_criterion, 0},
      {"bernstein pencil, hermite analogue, strict equivalence", bernstein_criterion, 0},
      {"bernstein reversal", reversal_criterion, 0},
      {"lagrange factorization and strict equivalence", lagrange_criterion, 0},
      {"smith-form equivalence", smith_criterion, 60},
      {"normal-form engine", normal_form_criterion, 0},
      {"barycentric and bernstein identities", identity_criterion, 0},
  };
  int failed = 0, index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Ctx c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) c.failures.push_back("runtime limit exceeded");
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", index, cr.name, c.checks, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  return failed ? 1 : 0;
}
