#include <doctest.h>

#include "helpers.hpp"
#include "polylin/equivalence.hpp"
#include "polylin/random_instances.hpp"
#include "polylin/sweep.hpp"
#include "polylin/verify.hpp"

using namespace polylin;
using th::poly;

TEST_SUITE("verify") {
  TEST_CASE("companion check rejects a perturbed pencil") {
    auto p = MatrixPolynomial::scalar(BasisSpec::monomial(3), th::rats({1, 2, 3, 4}));
    Pencil l = build_monomial_pencil(p);
    CHECK(verify_companion(l, p).ok);
    l.c0(1, 1) += 1;
    Verdict v = verify_companion(l, p);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.counterexample.empty());
  }

  TEST_CASE("linearization check rejects wrong cofactors") {
    auto p = MatrixPolynomial::scalar(BasisSpec::monomial(3), th::rats({1, 2, 3, 4}));
    Pencil l = build_monomial_pencil(p);
    CofactorPair cf = monomial_cofactors(p);
    CHECK(verify_linearization(l, p, cf).ok);
    CofactorPair bad = cf;
    bad.e(0, 1) += Poly::z();
    CHECK_FALSE(verify_linearization(l, p, bad).ok);
    CofactorPair scaled = cf;
    scaled.f = scaled.f * Poly::z();
    CHECK_FALSE(verify_linearization(l, p, scaled).ok);
  }

  TEST_CASE("strict check rejects a wrong transform") {
    Rng rng(2);
    auto p = random_polynomial(rng, BasisSpec::bernstein(3), 2);
    StrictEquivalence se = bernstein_strict_equivalence(p);
    Pencil from = build_bernstein_pencil(p), to = build_monomial_pencil(to_monomial(p));
    CHECK(verify_strict(se, from, to).ok);
    se.w(0, 0) += 1;
    CHECK_FALSE(verify_strict(se, from, to).ok);
    StrictEquivalence zero{Matrix(6, 6), Matrix::identity(6)};
    CHECK_FALSE(verify_strict(zero, from, to).ok);
  }

  TEST_CASE("hermite and smith checks reject malformed results") {
    PolyMatrix m(2, 2);
    m(0, 0) = poly({1, 1});
    m(0, 1) = poly({0, 0, 1});
    m(1, 1) = poly({2, 1});
    HermiteResult h = hermite_form(m);
    CHECK(verify_hermite(m, h).ok);
    HermiteResult bad = h;
    bad.h(0, 1) += bad.h(1, 1) * poly({0, 1});  // above-pivot entry not reduced
    bad.u = PolyMatrix::identity(2);
    CHECK_FALSE(verify_hermite(m, bad).ok);
    SmithResult s = smith_form(m);
    CHECK(verify_smith(m, s).ok);
    SmithResult swapped = s;
    std::swap(swapped.s(0, 0), swapped.s(1, 1));
    CHECK_FALSE(verify_smith(m, swapped).ok);
  }

  TEST_CASE("strong linearization and smith equivalence") {
    Rng rng(19);
    for (auto kind : {BasisKind::Monomial, BasisKind::Recurrence, BasisKind::Bernstein, BasisKind::Lagrange}) {
      auto p = random_polynomial(rng, random_basis(rng, kind, 3), 2);
      Pencil l = build_pencil(p);
      CHECK(smith_equivalence_check(l, p).ok);
      CHECK(verify_strong(l, p).ok);
    }
    auto p = MatrixPolynomial::scalar(BasisSpec::monomial(2), th::rats({1, 0, 1}));
    Pencil l = build_monomial_pencil(p);
    l.c1(0, 0) = 0;
    CHECK_FALSE(smith_equivalence_check(l, p).ok);
  }

  TEST_CASE("reverse") {
    PolyMatrix m(1, 2);
    m(0, 0) = poly({1, 2});
    m(0, 1) = poly({0, 0, 3});
    PolyMatrix r = reverse(m, 3);
    CHECK(r(0, 0) == poly({0, 0, 2, 1}));
    CHECK(r(0, 1) == poly({0, 3}));
  }

  TEST_CASE("small sweep and fault injection") {
    SweepOptions o;
    o.count = 12;
    o.nmax = 2;
    o.lmax = 4;
    SweepReport r = run_sweep(o);
    CHECK(r.ok);
    for (const auto& [kind, t] : r.tallies) {
      CHECK(t.instances == 12);
      CHECK(t.passed == 12);
    }
    Json j = r.to_json(o);
    CHECK(j.dump() == run_sweep(o).to_json(o).dump());
    o.inject_fault = true;
    SweepReport f = run_sweep(o);
    CHECK_FALSE(f.ok);
    CHECK(f.counterexample.has_value());
  }
}
