#include "polylin/sweep.hpp"

#include "polylin/equivalence.hpp"
#include "polylin/errors.hpp"
#include "polylin/pencils.hpp"
#include "polylin/random_instances.hpp"
#include "polylin/verify.hpp"

namespace polylin {

namespace {

int min_grade(BasisKind k) {
  return k == BasisKind::Recurrence || k == BasisKind::Bernstein ? 2 : 1;
}

bool singular(const Matrix& m) { return det(m) == 0; }

Verdict typed_error_verdict(const std::string& check, bool expected) {
  Verdict v;
  v.check = check;
  v.ok = expected;
  if (!expected) v.counterexample["reason"] = "precondition error raised on a valid instance";
  return v;
}

}  // namespace

std::optional<Verdict> check_instance(const MatrixPolynomial& p, BasisTally* tally,
                                      bool inject_fault) {
  std::vector<Verdict> verdicts;
  Pencil l = build_pencil(p);
  if (inject_fault) l.c0(0, 0) += 1;
  verdicts.push_back(verify_companion(l, p));

  switch (p.basis.kind) {
    case BasisKind::Monomial:
      verdicts.push_back(verify_linearization(l, p, monomial_cofactors(p)));
      break;
    case BasisKind::Recurrence: {
      auto ha = recurrence_hermite_analogue(p, l);
      verdicts.push_back(verify_hermite_analogue(ha, l));
      verdicts.push_back(verify_linearization(l, p, assemble_cofactors(ha)));
      break;
    }
    case BasisKind::Bernstein: {
      try {
        auto ha = bernstein_hermite_analogue(p, l);
        verdicts.push_back(verify_hermite_analogue(ha, l));
        verdicts.push_back(verify_linearization(l, p, assemble_cofactors(ha)));
      } catch (const SingularAtOne&) {
        verdicts.push_back(typed_error_verdict("singular-at-one", singular(p.coeffs.back())));
      }
      const Pencil lm = build_monomial_pencil(to_monomial(p));
      verdicts.push_back(verify_strict(bernstein_strict_equivalence(p), l, lm));
      const auto br = bernstein_reversal_equivalence(p);
      auto v = verify_strict(br.se, br.reversed, shifted_reversal(l));
      v.check = "reversal";
      verdicts.push_back(v);
      break;
    }
    case BasisKind::Lagrange: {
      try {
        auto ha = lagrange_hermite_factors(p, l);
        verdicts.push_back(verify_hermite_analogue(ha, l));
        verdicts.push_back(verify_linearization(l, p, assemble_cofactors(ha)));
      } catch (const SingularNodeValue& e) {
        verdicts.push_back(typed_error_verdict("singular-node-value", singular(p.coeffs[e.node()])));
      }
      MatrixPolynomial m = to_monomial(p);
      m.coeffs.resize(p.grade() + 3, Matrix(p.n, p.n));
      m.basis = BasisSpec::monomial(p.grade() + 2);
      verdicts.push_back(verify_strict(lagrange_strict_equivalence(p), l, build_monomial_pencil(m)));
      break;
    }
  }
  for (const auto& v : verdicts) {
    if (!v.ok) return v;
    if (tally) ++tally->checks[v.check];
  }
  return std::nullopt;
}

SweepReport run_sweep(const SweepOptions& opt) {
  SweepReport rep;
  Rng rng(opt.seed);
  bool fault_pending = opt.inject_fault;
  for (BasisKind kind : opt.bases) {
    BasisTally& t = rep.tallies[kind];
    const int lo = min_grade(kind);
    if (opt.lmax < lo || opt.nmax < 1) continue;
    for (std::size_t i = 0; i < opt.count; ++i) {
      const std::size_t n = rng.uniform(1, static_cast<long>(opt.nmax));
      const int l = static_cast<int>(rng.uniform(lo, opt.lmax));
      MatrixPolynomial p = random_polynomial(rng, random_basis(rng, kind, l), n);
      // A quarter of the instances get a singular coefficient that defeats the
      // Hermite analogues of the Bernstein and Lagrange bases.
      if (rng.uniform(0, 3) == 0) {
        const std::size_t k = kind == BasisKind::Bernstein ? l : rng.uniform(0, l);
        p.coeffs[k] = random_singular_matrix(rng, n);
      }
      ++t.instances;
      std::optional<Verdict> bad;
      try {
        bad = check_instance(p, &t, fault_pending);
      } catch (const Error& e) {
        Verdict v;
        v.check = "construction";
        v.counterexample["reason"] = e.what();
        bad = v;
      }
      fault_pending = false;
      if (!bad) {
        ++t.passed;
      } else if (rep.ok) {
        rep.ok = false;
        rep.counterexample = Json{{"basis", to_string(kind)}, {"index", i},
                                  {"polynomial", polylin::to_json(p)}, {"verdict", polylin::to_json(*bad)}};
      }
    }
  }
  return rep;
}

Json SweepReport::to_json(const SweepOptions& opt) const {
  Json bases = Json::object();
  for (const auto& [k, t] : tallies) {
    Json checks = Json::object();
    for (const auto& [name, c] : t.checks) checks[name] = c;
    bases[to_string(k)] = {{"instances", t.instances}, {"passed", t.passed}, {"checks", std::move(checks)}};
  }
  return {{"seed", opt.seed}, {"count", opt.count}, {"nmax", opt.nmax}, {"lmax", opt.lmax},
          {"ok", ok}, {"bases", std::move(bases)},
          {"counterexample", counterexample ? *counterexample : Json(nullptr)}};
}

}  // namespace polylin
