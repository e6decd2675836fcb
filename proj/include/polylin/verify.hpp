#pragma once

#include <map>
#include <optional>
#include <string>

#include "polylin/bases.hpp"
#include "polylin/equivalence.hpp"
#include "polylin/normal_forms.hpp"
#include "polylin/pencils.hpp"

namespace polylin {

struct Verdict {
  std::string check;
  bool ok = false;
  std::optional<Rational> constant;
  /// Empty when ok; otherwise what failed and where.
  std::map<std::string, std::string> counterexample;

  explicit operator bool() const { return ok; }
};

/// det(zC1 - C0) = c det P(z) for a nonzero constant c.
Verdict verify_companion(const Pencil& l, const MatrixPolynomial& p);
/// E L F = diag(P, I, ..., I) with E, F unimodular; constant = det E * det F.
Verdict verify_linearization(const Pencil& l, const MatrixPolynomial& p, const CofactorPair& cf);
/// U C1 W = C1', U C0 W = C0', U and W nonsingular; constant = det U * det W.
Verdict verify_strict(const StrictEquivalence& se, const Pencil& from, const Pencil& to);
/// Uinv H = L, Uinv unimodular, H the identity outside its corner column.
Verdict verify_hermite_analogue(const HermiteAnalogue& ha, const Pencil& l);
/// Smith form of the reversed pencil z C0 - C1 equals diag(Smith(rev P), I, ...),
/// rev P = z^g P(1/z) with g the block count.
Verdict verify_strong(const Pencil& l, const MatrixPolynomial& p);
/// Smith form of L equals diag(Smith(P), I, ..., I).
Verdict smith_equivalence_check(const Pencil& l, const MatrixPolynomial& p);
/// U M = H, U unimodular, H in Hermite form.
Verdict verify_hermite(const PolyMatrix& m, const HermiteResult& r);
/// E S F = M, E and F unimodular, S diagonal with a monic divisibility chain.
Verdict verify_smith(const PolyMatrix& m, const SmithResult& r);

/// z^g P(1/z), entrywise.
PolyMatrix reverse(const PolyMatrix& p, int grade);

}  // namespace polylin
