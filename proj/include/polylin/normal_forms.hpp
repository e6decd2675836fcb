#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polylin/poly_matrix.hpp"

namespace polylin {

/// U * M = H, H upper triangular (row echelon) with monic pivots and the
/// entries above each pivot of lower degree than the pivot.
struct HermiteResult {
  PolyMatrix h;
  PolyMatrix u;
  /// Column of each pivot, one per nonzero row of H.
  std::vector<std::size_t> pivot_cols;
  bool rank_deficient = false;
};

HermiteResult hermite_form(const PolyMatrix& m);

/// M = E * S * F, S diagonal with monic invariant factors s_1 | s_2 | ...
/// (zeros last).
struct SmithResult {
  PolyMatrix s;
  PolyMatrix e;
  PolyMatrix f;
  std::vector<Poly> factors() const;
};

SmithResult smith_form(const PolyMatrix& m);
/// Diagonal of the Smith form, computed without the transforms.
std::vector<Poly> invariant_factors(const PolyMatrix& m);

/// Row strings of '0' (zero entry) and 'x' (nonzero entry).
std::vector<std::string> mask(const PolyMatrix& m);

}  // namespace polylin
