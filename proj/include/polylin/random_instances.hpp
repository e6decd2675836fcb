#pragma once

#include <cstdint>
#include <random>

#include "polylin/bases.hpp"
#include "polylin/poly_matrix.hpp"

namespace polylin {

/// Deterministic source of small rationals. The mapping from engine output to
/// values is done by hand so the stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with p in [-9, 9], q in [1, 9].
  Rational rational();
  Rational nonzero_rational();

 private:
  std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Distinct rationals.
std::vector<Rational> random_nodes(Rng& rng, std::size_t count);
/// Random basis of the kind; recurrence alpha_k are nonzero.
BasisSpec random_basis(Rng& rng, BasisKind kind, int grade);
MatrixPolynomial random_polynomial(Rng& rng, const BasisSpec& basis, std::size_t n);
PolyMatrix random_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, int grade);
/// Product of random elementary row operations with polynomial multipliers.
PolyMatrix random_unimodular(Rng& rng, std::size_t n, int grade);
/// Rank-deficient n x n matrix (n >= 2).
Matrix random_singular_matrix(Rng& rng, std::size_t n);

}  // namespace polylin
