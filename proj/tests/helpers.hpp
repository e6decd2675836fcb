#pragma once

#include <string>
#include <vector>

#include "polylin/bases.hpp"
#include "polylin/poly.hpp"

namespace th {

using polylin::Poly;
using polylin::Rational;

inline Rational q(const char* s) { return polylin::parse_rational(s); }

inline Poly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

inline std::vector<Rational> rats(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

/// Unit vectors e_0..e_{len-1} plus the zero vector: every entry of the
/// structures tested is affine in the coefficients, so agreement on these
/// inputs is agreement for symbolic coefficients.
inline std::vector<std::vector<Rational>> affine_probe(std::size_t len) {
  std::vector<std::vector<Rational>> out(1, std::vector<Rational>(len, Rational(0)));
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Rational> e(len, Rational(0));
    e[k] = 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace th
