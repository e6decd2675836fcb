#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylin {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input (bad rational string, bad JSON shape, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold: duplicate nodes, zero alpha_k,
/// grade too small, wrong basis kind.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

/// Bernstein Hermite analogue: P(1) = Y_l is singular.
class SingularAtOne : public PreconditionError {
 public:
  SingularAtOne() : PreconditionError("SingularAtOne: P(1) is singular") {}
};

/// Lagrange Hermite factors: the value P_k at node k is singular.
class SingularNodeValue : public PreconditionError {
 public:
  explicit SingularNodeValue(std::size_t k)
      : PreconditionError("SingularNodeValue: P_" + std::to_string(k) +
                          " is singular"),
        node_(k) {}
  std::size_t node() const { return node_; }

 private:
  std::size_t node_;
};

/// Monic normalization needs a nonsingular leading block.
class GenericityFailure : public PreconditionError {
 public:
  GenericityFailure()
      : PreconditionError(
            "GenericityFailure: leading monomial coefficient is singular") {}
};

/// A closed form wired to mandatory verification did not verify.
class ConjectureFailure : public Error {
 public:
  ConjectureFailure(const std::string& what, int grade)
      : Error("ConjectureFailure: " + what + " (grade " +
              std::to_string(grade) + ")"),
        grade_(grade) {}
  int grade() const { return grade_; }

 private:
  int grade_;
};

}  // namespace polylin
