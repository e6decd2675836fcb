#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polylin/bases.hpp"
#include "polylin/json_io.hpp"

namespace polylin {

struct SweepOptions {
  std::vector<BasisKind> bases{BasisKind::Monomial, BasisKind::Recurrence, BasisKind::Bernstein,
                               BasisKind::Lagrange};
  std::size_t nmax = 3;
  int lmax = 6;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  /// Test hook: perturb one pencil entry of the first instance.
  bool inject_fault = false;
};

struct BasisTally {
  std::size_t instances = 0;
  std::size_t passed = 0;
  /// Check name -> number of instances where it ran and passed.
  std::map<std::string, std::size_t> checks;
};

struct SweepReport {
  std::map<BasisKind, BasisTally> tallies;
  bool ok = true;
  std::optional<Json> counterexample;

  Json to_json(const SweepOptions& opt) const;
};

/// Runs every applicable constructor/verifier pair on random instances.
/// Instances violating a construction precondition (singular P(1), singular
/// node value) must raise the matching typed error, which is itself checked.
SweepReport run_sweep(const SweepOptions& opt);

/// All checks for one instance; the first failing verdict, or nullopt.
std::optional<Verdict> check_instance(const MatrixPolynomial& p, BasisTally* tally = nullptr,
                                      bool inject_fault = false);

}  // namespace polylin
