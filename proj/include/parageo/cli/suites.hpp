#pragma once

#include <string>
#include <vector>

#include "parageo/algebra/graded_algebra.hpp"

namespace parageo {

struct IdentityTally {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::string first_violation;  // sample description, empty when none
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityTally> identities;
  bool ok() const;
};

/// Curve-calculus identities on `samples` deterministic (X, Z, X', Z') picks
/// from the n basis and the p_+ grid: exp-log-derivative series, product rule,
/// iterated brackets of delta u up to `orders`, conjugated derivative, and the
/// reparametrized expansion (i <= 4) for two polynomial phi.
SuiteReport lemma_suite(const AlgebraPtr& g, int grid, unsigned orders, std::size_t samples = 50);

/// Grading and Jacobi on basis triples, plus the closed double-bracket
/// formulas of the conformal and Grassmannian models on basis pairs.
SuiteReport bracket_suite(const AlgebraPtr& g);

/// Equal (k+2)-jets imply equal curves for every full_n grid pair, X running
/// over the n basis and the sum of all basis vectors.
SuiteReport safety_suite(const AlgebraPtr& g, int grid, unsigned workers = 1);

}  // namespace parageo
