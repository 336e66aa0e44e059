#pragma once
// Exact adjudication of the published formulas against the structure-equation oracle.
//
// Each printed polynomial is turned into coefficients by exact interpolation of its parsed
// transcription; the "true" polynomial is interpolated from structure_residuals in rationals.
// Conditions of the form P = 0 are compared up to an overall factor (the most common
// coefficient ratio); definitions (K3 := ..., L = ...) are compared with factor 1.

#include "affgeo/mvpoly.hpp"

#include <string>
#include <vector>

namespace affgeo {

struct CoefficientDifference {
  std::string monomial;
  Rational printed;
  Rational derived;
};

struct ErratumEntry {
  std::string location;
  std::string printed;
  std::string derived;
  std::string verdict;  // "confirmed" or "typo"
  std::string note;
  std::vector<CoefficientDifference> differences;
};

struct ErrataReport {
  std::vector<ErratumEntry> entries;
  const ErratumEntry& at(const std::string& location) const;  // throws std::out_of_range
};

// Oracle entry E(i, j) (1-based, as in the structure equations) as an exact polynomial in
// the 15 differential variables, or in the 5 invariants when derivatives are dropped.
MvPoly structural_polynomial(int i, int j, bool with_derivatives);

// Runs every check; deterministic.
ErrataReport errata_adjudicate();

}  // namespace affgeo
