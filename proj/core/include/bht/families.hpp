#pragma once

#include "bht/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bht {

enum class Family { CpnHypersurface, SphereFlatTorus, CpnLagrangianTorus };

enum class Branch { Minus, Plus, MinimalExcluded };

std::string to_string(Family f);
std::string to_string(Branch b);
std::optional<Family> family_from_string(const std::string& name);
std::optional<Branch> branch_from_string(const std::string& name);

// Identifies one torus-family instance (n, p, q).
//   CpnHypersurface:     p + q = n - 1, p, q >= 0; submanifold dimension 2n-1.
//   SphereFlatTorus:     p + q = n + 1, p, q >= 1; dimension n+1.
//   CpnLagrangianTorus:  p + q = n + 1, p, q >= 1; dimension n.
struct FamilyParams {
  Family family;
  int n = 0;
  int p = 0;
  int q = 0;

  bool valid() const;
  void require_valid() const;  // throws std::invalid_argument
  int dim() const;
};

struct SquaredRadius {
  QuadSurd value;
  int multiplicity = 1;
  std::string label;  // "r", "s", or "b" for the all-equal case
};

// One solved radius assignment. The squared radii always satisfy
// sum(multiplicity * value) == 1 exactly, and d == sum(multiplicity / value).
// `exact` is false only when a root had to be stored as a high-precision
// rational approximation instead of a closed form.
struct RadiiSolution {
  FamilyParams params;
  Branch branch = Branch::Minus;
  std::vector<SquaredRadius> squared_radii;
  QuadSurd d;
  std::optional<QuadSurd> t;  // absent for the hypersurface family
  bool proper = false;
  bool exact = true;

  /// Squared radii expanded by multiplicity (length n+1 for tori).
  std::vector<Real> squared_radii_real() const;
  /// Radii a_i = sqrt(b_i), expanded by multiplicity.
  std::vector<Real> radii_real() const;

  /// Throws std::logic_error if an invariant fails.
  void check_invariants() const;
};

}  // namespace bht
