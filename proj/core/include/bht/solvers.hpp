#pragma once

#include "bht/families.hpp"

#include <vector>

namespace bht {

struct SolveOutput {
  std::vector<RadiiSolution> solutions;
  QuadSurd discriminant;  // of the derivation quadratic for this instance
};

// Hypersurface criterion (2p+1)(s/r)^2 + (2q+1)(r/s)^2 = 2(n+2), solved
// exactly through x = (s/r)^2. Returns one solution per positive root,
// each with squared radii labelled "r" and "s".
SolveOutput solve_hypersurface_radii(const FamilyParams& params);

// Flat-torus condition: t^2 - (2(n+1)^2 - (p-q)^2) t + 4pq(n+1)^2 = 0 with
// t = 2(n+1)^2 - d. The t = (n+1)^2 root forces all radii equal and is
// returned flagged Branch::MinimalExcluded; the other root yields squared
// radii {1/(2p): p, 1/(2q): q}.
SolveOutput solve_flat_torus_radii(const FamilyParams& params);

// Lagrangian condition: t^2 - (2(n+1)(n+3) - (p-q)^2) t + 4pq(n+3)^2 = 0
// with t = 2(n+1)(n+3) - d; each t-root feeds t b^2 - 2(n+3) b + 1 = 0,
// and multiplicities are assigned so that p r^2 + q s^2 = 1 exactly.
SolveOutput solve_lagrangian_radii(const FamilyParams& params);

SolveOutput solve_family(const FamilyParams& params);

/// All proper solutions with n <= n_max and p <= q, sorted by (n, p, q, branch).
std::vector<RadiiSolution> enumerate_solutions(Family family, int n_max);

// Per-coordinate residual of the flat-torus condition
//   a_i d - 1/a_i^3 = 2(n+1)((n+1) a_i - 1/a_i),   d = sum 1/a_j^2,
// over squared radii (length n+1, sum within 1e-12 of 1).
std::vector<Real> residual_flat_torus(const std::vector<Real>& squared_radii, int n);

/// Same residual with ambient constant 2(n+3) (Lagrangian condition).
std::vector<Real> residual_lagrangian(const std::vector<Real>& squared_radii, int n);

// Exact residual in the b-form (the a_i-form divided by a_i):
//   d - 1/b_i^2 - c ((n+1) - 1/b_i),  c = 2(n+1) or 2(n+3).
// One entry per distinct squared radius.
std::vector<QuadSurd> residual_torus_exact(const std::vector<SquaredRadius>& squared_radii, int n,
                                           bool lagrangian);

}  // namespace bht
