#pragma once

#include "bht/solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bht {

enum class TableId { HypersurfaceN5, LagrangianN4 };

std::optional<TableId> table_from_string(const std::string& name);
std::string to_string(TableId id);

// A stored row of a published radii table, kept verbatim as exact surds.
struct StoredRow {
  int p = 0, q = 0;
  QuadSurd r_sq, s_sq;
};

const std::vector<StoredRow>& stored_rows(TableId id);

struct LagrangianRowCheck {
  StoredRow stored;
  RadiiSolution solver;      // branch whose multiset matches by value order
  bool exact_match = false;  // stored (r^2, s^2) equal solver output exactly
  std::vector<QuadSurd> residual;  // exact biharmonicity residual at stored radii
};

struct HypersurfaceRowCheck {
  StoredRow stored;
  // At the stored radii:
  QuadSurd norm_b_sq;        // (2p+1)(s/r)^2 + (2q+1)(r/s)^2, exact
  QuadSurd criterion_residual;  // norm_b_sq - 2(n+2)
  QuadSurd variant_value;       // (2p+1)(r/s)^2 + (2q+1)(s/r)^2
  bool matches_criterion_solver = false;  // row appears among criterion solutions
  bool matches_variant_solver = false;    // row appears among variant-equation solutions
  RadiiSolution criterion_solution;       // criterion solution paired by r/s ordering
};

struct TableReconstruction {
  TableId id;
  std::vector<LagrangianRowCheck> lagrangian_rows;
  std::vector<HypersurfaceRowCheck> hypersurface_rows;
  bool all_rows_match_solver = false;
};

// Rebuilds the stored table from the exact solvers and reports, per row,
// whether the stored values coincide with the solver output. For the
// hypersurface table this also solves the variant equation
// (2p+1) x + (2q+1)/x = 2(n+1) with x = (r/s)^2, which is the equation the
// stored rows actually satisfy.
TableReconstruction reconstruct_table(TableId id);

/// Solutions of the variant hypersurface equation for given (p, q), n = p+q+1.
SolveOutput solve_hypersurface_variant(const FamilyParams& params);

/// Exact ||B~||^2 = (2p+1) s^2/r^2 + (2q+1) r^2/s^2 at given squared radii.
QuadSurd hypersurface_norm_b_sq(int p, int q, const QuadSurd& r_sq, const QuadSurd& s_sq);

}  // namespace bht
