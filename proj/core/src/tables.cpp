#include "bht/tables.hpp"

#include <stdexcept>

namespace bht {

namespace {

QuadSurd surd(long long a_num, long long b_num, long long d, long long den) {
  return QuadSurd::normalized(Rational(a_num, den), Rational(b_num, den), d);
}

}  // namespace

std::optional<TableId> table_from_string(const std::string& name) {
  if (name == "hypersurface-n5") return TableId::HypersurfaceN5;
  if (name == "lagrangian-n4") return TableId::LagrangianN4;
  return std::nullopt;
}

std::string to_string(TableId id) {
  return id == TableId::HypersurfaceN5 ? "hypersurface-n5" : "lagrangian-n4";
}

const std::vector<StoredRow>& stored_rows(TableId id) {
  // Squared radii of the published rows, stored verbatim.
  static const std::vector<StoredRow> hypersurface_n5 = {
      {0, 4, surd(15, -3, 3, 22), surd(7, 3, 3, 22)},
      {0, 4, surd(15, 3, 3, 22), surd(7, -3, 3, 22)},
      {1, 3, surd(13, -1, 15, 22), surd(9, 1, 15, 22)},
      {1, 3, surd(13, 1, 15, 22), surd(9, -1, 15, 22)},
      {2, 2, surd(11, 1, 11, 22), surd(11, -1, 11, 22)},
  };
  static const std::vector<StoredRow> lagrangian_n4 = {
      {1, 4, surd(11, -1, 65, 28), surd(17, 1, 65, 112)},
      {1, 4, surd(11, 1, 65, 28), surd(17, -1, 65, 112)},
      {2, 3, surd(13, -1, 57, 56), surd(15, 1, 57, 84)},
      {2, 3, surd(13, 1, 57, 56), surd(15, -1, 57, 84)},
  };
  return id == TableId::HypersurfaceN5 ? hypersurface_n5 : lagrangian_n4;
}

QuadSurd hypersurface_norm_b_sq(int p, int q, const QuadSurd& r_sq, const QuadSurd& s_sq) {
  QuadSurd x = r_sq / s_sq;
  return QuadSurd(Rational(2 * p + 1)) / x + QuadSurd(Rational(2 * q + 1)) * x;
}

SolveOutput solve_hypersurface_variant(const FamilyParams& params) {
  params.require_valid();
  const int n = params.n, p = params.p, q = params.q;
  // (2p+1) x^2 - 2(n+1) x + (2q+1) = 0 with x = (r/s)^2
  QuadRoots roots = quad_solve(QuadSurd(Rational(2 * p + 1)), QuadSurd(Rational(-2 * (n + 1))),
                               QuadSurd(Rational(2 * q + 1)));
  SolveOutput out;
  out.discriminant = roots.discriminant;
  Branch branch = Branch::Minus;
  for (const QuadSurd& x : roots.roots) {
    if (x.sign() <= 0) continue;
    QuadSurd one(1), r_sq = x / (one + x), s_sq = one / (one + x);
    RadiiSolution sol;
    sol.params = params;
    sol.branch = branch;
    sol.squared_radii = {{r_sq, 1, "r"}, {s_sq, 1, "s"}};
    sol.d = QuadSurd(1) / r_sq + QuadSurd(1) / s_sq;
    sol.proper = true;
    out.solutions.push_back(std::move(sol));
    branch = Branch::Plus;
  }
  return out;
}

namespace {

bool row_matches(const StoredRow& row, const RadiiSolution& sol) {
  if (sol.squared_radii.size() != 2) return false;
  const QuadSurd& a = sol.squared_radii[0].value;
  const QuadSurd& b = sol.squared_radii[1].value;
  return (row.r_sq == a && row.s_sq == b) || (row.r_sq == b && row.s_sq == a);
}

/// Solver entry whose r^2-vs-s^2 ordering matches the stored row.
const RadiiSolution& paired_solution(const StoredRow& row, const std::vector<RadiiSolution>& sols) {
  bool stored_r_larger = row.r_sq > row.s_sq;
  for (const auto& sol : sols) {
    bool sol_r_larger = sol.squared_radii[0].value > sol.squared_radii[1].value;
    if (sol_r_larger == stored_r_larger) return sol;
  }
  return sols.front();
}

}  // namespace

TableReconstruction reconstruct_table(TableId id) {
  TableReconstruction out;
  out.id = id;
  out.all_rows_match_solver = true;

  if (id == TableId::LagrangianN4) {
    for (const StoredRow& row : stored_rows(id)) {
      FamilyParams params{Family::CpnLagrangianTorus, 4, row.p, row.q};
      SolveOutput solved = solve_lagrangian_radii(params);
      LagrangianRowCheck check;
      check.stored = row;
      check.exact_match = false;
      for (const auto& sol : solved.solutions) {
        if (row_matches(row, sol)) {
          check.solver = sol;
          check.exact_match = true;
          break;
        }
      }
      if (!check.exact_match && !solved.solutions.empty()) check.solver = solved.solutions.front();
      check.residual = residual_torus_exact({{row.r_sq, row.p, "r"}, {row.s_sq, row.q, "s"}},
                                            params.n, /*lagrangian=*/true);
      out.all_rows_match_solver &= check.exact_match;
      out.lagrangian_rows.push_back(std::move(check));
    }
    return out;
  }

  for (const StoredRow& row : stored_rows(id)) {
    FamilyParams params{Family::CpnHypersurface, 5, row.p, row.q};
    SolveOutput criterion = solve_hypersurface_radii(params);
    SolveOutput variant = solve_hypersurface_variant(params);

    HypersurfaceRowCheck check;
    check.stored = row;
    check.norm_b_sq = hypersurface_norm_b_sq(row.p, row.q, row.r_sq, row.s_sq);
    check.criterion_residual = check.norm_b_sq - QuadSurd(Rational(2 * (params.n + 2)));
    check.variant_value = hypersurface_norm_b_sq(row.q, row.p, row.r_sq, row.s_sq);
    for (const auto& sol : criterion.solutions)
      check.matches_criterion_solver |= row_matches(row, sol);
    for (const auto& sol : variant.solutions) check.matches_variant_solver |= row_matches(row, sol);
    check.criterion_solution = paired_solution(row, criterion.solutions);
    out.all_rows_match_solver &= check.matches_criterion_solver;
    out.hypersurface_rows.push_back(std::move(check));
  }
  return out;
}

}  // namespace bht
