#pragma once

#include "bht/cpn_geometry.hpp"
#include "bht/solvers.hpp"
#include "bht/tables.hpp"

#include <cstdint>
#include <set>

namespace bht {

enum class Verdict { Biharmonic, NotBiharmonic, Inconclusive };
enum class Oracle { Algebraic, SphereFD, CpnFD };
enum class Endorsement { StoredTable, CriterionEquation, Both, Neither };

std::string to_string(Verdict v);
std::string to_string(Oracle o);
std::string to_string(Endorsement e);
std::optional<Oracle> oracle_from_string(const std::string& name);

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  int samples = 10;
  std::uint64_t seed = 12345;
  Real pass_tol = 1e-4L;
  Real fail_tol = 1e-2L;
  Real parallel_h_tol = 1e-6L;
  FdConfig fd;
};

// A family member with concrete (possibly inexact) squared radii; the
// verification surfaces accept arbitrary radii, not just solver output.
struct FamilyInstance {
  FamilyParams params;
  std::vector<std::pair<Real, int>> squared_radii;  // (value, multiplicity)

  std::vector<Real> expanded() const;   // squared radii by multiplicity
  std::vector<Real> radii() const;      // a_i = sqrt(b_i)
};

FamilyInstance instance_of(const RadiiSolution& solution);

/// Ambient-sphere chart of the instance (the lift, for the CP^n families).
Chart sphere_chart_of(const FamilyInstance& instance);

struct OracleReport {
  Oracle oracle = Oracle::Algebraic;
  int samples = 0;
  std::uint64_t seed = 0;
  Real max_residual = 0;
  Real max_tangential = 0;   // FD oracles only
  Real max_normal = 0;
  Real max_consistency = 0;  // step-halving agreement
  Real pass_tol = 0, fail_tol = 0;
  Verdict verdict = Verdict::Inconclusive;
};

struct CompositeReport {
  FamilyInstance instance;
  std::vector<OracleReport> oracles;
  Verdict verdict = Verdict::Inconclusive;
};

struct CriterionResidual {
  std::vector<Real> components;
  Real max_abs = 0;
  Real parallel_h = 0;  // measured |nabla^perp H| backing the reduced form
};

// Residual of the reduced algebraic criterion for the instance's family.
// Refuses (precondition_error) unless the measured parallel-mean-curvature
// defect is below opts.parallel_h_tol, since the reduced forms assume it.
CriterionResidual criterion_residual(const FamilyInstance& instance,
                                     const VerifyOptions& opts = {});

/// One oracle on one instance. CpnFD is inapplicable to the sphere-torus family.
OracleReport run_oracle(const FamilyInstance& instance, Oracle oracle,
                        const VerifyOptions& opts = {});

/// Composite verdict: Biharmonic only if every requested oracle passes.
CompositeReport verify_solution(const FamilyInstance& instance, const std::set<Oracle>& oracles,
                                const VerifyOptions& opts = {});

struct RowAdjudication {
  StoredRow stored;
  Real criterion_residual_stored = 0;  // ||B~||^2 - 2(n+2) at the stored radii
  Real variant_residual_stored = 0;    // variant-equation value - 2(n+1)
  bool matches_criterion_solver = false;
  bool matches_variant_solver = false;
  RadiiSolution criterion_solution;    // solver output paired by r/s ordering
  Real criterion_residual_solved = 0;
  OracleReport oracle_stored;      // CP^n FD oracle at the stored radii
  OracleReport oracle_solved;      // same oracle at the criterion radii
  Endorsement endorsed = Endorsement::Neither;
};

struct AdjudicationReport {
  int n = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  bool has_stored_rows = false;
  std::vector<RowAdjudication> rows;
  // equation-only mode (no stored table for this n): solver output + oracle
  std::vector<std::pair<RadiiSolution, OracleReport>> equation_candidates;
};

// Adjudicates the stored hypersurface table against the criterion equation:
// both candidate radii sets are fed to the CP^n finite-difference oracle and
// the endorsement records which of them it certifies. The oracle verdicts,
// not the algebraic residuals, decide.
AdjudicationReport adjudicate_hypersurface_table(int n, const VerifyOptions& opts = {});

struct StabilityReport {
  FamilyParams params;
  Branch branch = Branch::Minus;
  std::vector<std::pair<Real, int>> squared_radii;
  std::optional<QuadSurd> closed_form_exact;
  Real closed_form_value = 0;
  Real numeric_value = 0;
  Real relative_agreement = 0;
  Real h_norm_sq_residual = 0;  // | ||H||^2 - (d - (n+1)^2) |
  std::string sign_verdict;
};

// Second variation of the bienergy in the H direction, per unit volume:
// closed form -4([d-(n+1)^2]^2 + 3[2(n+1)^3 + sum 1/b_i^2 - 3(n+1)d])
// against the frame evaluation -4(||H||^4 + 3 <JE,H> <B,H> <JE,H>) on the
// lifted torus. Requires the radii to satisfy the Lagrangian condition to
// 1e-10.
StabilityReport stability_report(const RadiiSolution& solution, const VerifyOptions& opts = {});
StabilityReport stability_report_numeric(const std::vector<std::pair<Real, int>>& squared_radii,
                                         int n, const VerifyOptions& opts = {});

}  // namespace bht
