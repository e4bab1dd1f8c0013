#include "bht/verifier.hpp"

#include <doctest.h>

using namespace bht;

namespace {

FamilyInstance torus_instance(Family family, int n, int p, int q,
                              std::vector<std::pair<Real, int>> b) {
  FamilyInstance inst;
  inst.params = {family, n, p, q};
  inst.squared_radii = std::move(b);
  return inst;
}

}  // namespace

TEST_SUITE("verifier") {
  TEST_CASE("criterion residuals per family") {
    VerifyOptions opts;

    // flat torus solution: residual vanishes
    auto flat = torus_instance(Family::SphereFlatTorus, 2, 1, 2, {{0.5L, 1}, {0.25L, 2}});
    CHECK(criterion_residual(flat, opts).max_abs < 1e-15L);

    // hypersurface at criterion radii: ||B~||^2 - 2 - 2(n+1) = 0
    auto solved = solve_hypersurface_radii({Family::CpnHypersurface, 5, 2, 2}).solutions[0];
    CHECK(criterion_residual(instance_of(solved), opts).max_abs < 1e-9L);

    // hypersurface at the stored (2,2) row: residual is exactly -2
    Real r_sq = QuadSurd::normalized(Rational(11, 22), Rational(1, 22), 11).to_real();
    auto stored = torus_instance(Family::CpnHypersurface, 5, 2, 2,
                                 {{r_sq, 1}, {1 - r_sq, 1}});
    CriterionResidual res = criterion_residual(stored, opts);
    CHECK(res.components.size() == 1);
    CHECK(res.components[0] == doctest::Approx(-2.0).epsilon(1e-9));

    // precondition is measured, and an absurd tolerance refuses
    CHECK(res.parallel_h < 1e-6L);
    VerifyOptions strict = opts;
    strict.parallel_h_tol = 1e-30L;
    CHECK_THROWS_AS(criterion_residual(flat, strict), precondition_error);
  }

  TEST_CASE("oracle reports and composite verdicts") {
    VerifyOptions opts;
    opts.samples = 4;

    auto flat = torus_instance(Family::SphereFlatTorus, 2, 1, 2, {{0.5L, 1}, {0.25L, 2}});
    CompositeReport rep = verify_solution(flat, {Oracle::Algebraic, Oracle::SphereFD}, opts);
    CHECK(rep.verdict == Verdict::Biharmonic);
    REQUIRE(rep.oracles.size() == 2);
    for (const auto& o : rep.oracles) CHECK(o.verdict == Verdict::Biharmonic);

    // perturbed radii flip the verdict
    Real b1 = 0.5L * 1.05L, rest = (1 - b1) / 2;
    auto bad = torus_instance(Family::SphereFlatTorus, 2, 1, 2, {{b1, 1}, {rest, 2}});
    CHECK(verify_solution(bad, {Oracle::Algebraic, Oracle::SphereFD}, opts).verdict ==
          Verdict::NotBiharmonic);

    // stored lagrangian row with the algebraic and projective oracles
    auto sol = solve_lagrangian_radii({Family::CpnLagrangianTorus, 4, 1, 4}).solutions[1];
    opts.samples = 2;
    CompositeReport lag = verify_solution(instance_of(sol), {Oracle::Algebraic, Oracle::CpnFD},
                                          opts);
    CHECK(lag.verdict == Verdict::Biharmonic);

    // the lifted reduced criterion runs upstairs for projective families
    OracleReport lifted = run_oracle(instance_of(sol), Oracle::SphereFD, opts);
    CHECK(lifted.verdict == Verdict::Biharmonic);

    CHECK_THROWS_AS(run_oracle(flat, Oracle::CpnFD, opts), std::invalid_argument);
    CHECK_THROWS_AS(verify_solution(flat, {}, opts), std::invalid_argument);
  }

  TEST_CASE("oracle and algebra never contradict each other") {
    VerifyOptions opts;
    opts.samples = 2;
    std::vector<FamilyInstance> instances;
    for (const auto& sol : enumerate_solutions(Family::SphereFlatTorus, 4))
      instances.push_back(instance_of(sol));
    instances.push_back(
        torus_instance(Family::SphereFlatTorus, 2, 1, 2, {{0.53L, 1}, {0.235L, 2}}));
    for (const auto& inst : instances) {
      Real algebraic = criterion_residual(inst, opts).max_abs;
      Verdict fd = run_oracle(inst, Oracle::SphereFD, opts).verdict;
      if (algebraic < 1e-12L) CHECK(fd != Verdict::NotBiharmonic);
      if (algebraic > 1e-2L) CHECK(fd != Verdict::Biharmonic);
    }
  }

  TEST_CASE("hypersurface adjudication endorses the criterion equation") {
    VerifyOptions opts;
    opts.samples = 1;
    AdjudicationReport rep = adjudicate_hypersurface_table(5, opts);
    REQUIRE(rep.rows.size() == 5);
    for (const auto& row : rep.rows) {
      CHECK(std::abs(row.criterion_residual_stored) > 2 - 1e-6L);
      CHECK(std::abs(row.variant_residual_stored) < 1e-9L);
      CHECK(row.criterion_residual_solved < 1e-9L);
      CHECK(row.oracle_stored.verdict == Verdict::NotBiharmonic);
      CHECK(row.oracle_solved.verdict == Verdict::Biharmonic);
      CHECK(row.endorsed == Endorsement::CriterionEquation);
    }
  }

  TEST_CASE("adjudication without stored rows runs equation-only mode") {
    VerifyOptions opts;
    opts.samples = 1;
    AdjudicationReport rep = adjudicate_hypersurface_table(3, opts);
    CHECK(!rep.has_stored_rows);
    CHECK(rep.rows.empty());
    REQUIRE(rep.equation_candidates.size() == 4);  // (0,2) and (1,1), two branches each
    for (const auto& [sol, oracle] : rep.equation_candidates) {
      CHECK(sol.params.n == 3);
      CHECK(oracle.verdict == Verdict::Biharmonic);
    }
  }

  TEST_CASE("adjudication is deterministic for a fixed seed") {
    VerifyOptions opts;
    opts.samples = 1;
    opts.seed = 99;
    AdjudicationReport a = adjudicate_hypersurface_table(5, opts);
    AdjudicationReport b = adjudicate_hypersurface_table(5, opts);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].oracle_stored.max_residual == b.rows[i].oracle_stored.max_residual);
      CHECK(a.rows[i].oracle_solved.max_residual == b.rows[i].oracle_solved.max_residual);
    }
  }

  TEST_CASE("stability: exact closed form against the frame evaluation") {
    auto sol = solve_lagrangian_radii({Family::CpnLagrangianTorus, 4, 1, 4}).solutions[1];
    StabilityReport rep = stability_report(sol);
    REQUIRE(rep.closed_form_exact.has_value());
    CHECK(*rep.closed_form_exact == QuadSurd::normalized(-2122, 246, 65));
    CHECK(rep.closed_form_value == doctest::Approx(-138.6846).epsilon(1e-4));
    CHECK(rep.relative_agreement < 1e-6L);
    CHECK(rep.numeric_value < 0);
    CHECK(rep.sign_verdict == "unstable");
    CHECK(rep.h_norm_sq_residual < 1e-10L);

    // both branches at n = 2
    for (const auto& s : solve_lagrangian_radii({Family::CpnLagrangianTorus, 2, 1, 2}).solutions) {
      StabilityReport r = stability_report(s);
      CHECK(r.numeric_value < 0);
      CHECK(r.relative_agreement < 1e-6L);
    }

    // refuses radii that do not satisfy the Lagrangian condition
    CHECK_THROWS_AS(stability_report_numeric({{0.5L, 1}, {0.25L, 2}}, 2), std::invalid_argument);
  }
}
