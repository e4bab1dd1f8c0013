#include "bht/verifier.hpp"

#include "bht/sphere_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace bht {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Biharmonic: return "biharmonic";
    case Verdict::NotBiharmonic: return "not-biharmonic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Oracle o) {
  switch (o) {
    case Oracle::Algebraic: return "algebraic";
    case Oracle::SphereFD: return "fd-sphere";
    case Oracle::CpnFD: return "fd-cpn";
  }
  return "?";
}

std::string to_string(Endorsement e) {
  switch (e) {
    case Endorsement::StoredTable: return "stored-table";
    case Endorsement::CriterionEquation: return "criterion-equation";
    case Endorsement::Both: return "both";
    case Endorsement::Neither: return "neither";
  }
  return "?";
}

std::optional<Oracle> oracle_from_string(const std::string& name) {
  if (name == "algebraic") return Oracle::Algebraic;
  if (name == "fd-sphere") return Oracle::SphereFD;
  if (name == "fd-cpn") return Oracle::CpnFD;
  return std::nullopt;
}

std::vector<Real> FamilyInstance::expanded() const {
  std::vector<Real> out;
  for (auto [b, mult] : squared_radii)
    for (int i = 0; i < mult; ++i) out.push_back(b);
  return out;
}

std::vector<Real> FamilyInstance::radii() const {
  std::vector<Real> out = expanded();
  for (Real& b : out) b = std::sqrt(b);
  return out;
}

FamilyInstance instance_of(const RadiiSolution& solution) {
  FamilyInstance inst;
  inst.params = solution.params;
  for (const auto& e : solution.squared_radii)
    inst.squared_radii.push_back({e.value.to_real(), e.multiplicity});
  return inst;
}

Chart sphere_chart_of(const FamilyInstance& instance) {
  if (instance.params.family == Family::CpnHypersurface) {
    if (instance.squared_radii.size() != 2)
      throw std::invalid_argument("hypersurface instance needs (r^2, s^2)");
    Real r = std::sqrt(instance.squared_radii[0].first);
    Real s = std::sqrt(instance.squared_radii[1].first);
    return clifford_hypersurface_chart(instance.params.n, instance.params.p, instance.params.q, r,
                                       s);
  }
  return flat_torus_chart(instance.radii());
}

namespace {

// A pass is only trusted if the step-halving check converged; a failure is
// trusted once the measured residual dominates its own differencing
// uncertainty.
Verdict verdict_from(Real residual, Real consistency, const VerifyOptions& opts) {
  if (residual < opts.pass_tol)
    return consistency <= 10 * opts.pass_tol ? Verdict::Biharmonic : Verdict::Inconclusive;
  if (residual > opts.fail_tol && consistency < residual / 2) return Verdict::NotBiharmonic;
  return Verdict::Inconclusive;
}

std::vector<VecR> sample_points(const std::vector<std::pair<Real, Real>>& box, int dim,
                                int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VecR> pts;
  for (int s = 0; s < samples; ++s) {
    VecR theta(dim);
    for (int i = 0; i < dim; ++i) {
      auto [lo, hi] = box[static_cast<size_t>(i)];
      theta(i) = lo + (hi - lo) * uniform01(rng);
    }
    pts.push_back(std::move(theta));
  }
  return pts;
}

/// Evaluate per-point results concurrently, reduced in point order.
template <typename Fn>
std::vector<BitensionResult> map_points(const std::vector<VecR>& pts, Fn&& fn) {
  std::vector<std::future<BitensionResult>> futures;
  futures.reserve(pts.size());
  for (const VecR& p : pts)
    futures.push_back(std::async(std::launch::async, [&fn, p] { return fn(p); }));
  std::vector<BitensionResult> out;
  out.reserve(pts.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

OracleReport reduce_fd_report(Oracle oracle, const std::vector<BitensionResult>& results,
                              const VerifyOptions& opts) {
  OracleReport rep;
  rep.oracle = oracle;
  rep.samples = static_cast<int>(results.size());
  rep.seed = opts.seed;
  rep.pass_tol = opts.pass_tol;
  rep.fail_tol = opts.fail_tol;
  for (const auto& r : results) {
    rep.max_residual = std::max(rep.max_residual, r.norm);
    rep.max_tangential = std::max(rep.max_tangential, r.tangential_norm);
    rep.max_normal = std::max(rep.max_normal, r.normal_norm);
    rep.max_consistency = std::max(rep.max_consistency, r.consistency);
  }
  rep.verdict = verdict_from(rep.max_residual, rep.max_consistency, opts);
  return rep;
}

/// Lifted reduced-criterion residual from measured fundamental forms:
/// full contraction minus (n+5) H for tori, ||B~||^2 - 2(n+2) for the
/// hypersurface.
Real lifted_criterion_residual(const FamilyInstance& instance, const FundamentalForms& f) {
  const int n = instance.params.n;
  if (instance.params.family == Family::CpnHypersurface)
    return std::abs(f.norm_b_sq - 2.0L * (n + 2));
  const int m = static_cast<int>(f.metric.rows());
  VecR acc = VecR::Zero(f.point.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const VecR& bab = f.second_in_frame(a, b);
      acc += bab.dot(f.mean_curvature) * bab;
    }
  Real constant = instance.params.family == Family::CpnLagrangianTorus
                      ? static_cast<Real>(n + 5)
                      : static_cast<Real>(m);
  return (acc - constant * f.mean_curvature).norm();
}

}  // namespace

CriterionResidual criterion_residual(const FamilyInstance& instance, const VerifyOptions& opts) {
  instance.params.require_valid();
  Chart chart = sphere_chart_of(instance);

  CriterionResidual out;
  auto pts = sample_points(chart.box, chart.dim, 2, opts.seed);
  for (const VecR& theta : pts)
    out.parallel_h = std::max(out.parallel_h, parallel_mean_curvature_check(chart, theta, opts.fd));
  if (out.parallel_h > opts.parallel_h_tol)
    throw precondition_error(
        "criterion_residual: mean curvature is not parallel (|nabla_perp H| = " +
        std::to_string(static_cast<double>(out.parallel_h)) + "); reduced criterion inapplicable");

  const int n = instance.params.n;
  switch (instance.params.family) {
    case Family::SphereFlatTorus:
      out.components = residual_flat_torus(instance.expanded(), n);
      break;
    case Family::CpnLagrangianTorus:
      out.components = residual_lagrangian(instance.expanded(), n);
      break;
    case Family::CpnHypersurface: {
      Real r_sq = instance.squared_radii[0].first, s_sq = instance.squared_radii[1].first;
      Real norm_b =
          (2 * instance.params.p + 1) * s_sq / r_sq + (2 * instance.params.q + 1) * r_sq / s_sq;
      out.components = {norm_b - 2 - 2.0L * (n + 1)};
      break;
    }
  }
  for (Real c : out.components) out.max_abs = std::max(out.max_abs, std::abs(c));
  return out;
}

OracleReport run_oracle(const FamilyInstance& instance, Oracle oracle, const VerifyOptions& opts) {
  instance.params.require_valid();
  if (oracle == Oracle::Algebraic) {
    CriterionResidual res = criterion_residual(instance, opts);
    OracleReport rep;
    rep.oracle = oracle;
    rep.samples = 0;
    rep.seed = opts.seed;
    rep.pass_tol = opts.pass_tol;
    rep.fail_tol = opts.fail_tol;
    rep.max_residual = res.max_abs;
    rep.verdict = verdict_from(res.max_abs, 0, opts);
    return rep;
  }

  if (oracle == Oracle::CpnFD) {
    if (instance.params.family == Family::SphereFlatTorus)
      throw std::invalid_argument("fd-cpn oracle is inapplicable to the sphere-torus family");
    CpnChart qchart = quotient_chart(sphere_chart_of(instance));
    auto pts = sample_points(qchart.box, qchart.dim, opts.samples, opts.seed);
    auto results = map_points(
        pts, [&](const VecR& sigma) { return bitension_cpn(qchart, sigma, opts.fd); });
    return reduce_fd_report(oracle, results, opts);
  }

  // SphereFD
  Chart chart = sphere_chart_of(instance);
  auto pts = sample_points(chart.box, chart.dim, opts.samples, opts.seed);
  if (instance.params.family == Family::SphereFlatTorus) {
    auto results =
        map_points(pts, [&](const VecR& theta) { return bitension_sphere(chart, theta, opts.fd); });
    return reduce_fd_report(oracle, results, opts);
  }
  // Lifted reduced criterion measured upstairs from FD fundamental forms.
  auto results = map_points(pts, [&](const VecR& theta) {
    FundamentalForms f = sphere_fundamental_forms(chart, theta, opts.fd);
    BitensionResult r;
    r.norm = lifted_criterion_residual(instance, f);
    return r;
  });
  return reduce_fd_report(oracle, results, opts);
}

CompositeReport verify_solution(const FamilyInstance& instance, const std::set<Oracle>& oracles,
                                const VerifyOptions& opts) {
  if (oracles.empty()) throw std::invalid_argument("verify_solution: empty oracle set");
  CompositeReport out;
  out.instance = instance;
  bool any_fail = false, any_inconclusive = false;
  for (Oracle o : oracles) {
    OracleReport rep = run_oracle(instance, o, opts);
    any_fail |= rep.verdict == Verdict::NotBiharmonic;
    any_inconclusive |= rep.verdict == Verdict::Inconclusive;
    out.oracles.push_back(std::move(rep));
  }
  out.verdict = any_fail ? Verdict::NotBiharmonic
                         : (any_inconclusive ? Verdict::Inconclusive : Verdict::Biharmonic);
  return out;
}

namespace {

FamilyInstance hypersurface_instance(int n, int p, int q, const QuadSurd& r_sq,
                                     const QuadSurd& s_sq) {
  FamilyInstance inst;
  inst.params = {Family::CpnHypersurface, n, p, q};
  inst.squared_radii = {{r_sq.to_real(), 1}, {s_sq.to_real(), 1}};
  return inst;
}

Endorsement endorse(Verdict stored, Verdict solved) {
  bool s1 = stored == Verdict::Biharmonic, s2 = solved == Verdict::Biharmonic;
  if (s1 && s2) return Endorsement::Both;
  if (s1) return Endorsement::StoredTable;
  if (s2) return Endorsement::CriterionEquation;
  return Endorsement::Neither;
}

}  // namespace

AdjudicationReport adjudicate_hypersurface_table(int n, const VerifyOptions& opts) {
  AdjudicationReport out;
  out.n = n;
  out.seed = opts.seed;
  out.samples = opts.samples;
  out.has_stored_rows = n == 5;

  if (!out.has_stored_rows) {
    for (int p = 0; 2 * p <= n - 1; ++p) {
      FamilyParams params{Family::CpnHypersurface, n, p, n - 1 - p};
      for (const auto& sol : solve_hypersurface_radii(params).solutions) {
        FamilyInstance inst = instance_of(sol);
        out.equation_candidates.push_back({sol, run_oracle(inst, Oracle::CpnFD, opts)});
      }
    }
    return out;
  }

  TableReconstruction table = reconstruct_table(TableId::HypersurfaceN5);
  for (const auto& row : table.hypersurface_rows) {
    RowAdjudication adj;
    adj.stored = row.stored;
    adj.criterion_residual_stored = row.criterion_residual.to_real();
    adj.variant_residual_stored =
        (row.variant_value - QuadSurd(Rational(2 * (n + 1)))).to_real();
    adj.matches_criterion_solver = row.matches_criterion_solver;
    adj.matches_variant_solver = row.matches_variant_solver;
    adj.criterion_solution = row.criterion_solution;

    FamilyInstance solved = instance_of(adj.criterion_solution);
    adj.criterion_residual_solved = criterion_residual(solved, opts).max_abs;

    FamilyInstance stored_inst =
        hypersurface_instance(n, row.stored.p, row.stored.q, row.stored.r_sq, row.stored.s_sq);
    adj.oracle_stored = run_oracle(stored_inst, Oracle::CpnFD, opts);
    adj.oracle_solved = run_oracle(solved, Oracle::CpnFD, opts);
    adj.endorsed = endorse(adj.oracle_stored.verdict, adj.oracle_solved.verdict);
    out.rows.push_back(std::move(adj));
  }
  return out;
}

namespace {

StabilityReport stability_core(const std::vector<std::pair<Real, int>>& squared_radii, int n,
                               const VerifyOptions& opts) {
  std::vector<Real> expanded;
  for (auto [b, mult] : squared_radii)
    for (int i = 0; i < mult; ++i) expanded.push_back(b);

  auto res = residual_lagrangian(expanded, n);
  for (Real r : res)
    if (std::abs(r) > 1e-10L)
      throw std::invalid_argument(
          "stability_report: radii do not satisfy the Lagrangian condition");

  StabilityReport out;
  out.squared_radii = squared_radii;

  Real d = 0, d4 = 0, h_norm_sq = 0;
  for (Real b : expanded) {
    d += 1 / b;
    d4 += 1 / (b * b);
    Real a = std::sqrt(b);
    Real h = (n + 1) * a - 1 / a;
    h_norm_sq += h * h;
  }
  Real n1 = static_cast<Real>(n + 1);
  out.closed_form_value = -4 * ((d - n1 * n1) * (d - n1 * n1) +
                                3 * (2 * n1 * n1 * n1 + d4 - 3 * n1 * d));
  out.h_norm_sq_residual = std::abs(h_norm_sq - (d - n1 * n1));

  // frame evaluation at one seeded chart point of the lifted torus
  std::vector<Real> radii = expanded;
  for (Real& b : radii) b = std::sqrt(b);
  Chart chart = flat_torus_chart(radii);
  VecR theta = sample_points(chart.box, chart.dim, 1, opts.seed).front();
  FundamentalForms f = sphere_fundamental_forms(chart, theta, opts.fd);
  const int m = chart.dim;
  VecR jh(m);
  for (int a = 0; a < m; ++a)
    jh(a) = ambient_complex_structure(f.frame.col(a)).dot(f.mean_curvature);
  Real quadratic = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      quadratic += jh(a) * jh(b) * f.second_in_frame(a, b).dot(f.mean_curvature);
  Real h2 = f.mean_curvature.squaredNorm();
  out.numeric_value = -4 * (h2 * h2 + 3 * quadratic);

  out.relative_agreement = std::abs(out.numeric_value - out.closed_form_value) /
                           std::max<Real>(1, std::abs(out.closed_form_value));
  out.sign_verdict = out.numeric_value < 0 ? "unstable" : "not-negative";
  return out;
}

}  // namespace

StabilityReport stability_report_numeric(const std::vector<std::pair<Real, int>>& squared_radii,
                                         int n, const VerifyOptions& opts) {
  StabilityReport out = stability_core(squared_radii, n, opts);
  out.params = FamilyParams{Family::CpnLagrangianTorus, n, 0, 0};
  return out;
}

StabilityReport stability_report(const RadiiSolution& solution, const VerifyOptions& opts) {
  FamilyInstance inst = instance_of(solution);
  StabilityReport out = stability_core(inst.squared_radii, solution.params.n, opts);
  out.params = solution.params;
  out.branch = solution.branch;

  if (solution.exact) {
    const int n = solution.params.n;
    QuadSurd d = 0, d4 = 0;
    for (const auto& e : solution.squared_radii) {
      QuadSurd inv = QuadSurd(1) / e.value;
      QuadSurd mult(Rational(e.multiplicity));
      d = d + mult * inv;
      d4 = d4 + mult * inv * inv;
    }
    QuadSurd n1sq(Rational((n + 1) * (n + 1)));
    QuadSurd first = (d - n1sq) * (d - n1sq);
    QuadSurd second = QuadSurd(Rational(2LL * (n + 1) * (n + 1) * (n + 1))) + d4 -
                      QuadSurd(Rational(3 * (n + 1))) * d;
    out.closed_form_exact = QuadSurd(Rational(-4)) * (first + QuadSurd(3) * second);
    out.closed_form_value = out.closed_form_exact->to_real();
    out.relative_agreement = std::abs(out.numeric_value - out.closed_form_value) /
                             std::max<Real>(1, std::abs(out.closed_form_value));
  }
  return out;
}

}  // namespace bht
