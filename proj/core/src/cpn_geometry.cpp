#include "bht/cpn_geometry.hpp"

#include "bht/sphere_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace bht {

namespace {

/// Best chart-tangent representative of the vertical direction i x, and the
/// size of its image under the submersion differential.
Real vertical_dpi_norm(const Chart& chart, const VecR& theta) {
  const Real h = 1e-3L;
  MatR jac(chart.ambient_dim, chart.dim);
  for (int i = 0; i < chart.dim; ++i) {
    VecR tp = theta, tm = theta, tp2 = theta, tm2 = theta;
    tp(i) += h;
    tm(i) -= h;
    tp2(i) += 2 * h;
    tm2(i) -= 2 * h;
    jac.col(i) =
        (chart.eval(tm2) - chart.eval(tp2) + 8 * (chart.eval(tp) - chart.eval(tm))) / (12 * h);
  }
  VecR x = chart.eval(theta);
  VecR vertical = ambient_complex_structure(x);
  VecR coeff = (jac.transpose() * jac).ldlt().solve(jac.transpose() * vertical);
  VecR rep = jac * coeff;
  if (rep.norm() < 1e-6L) return 1;  // no vertical component in the tangent at all
  rep /= rep.norm();
  CVec z = realvec_to_complex(x);
  CVec v = realvec_to_complex(rep);
  // remove the radial part before applying the differential
  Real radial = (z.adjoint() * v).value().real();
  HopfSplit split = hopf_differential(z, (v - radial * z).eval());
  return std::sqrt(std::max<Real>(0, cpn_inner(split.dpi, split.dpi)));
}

CpnChart torus_quotient(const Chart& sphere_chart) {
  const int n = sphere_chart.n;
  std::vector<Real> radii = sphere_chart.radii;
  CpnChart out;
  out.n = n;
  out.dim = n;
  out.ambient_dim = (n + 1) * (n + 1);
  out.lift = [radii, n](const VecR& sigma) {
    CVec z(n + 1);
    for (int k = 0; k < n; ++k)
      z(k) = std::polar(radii[static_cast<size_t>(k)], static_cast<Real>(sigma(k)));
    z(n) = radii[static_cast<size_t>(n)];
    return z;
  };
  out.eval = [lift = out.lift](const VecR& sigma) {
    CVec z = lift(sigma);
    return flatten_hermitian(z * z.adjoint());
  };
  out.box.assign(sphere_chart.box.begin(), sphere_chart.box.end() - 1);
  return out;
}

CpnChart hypersurface_quotient(const Chart& sphere_chart) {
  const int n = sphere_chart.n, p = sphere_chart.p, q = sphere_chart.q;
  const Real r = sphere_chart.radii[0], s = sphere_chart.radii[1];
  Chart section = hypersurface_fiber_chart(n, p, q, r, s);
  CpnChart out;
  out.n = n;
  out.dim = 2 * n - 1;
  out.ambient_dim = (n + 1) * (n + 1);
  out.lift = [section](const VecR& sigma) {
    VecR full(sigma.size() + 1);
    full << sigma, 0.0L;
    return realvec_to_complex(section.eval(full));
  };
  out.eval = [lift = out.lift](const VecR& sigma) {
    CVec z = lift(sigma);
    return flatten_hermitian(z * z.adjoint());
  };
  out.box.assign(section.box.begin(), section.box.end() - 1);
  return out;
}

}  // namespace

CpnChart quotient_chart(const Chart& sphere_chart) {
  // fiber closure: the vertical direction must be tangent to the chart image
  VecR probe(sphere_chart.dim);
  for (int i = 0; i < sphere_chart.dim; ++i) {
    auto [lo, hi] = sphere_chart.box[static_cast<size_t>(i)];
    probe(i) = lo + 0.4L * (hi - lo);
  }
  Real leak = vertical_dpi_norm(sphere_chart, probe);
  if (leak > 1e-10L)
    throw fiber_closure_error("quotient_chart: chart is not fiber-closed (|dpi(vertical)| = " +
                              std::to_string(static_cast<double>(leak)) + ")");

  if (sphere_chart.kind == "flat-torus") return torus_quotient(sphere_chart);
  if (sphere_chart.kind == "hypersurface-product" || sphere_chart.kind == "hypersurface-fiber")
    return hypersurface_quotient(sphere_chart);
  throw std::invalid_argument("quotient_chart: unsupported chart kind " + sphere_chart.kind);
}

EmbeddedChart embed_in_cpn(const CpnChart& chart) {
  const int rows = chart.n + 1;
  EmbeddedChart out;
  out.dim = chart.dim;
  out.target_dim = 2 * chart.n;
  out.ambient_dim = chart.ambient_dim;
  out.eval = chart.eval;
  out.project = [rows](const VecR& x, const VecR& v) {
    CMat P = unflatten_hermitian(x, rows);
    CMat V = unflatten_hermitian(v, rows);
    return flatten_hermitian(projector_tangent_projection(P, V));
  };
  return out;
}

FundamentalForms cpn_fundamental_forms(const CpnChart& chart, const VecR& sigma,
                                       const FdConfig& cfg) {
  return fundamental_forms(embed_in_cpn(chart), sigma, cfg);
}

BitensionResult bitension_cpn(const CpnChart& chart, const VecR& sigma, const FdConfig& cfg) {
  const int rows = chart.n + 1;
  auto curvature = [rows](const FundamentalForms& f) {
    CMat P = unflatten_hermitian(f.point, rows);
    CMat H = unflatten_hermitian(f.mean_curvature, rows);
    CMat acc = CMat::Zero(rows, rows);
    for (int a = 0; a < f.frame.cols(); ++a) {
      CMat e = unflatten_hermitian(f.frame.col(a), rows);
      acc += fs_curvature(P, e, H, e);
    }
    return flatten_hermitian(acc);
  };
  return bitension(embed_in_cpn(chart), sigma, cfg, curvature);
}

Real cpn_parallel_mean_curvature_check(const CpnChart& chart, const VecR& sigma,
                                       const FdConfig& cfg) {
  return max_normal_connection(embed_in_cpn(chart), sigma, cfg);
}

CurvatureTraceCheck curvature_trace_check(const CpnChart& chart, const VecR& sigma,
                                          const FdConfig& cfg) {
  const int rows = chart.n + 1;
  FundamentalForms f = cpn_fundamental_forms(chart, sigma, cfg);
  CMat P = unflatten_hermitian(f.point, rows);
  CMat H = unflatten_hermitian(f.mean_curvature, rows);
  CMat acc = CMat::Zero(rows, rows);
  for (int a = 0; a < f.frame.cols(); ++a) {
    CMat e = unflatten_hermitian(f.frame.col(a), rows);
    acc += fs_curvature(P, e, H, e);
  }
  CurvatureTraceCheck out;
  out.trace_norm = std::sqrt(cpn_inner(acc, acc));
  out.h_norm = std::sqrt(cpn_inner(H, H));
  auto norm_of = [&](const CMat& M) { return std::sqrt(cpn_inner(M, M)); };
  out.residual_hypersurface = norm_of(acc + 2.0L * (chart.n + 1) * H);
  out.residual_lagrangian = norm_of(acc + static_cast<Real>(chart.n + 3) * H);
  return out;
}

namespace {

/// sigma coordinates of the quotient point under pi(chart(theta)).
VecR downstairs_coordinates(const Chart& sphere_chart, const VecR& theta) {
  if (sphere_chart.kind == "flat-torus") {
    const int n = sphere_chart.n;
    VecR sigma(n);
    for (int i = 0; i < n; ++i) sigma(i) = theta(i) - theta(n);
    return sigma;
  }
  if (sphere_chart.kind == "hypersurface-fiber") return theta.head(theta.size() - 1);
  throw std::invalid_argument("lift_identities_check: need a fiber-adapted chart");
}

}  // namespace

LiftIdentityReport lift_identities_check(const Chart& sphere_chart, const VecR& theta,
                                         const FdConfig& cfg) {
  const bool torus = sphere_chart.kind == "flat-torus";
  const int n = sphere_chart.n;
  const int rows = n + 1;

  CpnChart qchart = quotient_chart(sphere_chart);
  VecR sigma = downstairs_coordinates(sphere_chart, theta);

  FundamentalForms up = sphere_fundamental_forms(sphere_chart, theta, cfg);
  FundamentalForms down = cpn_fundamental_forms(qchart, sigma, cfg);

  LiftIdentityReport out;
  CVec z = realvec_to_complex(up.point);
  CVec h_up = realvec_to_complex(up.mean_curvature);
  CMat dpi_h = h_up * z.adjoint() + z * h_up.adjoint();
  CMat h_down = unflatten_hermitian(down.mean_curvature, rows);
  CMat diff = dpi_h - h_down;
  out.submersion_residual = std::sqrt(cpn_inner(diff, diff));

  if (!torus) {
    out.norm_b_relation_residual = std::abs(down.norm_b_sq - (up.norm_b_sq - 2.0L));
    return out;
  }

  // Frame {nu, f_1..f_n} adapted to the fiber: nu = i x is chart-tangent.
  const int m = sphere_chart.dim;
  VecR nu = ambient_complex_structure(up.point);
  MatR adapted(up.point.size(), m);
  adapted.col(0) = nu;
  int col = 1;
  for (int c = 0; c < m && col < m; ++c) {
    VecR v = up.jacobian.col(c);
    for (int k = 0; k < col; ++k) v -= adapted.col(k).dot(v) * adapted.col(k);
    if (v.norm() < 1e-8L) continue;
    adapted.col(col++) = v / v.norm();
  }
  if (col != m) throw std::logic_error("lift_identities_check: frame completion failed");

  // chart-coordinate components of each adapted frame vector
  Eigen::LDLT<MatR> metric(up.metric);
  MatR comps(m, m);
  for (int a = 0; a < m; ++a)
    comps.col(a) = metric.solve(up.jacobian.transpose() * adapted.col(a));
  auto b_of = [&](int a, int b) {
    VecR acc = VecR::Zero(up.point.size());
    for (int i = 0; i < m; ++i) {
      if (comps(i, a) == 0) continue;
      for (int j = 0; j < m; ++j) acc += comps(i, a) * comps(j, b) * up.second(i, j);
    }
    return acc;
  };

  const VecR& h = up.mean_curvature;
  VecR b_nu_nu = b_of(0, 0);
  out.vertical_b_norm = b_nu_nu.norm();

  VecR corrections = b_nu_nu.dot(h) * b_nu_nu;
  for (int i = 1; i < m; ++i) {
    VecR b = b_of(i, 0);
    corrections += 2 * b.dot(h) * b;
  }
  out.correction_residual = (corrections - 2 * h).norm();

  VecR full = VecR::Zero(up.point.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      VecR v = b_of(a, b);
      full += v.dot(h) * v;
    }
  out.full_contraction_residual = (full - static_cast<Real>(n + 5) * h).norm();
  return out;
}

}  // namespace bht
