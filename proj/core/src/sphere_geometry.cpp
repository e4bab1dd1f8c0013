#include "bht/sphere_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace bht {

EmbeddedChart embed_in_sphere(const Chart& chart) {
  EmbeddedChart out;
  out.dim = chart.dim;
  out.target_dim = chart.ambient_dim - 1;
  out.ambient_dim = chart.ambient_dim;
  out.eval = chart.eval;
  out.project = [](const VecR& x, const VecR& v) { return (v - v.dot(x) * x).eval(); };
  if (chart.normal) out.normal = chart.normal;
  return out;
}

FundamentalForms sphere_fundamental_forms(const Chart& chart, const VecR& theta,
                                          const FdConfig& cfg) {
  return fundamental_forms(embed_in_sphere(chart), theta, cfg);
}

BitensionResult bitension_sphere(const Chart& chart, const VecR& theta, const FdConfig& cfg) {
  const int m = chart.dim;
  return bitension(embed_in_sphere(chart), theta, cfg, [m](const FundamentalForms& f) {
    return (-static_cast<Real>(m) * f.mean_curvature).eval();
  });
}

Real parallel_mean_curvature_check(const Chart& chart, const VecR& theta, const FdConfig& cfg) {
  return max_normal_connection(embed_in_sphere(chart), theta, cfg);
}

AnalyticTorusForms analytic_flat_torus_forms(const std::vector<Real>& radii, const VecR& theta) {
  const int m = static_cast<int>(radii.size());
  const int n = m - 1;
  if (theta.size() != m) throw std::invalid_argument("analytic_flat_torus_forms: angle count");
  Real sum = 0, d = 0;
  for (Real a : radii) {
    if (a <= 0) throw std::invalid_argument("analytic_flat_torus_forms: nonpositive radius");
    sum += a * a;
    d += 1 / (a * a);
  }
  if (std::abs(sum - 1.0L) > 1e-12L)
    throw std::invalid_argument("analytic_flat_torus_forms: radii off the unit sphere");

  AnalyticTorusForms f;
  const int dim = 2 * m;
  f.point = VecR::Zero(dim);
  std::vector<VecR> units(static_cast<size_t>(m));
  f.tangent_frame = MatR::Zero(dim, m);
  for (int i = 0; i < m; ++i) {
    VecR xi = VecR::Zero(dim);
    xi(2 * i) = std::cos(theta(i));
    xi(2 * i + 1) = std::sin(theta(i));
    units[static_cast<size_t>(i)] = xi;
    f.point += radii[static_cast<size_t>(i)] * xi;
    // f_i = J x_i
    f.tangent_frame(2 * i, i) = -std::sin(theta(i));
    f.tangent_frame(2 * i + 1, i) = std::cos(theta(i));
  }

  f.mean_curvature = VecR::Zero(dim);
  f.contraction = VecR::Zero(dim);
  f.contraction_identity = VecR::Zero(dim);
  f.diagonal_b.resize(static_cast<size_t>(m));
  f.norm_b_sq = 0;
  for (int i = 0; i < m; ++i) {
    Real a = radii[static_cast<size_t>(i)];
    const VecR& xi = units[static_cast<size_t>(i)];
    f.diagonal_b[static_cast<size_t>(i)] = f.point - xi / a;
    f.norm_b_sq += 1 / (a * a) - 1;
    f.mean_curvature += ((n + 1) * a - 1 / a) * xi;
  }
  for (int i = 0; i < m; ++i) {
    const VecR& b = f.diagonal_b[static_cast<size_t>(i)];
    f.contraction += b.dot(f.mean_curvature) * b;
    Real a = radii[static_cast<size_t>(i)];
    f.contraction_identity += (a * d - 1 / (a * a * a)) * units[static_cast<size_t>(i)];
  }
  f.contraction_identity -= static_cast<Real>(n + 1) * f.mean_curvature;
  return f;
}

}  // namespace bht
