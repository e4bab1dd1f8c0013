#include "bht/fd.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <stdexcept>

namespace bht {

namespace {

VecR shifted(const VecR& theta, int i, Real delta) {
  VecR t = theta;
  t(i) += delta;
  return t;
}

int packed_index(int i, int j, int m) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle
  return i * m - i * (i - 1) / 2 + (j - i);
}

}  // namespace

const VecR& FundamentalForms::second(int i, int j) const {
  return second_coord[static_cast<size_t>(packed_index(i, j, static_cast<int>(metric.rows())))];
}

const VecR& FundamentalForms::second_in_frame(int a, int b) const {
  return second_frame[static_cast<size_t>(packed_index(a, b, static_cast<int>(metric.rows())))];
}

namespace {

MatR chart_jacobian(const EmbeddedChart& chart, const VecR& theta, Real h) {
  MatR jac(chart.ambient_dim, chart.dim);
  for (int i = 0; i < chart.dim; ++i)
    jac.col(i) = (chart.eval(shifted(theta, i, h)) - chart.eval(shifted(theta, i, -h))) / (2 * h);
  return jac;
}

/// Second coordinate partials of the chart, packed i <= j.
std::vector<VecR> chart_second_partials(const EmbeddedChart& chart, const VecR& theta, Real h,
                                        const VecR& center) {
  const int m = chart.dim;
  std::vector<VecR> out(static_cast<size_t>(m * (m + 1) / 2));
  for (int i = 0; i < m; ++i) {
    out[static_cast<size_t>(packed_index(i, i, m))] =
        (chart.eval(shifted(theta, i, h)) - 2 * center + chart.eval(shifted(theta, i, -h))) /
        (h * h);
    for (int j = i + 1; j < m; ++j) {
      VecR pp = chart.eval(shifted(shifted(theta, i, h), j, h));
      VecR pm = chart.eval(shifted(shifted(theta, i, h), j, -h));
      VecR mp = chart.eval(shifted(shifted(theta, i, -h), j, h));
      VecR mm = chart.eval(shifted(shifted(theta, i, -h), j, -h));
      out[static_cast<size_t>(packed_index(i, j, m))] = (pp - pm - mp + mm) / (4 * h * h);
    }
  }
  return out;
}

}  // namespace

FundamentalForms fundamental_forms(const EmbeddedChart& chart, const VecR& theta,
                                   const FdConfig& cfg) {
  const int m = chart.dim;
  const Real h = cfg.chart_step;
  FundamentalForms f;
  f.theta = theta;
  f.point = chart.eval(theta);
  f.jacobian = chart_jacobian(chart, theta, h);
  f.metric = f.jacobian.transpose() * f.jacobian;

  Eigen::FullPivLU<MatR> lu(f.metric);
  if (!lu.isInvertible()) throw std::domain_error("fundamental_forms: degenerate chart point");
  f.metric_inv = lu.inverse();

  // orthonormal frame: Gram-Schmidt over jacobian columns in fixed order
  f.frame = MatR(chart.ambient_dim, m);
  MatR r_upper = MatR::Zero(m, m);
  for (int c = 0; c < m; ++c) {
    VecR v = f.jacobian.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < c; ++k) {
        Real coeff = f.frame.col(k).dot(v);
        r_upper(k, c) += coeff;
        v -= coeff * f.frame.col(k);
      }
    Real len = v.norm();
    if (len < 1e-12L) throw std::domain_error("fundamental_forms: degenerate chart point");
    r_upper(c, c) = len;
    f.frame.col(c) = v / len;
  }

  // second fundamental form: second partials projected onto the normal
  // space of M within the target manifold
  std::vector<VecR> partials = chart_second_partials(chart, theta, h, f.point);
  f.second_coord.resize(partials.size());
  for (size_t k = 0; k < partials.size(); ++k) {
    VecR v = chart.project(f.point, partials[k]);
    VecR coeffs = lu.solve(f.jacobian.transpose() * v);
    f.second_coord[k] = v - f.jacobian * coeffs;
  }

  f.mean_curvature = VecR::Zero(chart.ambient_dim);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Real w = f.metric_inv(i, j);
      if (w != 0) f.mean_curvature += w * f.second(i, j);
    }

  // frame version: B(E_a, E_b) with E = J R^{-1}
  MatR coeff = r_upper.inverse();
  f.second_frame.resize(partials.size());
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      VecR v = VecR::Zero(chart.ambient_dim);
      for (int i = 0; i < m; ++i) {
        if (coeff(i, a) == 0) continue;
        for (int j = 0; j < m; ++j) {
          Real w = coeff(i, a) * coeff(j, b);
          if (w != 0) v += w * f.second(i, j);
        }
      }
      f.second_frame[static_cast<size_t>(packed_index(a, b, m))] = v;
    }

  f.norm_b_sq = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      f.norm_b_sq += f.second_in_frame(a, b).squaredNorm() * (a == b ? 1 : 2);

  // principal curvatures for codimension one in the target
  if (chart.normal && m == chart.target_dim - 1) {
    VecR nu = chart.normal(theta);
    MatR shape(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) shape(a, b) = shape(b, a) = f.second_in_frame(a, b).dot(nu);
    Eigen::SelfAdjointEigenSolver<MatR> es(shape);
    f.shape_spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
  }
  return f;
}

// The hot path inside nested field stencils: fourth-order stencils keep
// both the rounding noise and the smooth truncation bias of H far below
// what the outer 1/step^2 amplification can surface.
VecR mean_curvature_at(const EmbeddedChart& chart, const VecR& theta, const FdConfig& cfg) {
  const int m = chart.dim;
  const Real h = cfg.chart_step;
  VecR x = chart.eval(theta);

  MatR jac(chart.ambient_dim, m);
  for (int i = 0; i < m; ++i)
    jac.col(i) = (chart.eval(shifted(theta, i, -2 * h)) - chart.eval(shifted(theta, i, 2 * h)) +
                  8 * (chart.eval(shifted(theta, i, h)) - chart.eval(shifted(theta, i, -h)))) /
                 (12 * h);
  MatR metric = jac.transpose() * jac;
  Eigen::LDLT<MatR> ldlt(metric);
  MatR metric_inv = ldlt.solve(MatR::Identity(m, m));

  Real scale = metric_inv.cwiseAbs().maxCoeff();
  VecR acc = VecR::Zero(chart.ambient_dim);
  auto cross = [&](int i, int j, Real step) {
    VecR pp = chart.eval(shifted(shifted(theta, i, step), j, step));
    VecR pm = chart.eval(shifted(shifted(theta, i, step), j, -step));
    VecR mp = chart.eval(shifted(shifted(theta, i, -step), j, step));
    VecR mm = chart.eval(shifted(shifted(theta, i, -step), j, -step));
    return ((pp - pm - mp + mm) / (4 * step * step)).eval();
  };
  for (int i = 0; i < m; ++i) {
    Real wii = metric_inv(i, i);
    if (std::abs(wii) > cfg.metric_zero_tol * scale) {
      VecR sii = (-(chart.eval(shifted(theta, i, 2 * h)) + chart.eval(shifted(theta, i, -2 * h))) +
                  16 * (chart.eval(shifted(theta, i, h)) + chart.eval(shifted(theta, i, -h))) -
                  30 * x) /
                 (12 * h * h);
      acc += wii * sii;
    }
    for (int j = i + 1; j < m; ++j) {
      Real w = 2 * metric_inv(i, j);
      if (std::abs(w) <= cfg.metric_zero_tol * scale) continue;
      // fourth order by Richardson over the second-order cross stencil
      acc += w * ((4 * cross(i, j, h / 2) - cross(i, j, h)) / 3);
    }
  }
  VecR v = chart.project(x, acc);
  VecR coeffs = ldlt.solve(jac.transpose() * v);
  return v - jac * coeffs;
}

namespace {

// H-field evaluations keyed by integer stencil offsets (in units of half the
// field step), so the two consistency passes share values exactly.
class FieldCache {
 public:
  FieldCache(const EmbeddedChart& chart, const VecR& base, Real half_step, const FdConfig& cfg)
      : chart_(chart), base_(base), half_step_(half_step), cfg_(cfg) {
    cfg_.chart_step = cfg.nested_chart_step;
  }

  const VecR& mean_curvature(const std::vector<int>& offsets) {
    auto it = h_cache_.find(offsets);
    if (it != h_cache_.end()) return it->second;
    return h_cache_.emplace(offsets, mean_curvature_at(chart_, point(offsets), cfg_)).first->second;
  }

  const VecR& chart_point(const std::vector<int>& offsets) {
    auto it = x_cache_.find(offsets);
    if (it != x_cache_.end()) return it->second;
    return x_cache_.emplace(offsets, chart_.eval(point(offsets))).first->second;
  }

  VecR point(const std::vector<int>& offsets) const {
    VecR t = base_;
    for (int i = 0; i < chart_.dim; ++i) t(i) += offsets[static_cast<size_t>(i)] * half_step_;
    return t;
  }

 private:
  const EmbeddedChart& chart_;
  VecR base_;
  Real half_step_;
  FdConfig cfg_;
  std::map<std::vector<int>, VecR> h_cache_;
  std::map<std::vector<int>, VecR> x_cache_;
};

// 5-point first derivative of the projected H field along direction `dir`,
// evaluated at integer offset `at`; `unit` is the stencil step in half-step
// units (2 for the full pass, 1 for the halved pass).
VecR covariant_h_derivative(FieldCache& cache, std::vector<int> at, int dir, int unit,
                            Real step) {
  auto off = [&](int mult) {
    std::vector<int> o = at;
    o[static_cast<size_t>(dir)] += mult * unit;
    return o;
  };
  return ((cache.mean_curvature(off(-2)) - cache.mean_curvature(off(2)) +
           8 * (cache.mean_curvature(off(1)) - cache.mean_curvature(off(-1)))) /
          (12 * step))
      .eval();
}

}  // namespace

BitensionResult bitension(const EmbeddedChart& chart, const VecR& theta, const FdConfig& cfg,
                          const CurvatureTerm& curvature_term) {
  const int m = chart.dim;
  FundamentalForms forms = fundamental_forms(chart, theta, cfg);
  const VecR& x0 = forms.point;

  // Christoffel symbols of the induced metric from chart-step differences
  std::vector<MatR> dg(static_cast<size_t>(m));
  {
    const Real h = cfg.chart_step;
    for (int l = 0; l < m; ++l) {
      MatR jp = chart_jacobian(chart, shifted(theta, l, h), h);
      MatR jm = chart_jacobian(chart, shifted(theta, l, -h), h);
      dg[static_cast<size_t>(l)] =
          (jp.transpose() * jp - jm.transpose() * jm) / (2 * h);
    }
  }
  // gamma_contracted[k] = g^{ij} Gamma^k_{ij}
  VecR gamma_contracted = VecR::Zero(m);
  for (int k = 0; k < m; ++k) {
    Real acc = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Real gij = forms.metric_inv(i, j);
        if (gij == 0) continue;
        Real gamma = 0;
        for (int l = 0; l < m; ++l)
          gamma += forms.metric_inv(k, l) *
                   (dg[static_cast<size_t>(i)](j, l) + dg[static_cast<size_t>(j)](i, l) -
                    dg[static_cast<size_t>(l)](i, j));
        acc += gij * 0.5L * gamma;
      }
    gamma_contracted(k) = acc;
  }

  const Real half = cfg.field_step / 2;
  FieldCache cache(chart, theta, half, cfg);
  const std::vector<int> origin(static_cast<size_t>(m), 0);

  Real scale = forms.metric_inv.cwiseAbs().maxCoeff();
  VecR tau2_pass[2];
  for (int pass = 0; pass < 2; ++pass) {
    const int unit = pass == 0 ? 2 : 1;  // full step, then half step
    const Real step = half * unit;

    // nabla_k H at the base point
    std::vector<VecR> w0(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k)
      w0[static_cast<size_t>(k)] =
          chart.project(x0, covariant_h_derivative(cache, origin, k, unit, step));

    // W_j as a field: projected derivative at shifted base points
    auto w_field = [&](int j, const std::vector<int>& at) {
      VecR d = covariant_h_derivative(cache, at, j, unit, step);
      return chart.project(cache.chart_point(at), d);
    };

    // The covariant Hessian of H is not symmetric in (i, j) for a curved
    // target (the antisymmetric part is the bundle curvature R(d_i, d_j)H),
    // so the trace runs over all ordered pairs; the symmetric weight g^{ij}
    // cancels the antisymmetric part exactly.
    VecR lap = VecR::Zero(chart.ambient_dim);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Real w = forms.metric_inv(i, j);
        if (std::abs(w) <= cfg.metric_zero_tol * scale) continue;
        auto off = [&](int mult) {
          std::vector<int> o = origin;
          o[static_cast<size_t>(i)] += mult * unit;
          return o;
        };
        VecR second = (w_field(j, off(-2)) - w_field(j, off(2)) +
                       8 * (w_field(j, off(1)) - w_field(j, off(-1)))) /
                      (12 * step);
        lap += w * chart.project(x0, second);
      }
    for (int k = 0; k < m; ++k) lap -= gamma_contracted(k) * w0[static_cast<size_t>(k)];

    tau2_pass[pass] = lap - curvature_term(forms);
  }

  // The halved pass trades truncation for differencing noise (~1/step^2);
  // the full-step value is reported and the halved one drives consistency.
  BitensionResult out;
  out.tau2 = tau2_pass[0];
  out.norm = out.tau2.norm();
  VecR tangential = forms.frame * (forms.frame.transpose() * out.tau2);
  out.tangential_norm = tangential.norm();
  out.normal_norm = (out.tau2 - tangential).norm();
  out.consistency = (tau2_pass[0] - tau2_pass[1]).norm();
  return out;
}

Real max_normal_connection(const EmbeddedChart& chart, const VecR& theta, const FdConfig& cfg) {
  const int m = chart.dim;
  VecR x0 = chart.eval(theta);
  MatR jac = chart_jacobian(chart, theta, cfg.chart_step);
  Eigen::LDLT<MatR> ldlt((jac.transpose() * jac).eval());

  const Real half = cfg.field_step / 2;
  FieldCache cache(chart, theta, half, cfg);
  const std::vector<int> origin(static_cast<size_t>(m), 0);

  Real worst = 0;
  for (int k = 0; k < m; ++k) {
    VecR w = chart.project(x0, covariant_h_derivative(cache, origin, k, 2, cfg.field_step));
    VecR coeffs = ldlt.solve(jac.transpose() * w);
    worst = std::max(worst, (w - jac * coeffs).norm());
  }
  return worst;
}

}  // namespace bht
