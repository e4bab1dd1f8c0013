#include "bht/chart.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bht {

namespace {
constexpr Real kPi = std::numbers::pi_v<Real>;
}

Real uniform01(std::mt19937_64& rng) {
  return static_cast<Real>(rng() >> 11) * 0x1p-53L;
}

VecR sample_box_point(const Chart& chart, std::mt19937_64& rng) {
  VecR theta(chart.dim);
  for (int i = 0; i < chart.dim; ++i) {
    auto [lo, hi] = chart.box[static_cast<size_t>(i)];
    theta(i) = lo + (hi - lo) * uniform01(rng);
  }
  return theta;
}

VecR unit_sphere_point(const VecR& angles) {
  int k = static_cast<int>(angles.size());
  VecR x(k + 1);
  Real sines = 1;
  for (int i = 0; i < k; ++i) {
    x(i) = sines * std::cos(angles(i));
    sines *= std::sin(angles(i));
  }
  x(k) = sines;
  return x;
}

VecR ambient_complex_structure(const VecR& v) {
  VecR out(v.size());
  for (int k = 0; k + 1 < v.size(); k += 2) {
    out(k) = -v(k + 1);
    out(k + 1) = v(k);
  }
  return out;
}

Chart flat_torus_chart(const std::vector<Real>& radii) {
  const int m = static_cast<int>(radii.size());
  if (m < 1) throw std::invalid_argument("flat_torus_chart: empty radii");
  Real sum = 0;
  for (Real a : radii) {
    if (a <= 0) throw std::invalid_argument("flat_torus_chart: nonpositive radius");
    sum += a * a;
  }
  if (std::abs(sum - 1.0L) > 1e-12L)
    throw std::invalid_argument("flat_torus_chart: radii do not lie on the unit sphere");

  Chart chart;
  chart.kind = "flat-torus";
  chart.n = m - 1;
  chart.radii = radii;
  chart.dim = m;
  chart.ambient_dim = 2 * m;
  chart.eval = [radii, m](const VecR& theta) {
    VecR x(2 * m);
    for (int j = 0; j < m; ++j) {
      x(2 * j) = radii[static_cast<size_t>(j)] * std::cos(theta(j));
      x(2 * j + 1) = radii[static_cast<size_t>(j)] * std::sin(theta(j));
    }
    return x;
  };
  chart.box.assign(static_cast<size_t>(m), {0.2L, 6.0L});
  return chart;
}

Chart clifford_hypersurface_chart(int n, int p, int q, Real r, Real s) {
  if (p < 0 || q < 0 || p + q != n - 1)
    throw std::invalid_argument("clifford_hypersurface_chart: need p + q = n - 1");
  if (r <= 0 || s <= 0 || std::abs(r * r + s * s - 1.0L) > 1e-12L)
    throw std::invalid_argument("clifford_hypersurface_chart: need r^2 + s^2 = 1");

  const int du = 2 * p + 1, dv = 2 * q + 1;
  Chart chart;
  chart.kind = "hypersurface-product";
  chart.n = n;
  chart.p = p;
  chart.q = q;
  chart.radii = {r, s};
  chart.dim = du + dv;  // = 2n
  chart.ambient_dim = 2 * n + 2;
  chart.eval = [=](const VecR& theta) {
    VecR u = unit_sphere_point(theta.head(du));
    VecR v = unit_sphere_point(theta.tail(dv));
    VecR x(2 * n + 2);
    x << r * u, s * v;
    return x;
  };
  chart.normal = [=](const VecR& theta) {
    VecR u = unit_sphere_point(theta.head(du));
    VecR v = unit_sphere_point(theta.tail(dv));
    VecR nu(2 * n + 2);
    nu << -s * u, r * v;
    return nu;
  };
  chart.box.assign(static_cast<size_t>(chart.dim), {0.2L, kPi - 0.2L});
  return chart;
}

Chart hypersurface_fiber_chart(int n, int p, int q, Real r, Real s) {
  if (p < 0 || q < 0 || p + q != n - 1)
    throw std::invalid_argument("hypersurface_fiber_chart: need p + q = n - 1");
  if (r <= 0 || s <= 0 || std::abs(r * r + s * s - 1.0L) > 1e-12L)
    throw std::invalid_argument("hypersurface_fiber_chart: need r^2 + s^2 = 1");

  const int du = 2 * p + 1;  // spherical angles of the first factor
  const int dw = 2 * q;      // ball coordinates of the second factor section
  Chart chart;
  chart.kind = "hypersurface-fiber";
  chart.n = n;
  chart.p = p;
  chart.q = q;
  chart.radii = {r, s};
  chart.dim = du + dw + 1;  // section + fiber phase = 2n
  chart.ambient_dim = 2 * n + 2;
  chart.eval = [=](const VecR& theta) {
    VecR u = unit_sphere_point(theta.head(du));  // R^{2p+2}
    Real w_norm_sq = 0;
    for (int i = 0; i < dw; ++i) w_norm_sq += theta(du + i) * theta(du + i);
    if (w_norm_sq >= 1.0L)
      throw std::domain_error("hypersurface_fiber_chart: section coordinates leave the ball");
    Real t = std::sqrt(1.0L - w_norm_sq);
    Real phi = theta(du + dw);

    // (r u, s w, s t) with the common phase e^{i phi} applied to every
    // complex slot: (x, y) -> (x cos - y sin, x sin + y cos).
    VecR x(2 * n + 2);
    for (int k = 0; k <= p; ++k) {
      x(2 * k) = r * u(2 * k);
      x(2 * k + 1) = r * u(2 * k + 1);
    }
    for (int k = 0; k < q; ++k) {
      x(2 * (p + 1 + k)) = s * theta(du + 2 * k);
      x(2 * (p + 1 + k) + 1) = s * theta(du + 2 * k + 1);
    }
    x(2 * n) = s * t;
    x(2 * n + 1) = 0;

    Real c = std::cos(phi), sn = std::sin(phi);
    for (int k = 0; k <= n; ++k) {
      Real xr = x(2 * k), xi = x(2 * k + 1);
      x(2 * k) = xr * c - xi * sn;
      x(2 * k + 1) = xr * sn + xi * c;
    }
    return x;
  };
  chart.box.assign(static_cast<size_t>(du), {0.2L, kPi - 0.2L});
  for (int i = 0; i < dw; ++i) chart.box.push_back({-0.25L, 0.25L});
  chart.box.push_back({0.2L, 6.0L});
  return chart;
}

}  // namespace bht
