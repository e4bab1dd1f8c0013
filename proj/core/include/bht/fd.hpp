#pragma once

#include "bht/chart.hpp"

#include <functional>
#include <vector>

namespace bht {

// A chart of a submanifold M of a target manifold N, where N itself sits
// isometrically in flat R^D and its tangent projection is known in closed
// form. Covariant derivatives of fields along the chart are Euclidean
// derivatives projected onto the tangent space of N.
struct EmbeddedChart {
  int dim = 0;         // dim M
  int target_dim = 0;  // dim N
  int ambient_dim = 0;  // D
  std::function<VecR(const VecR&)> eval;
  std::function<VecR(const VecR&, const VecR&)> project;  // (point of N, vector) -> T_point N
  std::function<VecR(const VecR&)> normal;  // unit normal of M in N (codim-1 charts only)
};

struct FdConfig {
  // Chart-level derivatives (fundamental forms): plain central differences.
  Real chart_step = 1e-4L;
  // Derivatives of derived fields such as H: 5-point first-derivative
  // stencils, nested for second derivatives, with a mandatory half-step
  // consistency pass. Larger than chart_step because the field values carry
  // the chart-level differencing noise.
  Real field_step = 1e-2L;
  // Chart step for H evaluations inside nested field stencils. The nested
  // division by field_step^2 amplifies rounding noise but differentiates the
  // smooth truncation bias harmlessly, so these evaluations trade bias for
  // noise with a larger step.
  Real nested_chart_step = 1e-3L;
  // Inverse-metric entries below this relative threshold contribute nothing
  // to traces and their stencil work is skipped.
  Real metric_zero_tol = 1e-12L;
};

struct FundamentalForms {
  VecR theta;
  VecR point;
  MatR jacobian;    // D x m
  MatR metric;      // m x m, J^T J
  MatR metric_inv;
  MatR frame;       // D x m, Gram-Schmidt of the jacobian columns in order
  std::vector<VecR> second_coord;  // B_ij in coordinate basis, packed i <= j
  std::vector<VecR> second_frame;  // B(E_a, E_b), packed a <= b
  VecR mean_curvature;             // H = g^{ij} B_ij (non-normalized trace)
  Real norm_b_sq = 0;
  std::vector<Real> shape_spectrum;  // principal curvatures, codim-1 charts only

  const VecR& second(int i, int j) const;
  const VecR& second_in_frame(int a, int b) const;
};

FundamentalForms fundamental_forms(const EmbeddedChart& chart, const VecR& theta,
                                   const FdConfig& cfg = {});

/// Mean curvature field evaluation (the hot path inside the bitension oracle).
VecR mean_curvature_at(const EmbeddedChart& chart, const VecR& theta, const FdConfig& cfg = {});

struct BitensionResult {
  VecR tau2;             // from the finer field step
  Real norm = 0;
  Real tangential_norm = 0;  // component tangent to M
  Real normal_norm = 0;
  Real consistency = 0;  // |tau2(k) - tau2(k/2)|
};

/// trace R^N(di, H) di over an orthonormal frame of M, supplied per target space.
using CurvatureTerm = std::function<VecR(const FundamentalForms&)>;

// tau2 = trace(nabla dH) - trace R^N(di, H) di, with the rough Laplacian
// assembled from nested projected differences of the H field and the
// induced-metric Christoffel symbols.
BitensionResult bitension(const EmbeddedChart& chart, const VecR& theta, const FdConfig& cfg,
                          const CurvatureTerm& curvature_term);

/// max_k |normal component of nabla_k H| — vanishes iff H is parallel.
Real max_normal_connection(const EmbeddedChart& chart, const VecR& theta,
                           const FdConfig& cfg = {});

}  // namespace bht
