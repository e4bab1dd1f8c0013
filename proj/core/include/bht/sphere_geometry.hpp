#pragma once

#include "bht/fd.hpp"

namespace bht {

/// View a sphere-submanifold chart as an embedded chart of S^{2n+1} in R^{2n+2}.
EmbeddedChart embed_in_sphere(const Chart& chart);

FundamentalForms sphere_fundamental_forms(const Chart& chart, const VecR& theta,
                                          const FdConfig& cfg = {});

// tau2 = trace(nabla dH) + m H for the unit-sphere target; the curvature
// term is applied in closed form (trace R(di, H) di = -m H for normal H),
// isolating the differencing error in the Laplacian term.
BitensionResult bitension_sphere(const Chart& chart, const VecR& theta, const FdConfig& cfg = {});

Real parallel_mean_curvature_check(const Chart& chart, const VecR& theta,
                                   const FdConfig& cfg = {});

// Closed-form geometry of the flat torus chart at a point:
//   B_ij = delta_ij (x - x_i / a_i),  H = sum ((n+1) a_i - 1/a_i) x_i,
// with x_i the unit vector of the i-th circle factor.
struct AnalyticTorusForms {
  VecR point;
  MatR tangent_frame;             // f_i = J x_i, orthonormal
  std::vector<VecR> diagonal_b;   // B_ii
  VecR mean_curvature;
  Real norm_b_sq = 0;             // = d - (n+1)
  VecR contraction;               // sum_ij B_ij <B_ij, H>
  VecR contraction_identity;      // sum_i (a_i d - 1/a_i^3) x_i - (n+1) H
};

AnalyticTorusForms analytic_flat_torus_forms(const std::vector<Real>& radii, const VecR& theta);

}  // namespace bht
