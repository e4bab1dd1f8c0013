#pragma once

#include "bht/chart.hpp"

#include <complex>
#include <vector>

namespace bht {

using Complex = std::complex<Real>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// CP^n modelled as rank-one Hermitian projectors P = z z* with the metric
// <X, Y> = (1/2) Re tr(XY). This scale makes the Hopf map a Riemannian
// submersion from the unit sphere and gives holomorphic sectional
// curvature 4; both facts are asserted by calibration tests rather than
// assumed elsewhere.
struct ProjectorPoint {
  CMat P;
  /// max of |P^2 - P|, |P - P*|, |tr P - 1|
  Real invariant_residual() const;
};

struct CpnTangent {
  ProjectorPoint base;
  CMat X;
  /// max of |X - X*|, |tr X|, |X - (XP + PX)|
  Real invariant_residual() const;
};

/// P = z z* for a unit vector z; constant along Hopf fibers.
ProjectorPoint hopf_project(const CVec& z);

struct HopfSplit {
  CMat dpi;        // v z* + z v*
  CVec horizontal;
  CVec vertical;   // component along i z
};

/// Differential of the Hopf map at z applied to a sphere-tangent v.
HopfSplit hopf_differential(const CVec& z, const CVec& v);

/// <X, Y> = (1/2) Re tr(XY).
Real cpn_inner(const CMat& X, const CMat& Y);

/// Complex structure J X = i (P X - X P).
CMat complex_structure(const CMat& P, const CMat& X);

/// Orthogonal projection of a Hermitian matrix onto the tangent space at P:
/// Y -> P Y + Y P - 2 P Y P.
CMat projector_tangent_projection(const CMat& P, const CMat& Y);

// Curvature tensor of the holomorphic-sectional-curvature-4 space form:
// R(X,Y)Z = <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY - 2<JX,Y>JZ.
CMat fs_curvature(const CMat& P, const CMat& X, const CMat& Y, const CMat& Z);

/// Horizontal lift of a tangent vector W at P = z z*: simply W z.
CVec horizontal_lift(const CVec& z, const CMat& W);

/// Deterministic orthonormal tangent basis at P = z z* (2n vectors, J-adapted).
std::vector<CMat> tangent_basis(const CVec& z);

/// Ricci tensor sum_k <R(V, E_k) E_k, W> over an orthonormal tangent basis;
/// equals 2(n+1) <V, W> when the model is calibrated correctly (Einstein).
Real curvature_ricci(const CVec& z, const CMat& V, const CMat& W);

/// Fubini-Study distance: arccos sqrt(tr(P Q)).
Real cpn_distance(const CMat& P, const CMat& Q);

// Sectional curvature of span{X, JX} measured from second-order geodesic
// spreading (closed-form geodesics and distances, Richardson-extrapolated
// in the spreading parameter); calibrates the metric scale against the
// closed-form tensor.
Real holomorphic_sectional_spreading(const CVec& z, const CMat& X);

// Isometric flattening of Hermitian matrices onto R^{(n+1)^2} such that the
// Euclidean dot product equals (1/2) Re tr(XY).
VecR flatten_hermitian(const CMat& X);
CMat unflatten_hermitian(const VecR& v, int rows);

CVec realvec_to_complex(const VecR& x);
VecR complex_to_realvec(const CVec& z);

}  // namespace bht
