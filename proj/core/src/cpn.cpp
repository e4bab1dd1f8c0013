#include "bht/cpn.hpp"

#include <cmath>
#include <stdexcept>

namespace bht {

namespace {
const Complex kI(0, 1);
}

Real ProjectorPoint::invariant_residual() const {
  Real r1 = (P * P - P).cwiseAbs().maxCoeff();
  Real r2 = (P - P.adjoint()).cwiseAbs().maxCoeff();
  Real r3 = std::abs(P.trace() - Complex(1));
  return std::max({r1, r2, r3});
}

Real CpnTangent::invariant_residual() const {
  Real r1 = (X - X.adjoint()).cwiseAbs().maxCoeff();
  Real r2 = std::abs(X.trace());
  Real r3 = (X - (X * base.P + base.P * X)).cwiseAbs().maxCoeff();
  return std::max({r1, r2, r3});
}

ProjectorPoint hopf_project(const CVec& z) {
  Real len = z.norm();
  if (len == 0) throw std::invalid_argument("hopf_project: zero vector");
  if (std::abs(len - 1.0L) > 1e-12L)
    throw std::invalid_argument("hopf_project: input not on the unit sphere");
  return {z * z.adjoint()};
}

HopfSplit hopf_differential(const CVec& z, const CVec& v) {
  Real radial = (z.adjoint() * v).value().real();
  if (std::abs(radial) > 1e-10L)
    throw std::invalid_argument("hopf_differential: vector not tangent to the sphere");
  HopfSplit out;
  out.dpi = v * z.adjoint() + z * v.adjoint();
  CVec fiber = kI * z;
  Complex vert = (fiber.adjoint() * v).value();
  out.vertical = vert.real() * fiber;
  out.horizontal = v - out.vertical;
  return out;
}

Real cpn_inner(const CMat& X, const CMat& Y) { return 0.5L * (X * Y).trace().real(); }

CMat complex_structure(const CMat& P, const CMat& X) { return kI * (P * X - X * P); }

CMat projector_tangent_projection(const CMat& P, const CMat& Y) {
  return P * Y + Y * P - 2 * P * Y * P;
}

CMat fs_curvature(const CMat& P, const CMat& X, const CMat& Y, const CMat& Z) {
  CMat JX = complex_structure(P, X), JY = complex_structure(P, Y), JZ = complex_structure(P, Z);
  return cpn_inner(Y, Z) * X - cpn_inner(X, Z) * Y + cpn_inner(JY, Z) * JX -
         cpn_inner(JX, Z) * JY - 2 * cpn_inner(JX, Y) * JZ;
}

CVec horizontal_lift(const CVec& z, const CMat& W) { return W * z; }

std::vector<CMat> tangent_basis(const CVec& z) {
  const int dim = static_cast<int>(z.size());
  // complete z to a unitary basis, deterministically
  std::vector<CVec> basis = {z};
  for (int k = 0; k < dim && static_cast<int>(basis.size()) < dim; ++k) {
    CVec v = CVec::Zero(dim);
    v(k) = 1;
    for (const CVec& b : basis) v -= (b.adjoint() * v).value() * b;
    if (v.norm() > 0.3L) basis.push_back(v / v.norm());
  }
  if (static_cast<int>(basis.size()) < dim)
    throw std::logic_error("tangent_basis: failed to complete basis");

  std::vector<CMat> out;
  for (int k = 1; k < dim; ++k) {
    const CVec& w = basis[static_cast<size_t>(k)];
    out.push_back(z * w.adjoint() + w * z.adjoint());
    out.push_back(kI * (z * w.adjoint() - w * z.adjoint()));
  }
  return out;
}

Real curvature_ricci(const CVec& z, const CMat& V, const CMat& W) {
  CMat P = z * z.adjoint();
  Real acc = 0;
  for (const CMat& e : tangent_basis(z)) acc += cpn_inner(fs_curvature(P, V, e, e), W);
  return acc;
}

Real cpn_distance(const CMat& P, const CMat& Q) {
  Real c = (P * Q).trace().real();
  c = std::clamp(c, 0.0L, 1.0L);
  return std::acos(std::sqrt(c));
}

Real holomorphic_sectional_spreading(const CVec& z, const CMat& X) {
  Real len = std::sqrt(cpn_inner(X, X));
  CMat Xu = X / len;
  CVec u = horizontal_lift(z, Xu);           // lift of X
  CVec v = -kI * u;                          // lift of JX
  auto spread = [&](Real t) {
    CVec a = std::cos(t) * z + std::sin(t) * u;
    CVec b = std::cos(t) * z + std::sin(t) * v;
    Real f = cpn_distance(a * a.adjoint(), b * b.adjoint());
    return 3 * (2 * t * t - f * f) / (t * t * t * t);
  };
  Real t = 1e-2L;
  Real k1 = spread(t), k2 = spread(t / 2);
  return (4 * k2 - k1) / 3;  // cancels the O(t^2) term
}

VecR flatten_hermitian(const CMat& X) {
  const int d = static_cast<int>(X.rows());
  static const Real inv_sqrt2 = std::sqrt(0.5L);
  VecR out(d * d);
  int idx = 0;
  for (int k = 0; k < d; ++k) out(idx++) = X(k, k).real() * inv_sqrt2;
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      out(idx++) = X(k, l).real();
      out(idx++) = X(k, l).imag();
    }
  return out;
}

CMat unflatten_hermitian(const VecR& v, int rows) {
  static const Real sqrt2 = std::sqrt(2.0L);
  CMat X(rows, rows);
  int idx = 0;
  for (int k = 0; k < rows; ++k) X(k, k) = v(idx++) * sqrt2;
  for (int k = 0; k < rows; ++k)
    for (int l = k + 1; l < rows; ++l) {
      Real re = v(idx++), im = v(idx++);
      X(k, l) = Complex(re, im);
      X(l, k) = Complex(re, -im);
    }
  return X;
}

CVec realvec_to_complex(const VecR& x) {
  CVec z(x.size() / 2);
  for (int k = 0; 2 * k + 1 < x.size(); ++k) z(k) = Complex(x(2 * k), x(2 * k + 1));
  return z;
}

VecR complex_to_realvec(const CVec& z) {
  VecR x(2 * z.size());
  for (int k = 0; k < z.size(); ++k) {
    x(2 * k) = z(k).real();
    x(2 * k + 1) = z(k).imag();
  }
  return x;
}

}  // namespace bht
