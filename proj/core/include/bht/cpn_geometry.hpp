#pragma once

#include "bht/cpn.hpp"
#include "bht/fd.hpp"

#include <optional>

namespace bht {

struct fiber_closure_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Chart of the circle quotient of a fiber-closed sphere submanifold,
// taking values in CP^n (flattened projector coordinates). `lift` maps a
// chart point to its fiber-angle-zero representative upstairs.
struct CpnChart {
  int n = 0;
  int dim = 0;          // dim M = dim M~ - 1
  int ambient_dim = 0;  // (n+1)^2 flattened Hermitian coordinates
  std::function<VecR(const VecR&)> eval;
  std::function<CVec(const VecR&)> lift;
  std::vector<std::pair<Real, Real>> box;
};

// Builds the quotient chart of a fiber-closed family chart. The flat torus
// drops its last angle (fiber angle fixed to 0); the hypersurface keeps the
// first factor's angles and uses ball coordinates for the second factor
// with its last complex coordinate held real positive. Throws
// fiber_closure_error if the vertical direction fails to be tangent to the
// chart image (checked numerically through the submersion differential).
CpnChart quotient_chart(const Chart& sphere_chart);

EmbeddedChart embed_in_cpn(const CpnChart& chart);

FundamentalForms cpn_fundamental_forms(const CpnChart& chart, const VecR& sigma,
                                       const FdConfig& cfg = {});

// tau2 = trace(nabla dH) - trace R(di, H) di with the curvature term summed
// in closed form over the measured orthonormal frame; the trace constants
// of the reduced criteria are never substituted in.
BitensionResult bitension_cpn(const CpnChart& chart, const VecR& sigma, const FdConfig& cfg = {});

Real cpn_parallel_mean_curvature_check(const CpnChart& chart, const VecR& sigma,
                                       const FdConfig& cfg = {});

struct LiftIdentityReport {
  // |dpi(H~) - H| : the submersion carries the upstairs mean curvature to
  // the downstairs one.
  Real submersion_residual = 0;
  // hypersurface family: | ||B||^2 - (||B~||^2 - 2) |
  std::optional<Real> norm_b_relation_residual;
  // torus family: |B~(nu, nu)|
  std::optional<Real> vertical_b_norm;
  // torus family: |2 sum_i B~(f_i,nu)<B~(f_i,nu),H~> + B~(nu,nu)<...> - 2 H~|
  std::optional<Real> correction_residual;
  // torus family: |sum_full B~<B~,H~> - (n+5) H~| (meaningful at solutions)
  std::optional<Real> full_contraction_residual;
};

// Evaluates the lift identities at a point of a fiber-closed sphere chart
// ("flat-torus" or "hypersurface-fiber" kinds).
LiftIdentityReport lift_identities_check(const Chart& sphere_chart, const VecR& theta,
                                         const FdConfig& cfg = {});

struct CurvatureTraceCheck {
  Real trace_norm = 0;                 // |sum_a R(f_a, H) f_a|
  Real h_norm = 0;
  Real residual_hypersurface = 0;      // |trace + 2(n+1) H|
  Real residual_lagrangian = 0;        // |trace + (n+3) H|
};

CurvatureTraceCheck curvature_trace_check(const CpnChart& chart, const VecR& sigma,
                                          const FdConfig& cfg = {});

}  // namespace bht
