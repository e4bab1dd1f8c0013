#pragma once

#include "bht/rational.hpp"

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace bht {

using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// A parametrized patch of a submanifold of the unit sphere S^{2n+1} in
// R^{2n+2} (identified with C^{n+1}). Evaluators are smooth on the sample
// box and map into the unit sphere.
struct Chart {
  std::string kind;          // "flat-torus", "hypersurface-product", "hypersurface-fiber"
  int n = 0;                 // ambient S^{2n+1}
  int p = 0, q = 0;          // hypersurface factor dimensions
  std::vector<Real> radii;   // flat torus: a_i; hypersurface: {r, s}
  int dim = 0;
  int ambient_dim = 0;
  std::function<VecR(const VecR&)> eval;
  std::function<VecR(const VecR&)> normal;  // unit normal within the sphere (codim-1 charts)
  std::vector<std::pair<Real, Real>> box;   // sampling domain per coordinate
};

/// Clifford torus {|z_i| = a_i} in S^{2n+1}; theta_j are the n+1 circle angles.
Chart flat_torus_chart(const std::vector<Real>& radii);

/// Product S^{2p+1}(r) x S^{2q+1}(s) in S^{2n+1} via iterated spherical
/// coordinates on both unit-sphere factors; carries the unit normal
/// nu = (-s u, r v). Requires r^2 + s^2 = 1 and p + q = n - 1.
Chart clifford_hypersurface_chart(int n, int p, int q, Real r, Real s);

// Same hypersurface, parametrized fiber-adapted: coordinates are a section
// transverse to the circle fibers (2p+1 angles for the first factor, 2q ball
// coordinates for the second factor with its last complex coordinate held
// real positive) plus the fiber phase as the final coordinate.
Chart hypersurface_fiber_chart(int n, int p, int q, Real r, Real s);

/// Iterated spherical parametrization of the unit S^k (k angles -> R^{k+1}).
VecR unit_sphere_point(const VecR& angles);

/// Ambient complex structure on R^{2n+2}: (x, y) -> (-y, x) per complex slot.
VecR ambient_complex_structure(const VecR& v);

/// Deterministic uniform draw from the chart's sample box.
VecR sample_box_point(const Chart& chart, std::mt19937_64& rng);

/// Uniform in [0,1) from the raw engine (avoids libstdc++-specific
/// distributions so seeded output is identical everywhere).
Real uniform01(std::mt19937_64& rng);

}  // namespace bht
