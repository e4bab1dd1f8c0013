#include "bht/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bht {

namespace {

QuadSurd rat(long long n, long long d = 1) { return QuadSurd(Rational(n, d)); }

/// Assign multiplicities (p, q) to the two roots so that p*b1 + q*b2 == 1.
std::vector<SquaredRadius> assign_multiplicities(const QuadSurd& root1, const QuadSurd& root2,
                                                 int p, int q) {
  auto sum = [](const QuadSurd& x, int mx, const QuadSurd& y, int my) {
    return QuadSurd(Rational(mx)) * x + QuadSurd(Rational(my)) * y;
  };
  if (sum(root1, p, root2, q) == QuadSurd(1))
    return {{root1, p, "r"}, {root2, q, "s"}};
  if (sum(root2, p, root1, q) == QuadSurd(1))
    return {{root2, p, "r"}, {root1, q, "s"}};
  throw std::logic_error("no multiplicity assignment satisfies the unit-sphere constraint");
}

QuadSurd d_of(const std::vector<SquaredRadius>& radii) {
  QuadSurd d = 0;
  for (const auto& e : radii) d = d + QuadSurd(Rational(e.multiplicity)) / e.value;
  return d;
}

RadiiSolution minimal_torus(const FamilyParams& params) {
  RadiiSolution sol;
  sol.params = params;
  sol.branch = Branch::MinimalExcluded;
  sol.squared_radii = {{QuadSurd(Rational(1, params.n + 1)), params.n + 1, "b"}};
  sol.d = rat((params.n + 1) * (params.n + 1));
  long long c = params.family == Family::CpnLagrangianTorus ? 2LL * (params.n + 1) * (params.n + 3)
                                                            : 2LL * (params.n + 1) * (params.n + 1);
  sol.t = rat(c) - sol.d;
  sol.proper = false;
  sol.check_invariants();
  return sol;
}

}  // namespace

SolveOutput solve_hypersurface_radii(const FamilyParams& params) {
  params.require_valid();
  if (params.family != Family::CpnHypersurface)
    throw std::invalid_argument("solve_hypersurface_radii: wrong family");
  const int n = params.n, p = params.p, q = params.q;

  // (2p+1) x^2 - 2(n+2) x + (2q+1) = 0 with x = (s/r)^2
  QuadRoots roots = quad_solve(rat(2 * p + 1), rat(-2 * (n + 2)), rat(2 * q + 1));

  SolveOutput out;
  out.discriminant = roots.discriminant;
  QuadSurd lawson = rat(2 * q + 1, 2 * p + 1);  // x value of the minimal member
  Branch branch = Branch::Minus;
  for (const QuadSurd& x : roots.roots) {
    if (x.sign() <= 0) continue;
    QuadSurd one(1), r_sq = one / (one + x), s_sq = x / (one + x);
    RadiiSolution sol;
    sol.params = params;
    sol.branch = branch;
    sol.squared_radii = {{r_sq, 1, "r"}, {s_sq, 1, "s"}};
    sol.d = d_of(sol.squared_radii);
    sol.proper = !(x == lawson);
    sol.check_invariants();
    out.solutions.push_back(std::move(sol));
    branch = Branch::Plus;
  }
  return out;
}

SolveOutput solve_flat_torus_radii(const FamilyParams& params) {
  params.require_valid();
  if (params.family != Family::SphereFlatTorus)
    throw std::invalid_argument("solve_flat_torus_radii: wrong family");
  const int n = params.n, p = params.p, q = params.q;
  const long long n1 = n + 1, pq_diff = p - q;

  QuadRoots troots =
      quad_solve(rat(1), rat(-(2 * n1 * n1 - pq_diff * pq_diff)), rat(4LL * p * q * n1 * n1));
  SolveOutput out;
  out.discriminant = troots.discriminant;

  // Derivation check: the discriminant is (p-q)^4 on the nose.
  if (!(out.discriminant == rat(pq_diff * pq_diff * pq_diff * pq_diff)))
    throw std::logic_error("flat-torus discriminant != (p-q)^4");

  if (p == q) {
    // Only the all-equal (minimal) solution exists.
    out.solutions.push_back(minimal_torus(params));
    return out;
  }

  // proper root t = (n+1)^2 - (p-q)^2
  QuadSurd t_proper = rat(n1 * n1 - pq_diff * pq_diff);
  QuadSurd t_minimal = rat(n1 * n1);
  if (!(troots.roots.front() == t_proper && troots.roots.back() == t_minimal) &&
      !(troots.roots.front() == t_minimal && troots.roots.back() == t_proper))
    throw std::logic_error("unexpected flat-torus t-roots");

  QuadRoots broots = quad_solve(t_proper, rat(-2 * n1), rat(1));
  RadiiSolution sol;
  sol.params = params;
  sol.branch = Branch::Minus;
  sol.squared_radii = assign_multiplicities(broots.roots.front(), broots.roots.back(), p, q);
  sol.d = d_of(sol.squared_radii);
  sol.t = t_proper;
  if (!(rat(2 * n1 * n1) - sol.d == t_proper)) throw std::logic_error("t != 2(n+1)^2 - d");
  sol.proper = true;
  sol.check_invariants();
  out.solutions.push_back(std::move(sol));

  // The t = (n+1)^2 root: b-quadratic degenerates to ((n+1)b - 1)^2 = 0.
  QuadRoots bmin = quad_solve(t_minimal, rat(-2 * n1), rat(1));
  if (bmin.roots.size() != 1 || !(bmin.roots.front() == rat(1, n1)))
    throw std::logic_error("minimal t-root did not give the all-equal torus");
  RadiiSolution min_sol = minimal_torus(params);
  min_sol.t = t_minimal;
  min_sol.d = rat(2 * n1 * n1) - t_minimal;
  out.solutions.push_back(std::move(min_sol));
  return out;
}

SolveOutput solve_lagrangian_radii(const FamilyParams& params) {
  params.require_valid();
  if (params.family != Family::CpnLagrangianTorus)
    throw std::invalid_argument("solve_lagrangian_radii: wrong family");
  const int n = params.n, p = params.p, q = params.q;
  const long long n1 = n + 1, n3 = n + 3, pq_diff = p - q;

  QuadRoots troots =
      quad_solve(rat(1), rat(-(2 * n1 * n3 - pq_diff * pq_diff)), rat(4LL * p * q * n3 * n3));
  SolveOutput out;
  out.discriminant = troots.discriminant;

  long long d2 = pq_diff * pq_diff;
  if (!(out.discriminant == rat(d2 * d2 + 8 * n3 * d2)))
    throw std::logic_error("lagrangian discriminant != (p-q)^4 + 8(n+3)(p-q)^2");

  if (p == q) {
    // The t-quadratic has the double root (n+1)(n+3); the family solver
    // reports only the all-equal (minimal, hence non-proper) torus here.
    out.solutions.push_back(minimal_torus(params));
    return out;
  }

  Branch branch = Branch::Minus;
  for (const QuadSurd& t : troots.roots) {
    // t b^2 - 2(n+3) b + 1 = 0  =>  b = ((n+3) +- sqrt((n+3)^2 - t)) / t
    QuadSurd inner = rat(n3 * n3) - t;
    if (inner.sign() < 0) throw std::logic_error("lagrangian b-quadratic has no real roots");
    RadiiSolution sol;
    sol.params = params;
    sol.branch = branch;
    auto root = surd_sqrt(inner);
    if (root) {
      QuadSurd b1 = (rat(n3) + *root) / t;
      QuadSurd b2 = (rat(n3) - *root) / t;
      sol.squared_radii = assign_multiplicities(b1, b2, p, q);
      sol.d = d_of(sol.squared_radii);
      sol.t = t;
      if (!(rat(2 * n1 * n3) - sol.d == t)) throw std::logic_error("t != 2(n+1)(n+3) - d");
      sol.exact = true;
    } else {
      // Root does not denest into the t-radicand: store the squared radii as
      // 50-digit rational approximations and verify the defining polynomial
      // residual instead of exact identities.
      const int digits = 50;
      Rational tv = t.approximate(digits + 10);
      Rational iv = inner.approximate(2 * (digits + 10));
      Rational sq = [&] {
        BigInt scale = pow10(digits + 5);
        return Rational(isqrt_floor(num(iv) * den(iv) * scale * scale), den(iv) * scale);
      }();
      Rational b1 = (Rational(n3) + sq) / tv, b2 = (Rational(n3) - sq) / tv;
      auto residual = [&](const Rational& b) { return tv * b * b - 2 * n3 * b + 1; };
      Rational tol(1, pow10(45));
      if (abs(residual(b1)) > tol || abs(residual(b2)) > tol)
        throw std::logic_error("numeric lagrangian roots fail the residual bound");
      if (p * b1 + q * b2 > 1) std::swap(b1, b2);
      sol.squared_radii = {{QuadSurd(b1), p, "r"}, {QuadSurd(b2), q, "s"}};
      sol.d = d_of(sol.squared_radii);
      sol.t = t;
      sol.exact = false;
    }
    sol.proper = true;  // b1 == b2 would require t = (n+3)^2, which is never a root
    sol.check_invariants();
    out.solutions.push_back(std::move(sol));
    branch = Branch::Plus;
  }
  return out;
}

SolveOutput solve_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::CpnHypersurface: return solve_hypersurface_radii(params);
    case Family::SphereFlatTorus: return solve_flat_torus_radii(params);
    case Family::CpnLagrangianTorus: return solve_lagrangian_radii(params);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<RadiiSolution> enumerate_solutions(Family family, int n_max) {
  if (n_max < 2) throw std::invalid_argument("enumerate_solutions: n_max < 2");
  std::vector<RadiiSolution> out;
  for (int n = 1; n <= n_max; ++n) {
    int pq_sum = family == Family::CpnHypersurface ? n - 1 : n + 1;
    int p_min = family == Family::CpnHypersurface ? 0 : 1;
    for (int p = p_min; 2 * p <= pq_sum; ++p) {
      FamilyParams params{family, n, p, pq_sum - p};
      if (!params.valid()) continue;
      for (auto& sol : solve_family(params).solutions)
        if (sol.proper) out.push_back(std::move(sol));
    }
  }
  std::sort(out.begin(), out.end(), [](const RadiiSolution& a, const RadiiSolution& b) {
    auto key = [](const RadiiSolution& s) {
      return std::tuple(s.params.n, s.params.p, s.params.q, static_cast<int>(s.branch));
    };
    return key(a) < key(b);
  });
  return out;
}

namespace {

std::vector<Real> torus_residual(const std::vector<Real>& squared_radii, int n, Real constant) {
  if (static_cast<int>(squared_radii.size()) != n + 1)
    throw std::invalid_argument("residual: expected n+1 squared radii");
  Real sum = 0;
  for (Real b : squared_radii) {
    if (b <= 0) throw std::domain_error("residual: nonpositive squared radius");
    sum += b;
  }
  if (std::abs(sum - 1.0L) > 1e-12L)
    throw std::invalid_argument("residual: squared radii do not sum to 1");

  Real d = 0;
  for (Real b : squared_radii) d += 1 / b;
  std::vector<Real> out;
  out.reserve(squared_radii.size());
  for (Real b : squared_radii) {
    Real a = std::sqrt(b);
    out.push_back(a * d - 1 / (a * a * a) - constant * ((n + 1) * a - 1 / a));
  }
  return out;
}

}  // namespace

std::vector<Real> residual_flat_torus(const std::vector<Real>& squared_radii, int n) {
  return torus_residual(squared_radii, n, 2.0L * (n + 1));
}

std::vector<Real> residual_lagrangian(const std::vector<Real>& squared_radii, int n) {
  return torus_residual(squared_radii, n, 2.0L * (n + 3));
}

std::vector<QuadSurd> residual_torus_exact(const std::vector<SquaredRadius>& squared_radii, int n,
                                           bool lagrangian) {
  QuadSurd d = 0;
  for (const auto& e : squared_radii) {
    if (e.value.sign() <= 0) throw std::domain_error("residual: nonpositive squared radius");
    d = d + QuadSurd(Rational(e.multiplicity)) / e.value;
  }
  QuadSurd c = QuadSurd(Rational(lagrangian ? 2 * (n + 3) : 2 * (n + 1)));
  QuadSurd n1 = QuadSurd(Rational(n + 1));
  std::vector<QuadSurd> out;
  for (const auto& e : squared_radii) {
    QuadSurd inv = QuadSurd(1) / e.value;
    out.push_back(d - inv * inv - c * (n1 - inv));
  }
  return out;
}

}  // namespace bht
