#include "bht/families.hpp"

#include <cmath>
#include <stdexcept>

namespace bht {

std::string to_string(Family f) {
  switch (f) {
    case Family::CpnHypersurface: return "hypersurface";
    case Family::SphereFlatTorus: return "sphere-torus";
    case Family::CpnLagrangianTorus: return "lagrangian-torus";
  }
  return "?";
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Minus: return "minus";
    case Branch::Plus: return "plus";
    case Branch::MinimalExcluded: return "minimal-excluded";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "hypersurface" || name == "cpn-hypersurface") return Family::CpnHypersurface;
  if (name == "sphere-torus" || name == "flat-torus") return Family::SphereFlatTorus;
  if (name == "lagrangian-torus") return Family::CpnLagrangianTorus;
  return std::nullopt;
}

std::optional<Branch> branch_from_string(const std::string& name) {
  if (name == "minus") return Branch::Minus;
  if (name == "plus") return Branch::Plus;
  if (name == "minimal-excluded") return Branch::MinimalExcluded;
  return std::nullopt;
}

bool FamilyParams::valid() const {
  if (n < 1) return false;
  switch (family) {
    case Family::CpnHypersurface: return p >= 0 && q >= 0 && p + q == n - 1;
    case Family::SphereFlatTorus:
    case Family::CpnLagrangianTorus: return p >= 1 && q >= 1 && p + q == n + 1;
  }
  return false;
}

void FamilyParams::require_valid() const {
  if (!valid())
    throw std::invalid_argument("inadmissible parameters (" + to_string(family) +
                                ", n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                                ", q=" + std::to_string(q) + ")");
}

int FamilyParams::dim() const {
  switch (family) {
    case Family::CpnHypersurface: return 2 * n - 1;
    case Family::SphereFlatTorus: return n + 1;
    case Family::CpnLagrangianTorus: return n;
  }
  return 0;
}

std::vector<Real> RadiiSolution::squared_radii_real() const {
  std::vector<Real> out;
  for (const auto& e : squared_radii)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value.to_real());
  return out;
}

std::vector<Real> RadiiSolution::radii_real() const {
  std::vector<Real> out = squared_radii_real();
  for (auto& b : out) b = std::sqrt(b);
  return out;
}

void RadiiSolution::check_invariants() const {
  QuadSurd sum = 0, dsum = 0;
  for (const auto& e : squared_radii) {
    if (e.value.sign() <= 0) throw std::logic_error("RadiiSolution: nonpositive squared radius");
    if (e.multiplicity < 1) throw std::logic_error("RadiiSolution: nonpositive multiplicity");
    QuadSurd m(Rational(e.multiplicity));
    sum = sum + m * e.value;
    dsum = dsum + m / e.value;
  }
  if (exact) {
    if (sum != QuadSurd(1)) throw std::logic_error("RadiiSolution: radii do not lie on the sphere");
    if (dsum != d) throw std::logic_error("RadiiSolution: d != sum(multiplicity / value)");
  }
}

}  // namespace bht
