#include "bht/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace bht {

int configured_digits() {
  if (const char* env = std::getenv("BHT_PRECISION")) {
    int digits = std::atoi(env);
    if (digits >= 1 && digits <= 80) return digits;
  }
  return 12;
}

std::string decimal_string(Real v, int digits) {
  if (v == 0) return format_significant(0, digits);
  Real mag = std::abs(v);
  if (mag >= 1e-5L && mag < 1e15L) return format_significant(Rational(v), digits);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Le", digits - 1, v);
  return buf;
}

}  // namespace bht
