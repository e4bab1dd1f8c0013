#pragma once

#include "bht/rational.hpp"

#include <string>

namespace bht {

/// Decimal digits for emitted values: BHT_PRECISION when set, else 12.
int configured_digits();

/// Deterministic significant-digit rendering of a measured value.
std::string decimal_string(Real v, int digits);

}  // namespace bht
