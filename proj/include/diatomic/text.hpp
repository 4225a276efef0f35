#pragma once

#include <string_view>

#include "diatomic/ext_rational.hpp"
#include "diatomic/integer.hpp"
#include "diatomic/matrix.hpp"
#include "diatomic/theta.hpp"

namespace diatomic {

// Decimal digits only; throws SyntaxError.
Nat parse_nat(std::string_view text);
// "a", "a/b" or "inf"; throws SyntaxError, or Indeterminate for 0/0.
ExtRational parse_ext_rational(std::string_view text);
// "a/b" or "a" in [0, 1].
ThetaValue parse_theta(std::string_view text);
// "a,b;c,d"
UniModMatrix parse_matrix(std::string_view text);

}  // namespace diatomic
