#ifndef ZETAPROD_CONSTANTS_HPP
#define ZETAPROD_CONSTANTS_HPP

#include <string_view>

#include "zetaprod/precision.hpp"

namespace zetaprod {

enum class ConstantName { pi, gamma, e, ln2 };

/// Reference oracle for pi, gamma (Euler's constant), e and ln 2.
///
/// These anchor every accuracy test in the library, so they are computed by
/// classical algorithms that share nothing with the series, products and
/// integrals implemented elsewhere in this project:
///
///   pi     Machin's formula 16*atan(1/5) - 4*atan(1/239), arctangent
///          Taylor series with exact small-integer arguments
///   gamma  Brent-McMillan: A(n)/B(n) - ln n with A, B the Bessel-type sums
///          over (n^k/k!)^2; n a power of two so ln n reduces to ln 2
///   e      factorial series sum 1/k!
///   ln2    2*atanh(1/3)
///
/// Only ring operations (+,-,*,/) of the arithmetic layer are used; no MPFR
/// transcendental or constant routines. Values are deterministic for a fixed
/// context.
Real reference_constant(ConstantName name, const PrecisionContext& ctx);

/// Name lookup ("pi", "gamma", "e", "ln2"); throws unknown_constant_error.
Real reference_constant(std::string_view name, const PrecisionContext& ctx);

}  // namespace zetaprod

#endif  // ZETAPROD_CONSTANTS_HPP
