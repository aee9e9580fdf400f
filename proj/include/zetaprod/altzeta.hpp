#ifndef ZETAPROD_ALTZETA_HPP
#define ZETAPROD_ALTZETA_HPP

#include <vector>

#include "zetaprod/precision.hpp"
#include "zetaprod/series.hpp"

namespace zetaprod {

/// Argument of the alternating zeta function; finite by Real's invariants.
using ZetaArgument = Complex;

/// Dirichlet-series partial sum_{k=1}^{N} (-1)^(k-1) k^(-s), Re(s) > 0.
/// k^(-s) uses the principal logarithm of the positive integer k.
Complex alt_zeta_dirichlet(const ZetaArgument& s, long N, const PrecisionContext& ctx);

/// Globally convergent partial
///   sum_{n=0}^{N} 2^-(n+1) sum_{k=0}^{n} (-1)^k C(n,k) (k+1)^(-s),
/// valid for every s in C; cancellation-compensated inner sums.
Complex alt_zeta_global(const ZetaArgument& s, long N, const PrecisionContext& ctx);

/// Termwise d/ds of the global series:
///   sum_{n=0}^{N} 2^-(n+1) sum_{k=0}^{n} (-1)^(k+1) C(n,k) ln(k+1) (k+1)^(-s).
Complex alt_zeta_deriv_global(const ZetaArgument& s, long N, const PrecisionContext& ctx);

/// sum_{n=1}^{N} 2^(-n) log_core(n) -> ln(pi/2). Equals twice the derivative
/// series at s = 0 truncated at the same outer index (the n = 0 derivative
/// term vanishes identically).
Real ln_pi_over_2_series(long N, const PrecisionContext& ctx);

namespace detail {

/// b_n(s) = sum_{k=0}^{n} (-1)^k C(n,k) (k+1)^(-s) for n = 0..N.
std::vector<Complex> binom_power_sums(const Complex& s, long N, const PrecisionContext& ctx);

/// d_n(s) = sum_{k=0}^{n} (-1)^(k+1) C(n,k) ln(k+1) (k+1)^(-s) for n = 0..N.
std::vector<Complex> binom_logpower_sums(const Complex& s, long N, const PrecisionContext& ctx);

/// (k+1)^(-s) for k = 0..N at a context escalated enough for order-N sums.
std::vector<Complex> shifted_powers(const Complex& s, long N, const PrecisionContext& ctx);

}  // namespace detail

}  // namespace zetaprod

#endif  // ZETAPROD_ALTZETA_HPP
