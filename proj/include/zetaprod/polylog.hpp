#ifndef ZETAPROD_POLYLOG_HPP
#define ZETAPROD_POLYLOG_HPP

#include "zetaprod/precision.hpp"

namespace zetaprod {

/// Argument pair of the generalized alternating-zeta family f(t,s).
struct FArgument {
    Real t;
    Complex s;
};

/// f(t,s) = sum_{n>=0} t^(n+1) sum_{k=0}^{n} (-1)^k C(n,k) (k+1)^(-s),
/// partial to outer index N; -1 < t < 1, any s. f(1/2,s) is the alternating
/// zeta function's globally convergent series.
Complex f_series(const FArgument& arg, long N, const PrecisionContext& ctx);

/// F(t,s) = sum_{k=1}^{N} t^k k^(-s); -1 <= t < 1, and Re(s) > 0 when t = -1.
Complex F_series(const Real& t, const Complex& s, long N, const PrecisionContext& ctx);

/// f(t,s) = -F(t/(t-1), s) for -1 < t <= 1/2 (Re(s) > 0 at t = 1/2, where the
/// map lands on -1). The map sends (-1, 1/2] into [-1, 1/2).
Complex f_via_F(const FArgument& arg, long N, const PrecisionContext& ctx);

/// d/ds f(t,s) at s = 0: sum_{n=1}^{N} t^(n+1) log_core(n) (the n = 0 term
/// vanishes). -1 < t < 1.
Real f_prime0_series(const Real& t, long N, const PrecisionContext& ctx);

/// gamma = sum_{n>=1} log_core(n)/(n+1), partial to N: the termwise
/// integration of f'(t,0)/t over (0,1). Slow (harmonic-type) convergence;
/// large N needs an elevated context for the binomial cancellation.
Real gamma_series_via_f(long N, const PrecisionContext& ctx);

}  // namespace zetaprod

#endif  // ZETAPROD_POLYLOG_HPP
