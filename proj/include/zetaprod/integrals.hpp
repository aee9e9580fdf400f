#ifndef ZETAPROD_INTEGRALS_HPP
#define ZETAPROD_INTEGRALS_HPP

#include "zetaprod/quadrature.hpp"

namespace zetaprod {

// Every integral is evaluated in its positive form (the sign flips of the
// defining formulas folded in), so values come out as the target constants
// directly. Integrand helpers are public so tests can pin spot values and the
// removable endpoint limits.

/// ln(pi/2) = integral_0^1 (1-x) / ((1+x) (-ln x)) dx.
QuadratureResult integral_ln_pi_over_2(const Real& tol, const PrecisionContext& ctx);

/// ln(4/pi) over the unit square: (1-x) / ((1+xy) (-ln xy)).
QuadratureResult double_integral_ln4_over_pi(const Real& tol, const PrecisionContext& ctx);

/// gamma over the unit square: (1-x) / ((1-xy) (-ln xy)). The (1,1) corner is
/// an integrable singularity; the graded tanh-sinh mesh resolves it. Deep
/// tolerances are expensive here, so callers usually stop at 1e-6.
QuadratureResult double_integral_gamma(const Real& tol, const PrecisionContext& ctx);

/// Truncation of I = int_0^inf int_0^1 x^y (1-x)/(1+x) dx dy at y <= y_cutoff.
/// value is the truncated integral only; error_estimate additionally carries
/// the analytic y-tail  int_0^1 (1-x)/(1+x) x^Y / (-ln x) dx  evaluated
/// numerically (the truncated mass decays only like 1/Y). Integrating the
/// y-axis analytically instead (int_0^inf x^y dy = 1/(-ln x)) reduces I to
/// integral_ln_pi_over_2 — that reduced pipeline IS integral_ln_pi_over_2.
QuadratureResult integral_I_2d(const Real& y_cutoff, const Real& tol, const PrecisionContext& ctx);

/// f'(t,0) = t^2 integral_0^1 (1-x) / ((1 - t(1-x)) (-ln x)) dx, -1 < t < 1.
QuadratureResult f_prime0_integral(const Real& t, const Real& tol, const PrecisionContext& ctx);

/// gamma = integral_0^1 (1/ln x + 1/(1-x)) dx.
QuadratureResult gamma_classical_integral(const Real& tol, const PrecisionContext& ctx);

/// gamma via int_0^1 f'(t,0)/t dt with the inner t-integral done analytically:
/// int_0^1 t u/(1-t u) dt = -1 - ln(1-u)/u at u = 1-x, then one quadrature in x.
QuadratureResult gamma_via_f_integral(const Real& tol, const PrecisionContext& ctx);

/// 1 via int_0^1 t^-2 f'(t,0) dt, inner integral int_0^1 u/(1-t u) dt = -ln(1-u);
/// the reduced x-integrand collapses to ln x / ln x.
QuadratureResult unity_via_f_integral(const Real& tol, const PrecisionContext& ctx);

// --- integrand helpers (continuity-extended at removable points) -----------

/// (1-x)/((1+x)(-ln x)); 0 at x=0, 1/2 at x=1.
Real integrand_ln_pi_over_2(const Real& x, const Real& one_minus_x, const PrecisionContext& ctx);

/// (1-x)/((1+xy)(-ln xy)); 0 on the singular set.
Real integrand_ln4_over_pi(const Real& x, const Real& one_minus_x, const Real& y,
                           const Real& one_minus_y, const PrecisionContext& ctx);

/// (1-x)/((1-xy)(-ln xy)); 0 at the (1,1) corner.
Real integrand_gamma_double(const Real& x, const Real& one_minus_x, const Real& y,
                            const Real& one_minus_y, const PrecisionContext& ctx);

/// 1/ln x + 1/(1-x); 1 at x=0, 1/2 at x=1. Near x=1 the two poles cancel;
/// evaluated by series there.
Real integrand_gamma_classical(const Real& x, const Real& one_minus_x, const PrecisionContext& ctx);

/// t^2 (1-x)/((1 - t(1-x))(-ln x)); 0 at x=0, t^2 at x=1.
Real integrand_f_prime0(const Real& t, const Real& x, const Real& one_minus_x,
                        const PrecisionContext& ctx);

/// int_0^1 t u/(1-t u) dt = -1 - ln(1-u)/u, series-evaluated for small u; 0 at u=0.
Real inner_t_integral_gamma(const Real& u, const PrecisionContext& ctx);

/// int_0^1 u/(1-t u) dt = -ln(1-u); 0 at u=0.
Real inner_t_integral_unity(const Real& u, const PrecisionContext& ctx);

}  // namespace zetaprod

#endif  // ZETAPROD_INTEGRALS_HPP
