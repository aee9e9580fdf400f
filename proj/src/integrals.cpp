#include "zetaprod/integrals.hpp"

namespace zetaprod {

namespace {

// -ln x, through log1p(-(1-x)) when x is the side near 1. Positive on (0,1).
Real neg_log(const Real& x, const Real& xc, const PrecisionContext& ctx) {
    Real two_xc = mul_2si(xc, 1);
    if (two_xc <= 1) return -log1p(-xc);
    (void)ctx;
    return -log(x);
}

// Threshold below which the cancelling 1/ln(1-u) + 1/u forms switch to series.
bool tiny_for_series(const Real& u) { return mpfr_get_exp(u.raw()) < -20; }

}  // namespace

Real integrand_ln_pi_over_2(const Real& x, const Real& one_minus_x, const PrecisionContext& ctx) {
    if (x.is_zero()) return Real(ctx);
    if (one_minus_x.is_zero()) return div_2si(Real(1, ctx), 1);
    return one_minus_x / ((x + 1) * neg_log(x, one_minus_x, ctx));
}

Real integrand_ln4_over_pi(const Real& x, const Real& one_minus_x, const Real& y,
                           const Real& one_minus_y, const PrecisionContext& ctx) {
    if (one_minus_x.is_zero() || x.is_zero() || y.is_zero()) return Real(ctx);
    if (one_minus_y.is_zero() && one_minus_x.is_zero()) return Real(ctx);
    Real log_sum = neg_log(x, one_minus_x, ctx) + neg_log(y, one_minus_y, ctx);
    return one_minus_x / ((x * y + 1) * log_sum);
}

Real integrand_gamma_double(const Real& x, const Real& one_minus_x, const Real& y,
                            const Real& one_minus_y, const PrecisionContext& ctx) {
    if (x.is_zero() || y.is_zero()) return Real(ctx);
    if (one_minus_x.is_zero() && one_minus_y.is_zero()) return Real(ctx);
    // 1 - xy = xc + yc - xc*yc, exact to rounding even within 1e-100 of (1,1)
    Real one_minus_xy = one_minus_x + one_minus_y - one_minus_x * one_minus_y;
    Real log_sum = neg_log(x, one_minus_x, ctx) + neg_log(y, one_minus_y, ctx);
    return one_minus_x / (one_minus_xy * log_sum);
}

Real integrand_gamma_classical(const Real& x, const Real& one_minus_x, const PrecisionContext& ctx) {
    if (x.is_zero()) return Real(1, ctx);
    if (one_minus_x.is_zero()) return div_2si(Real(1, ctx), 1);
    if (tiny_for_series(one_minus_x)) {
        // (u + ln(1-u)) / (u ln(1-u)) = [sum u^m/(m+2)] / [sum u^m/(m+1)]
        const Real& u = one_minus_x;
        Real num(ctx), den(ctx), um(1, ctx);
        for (long m = 0;; ++m) {
            num += um / (m + 2);
            den += um / (m + 1);
            um *= u;
            if (um.is_zero() || mpfr_get_exp(um.raw()) < -(ctx.working_bits() + 8)) break;
        }
        return num / den;
    }
    PrecisionContext esc = ctx.escalated(12);
    Real xc = one_minus_x.rounded_to(esc);
    Real L = neg_log(x.rounded_to(esc), xc, esc);
    return (1 / xc - 1 / L).rounded_to(ctx);
}

Real integrand_f_prime0(const Real& t, const Real& x, const Real& one_minus_x,
                        const PrecisionContext& ctx) {
    Real t_sq = t * t;
    if (x.is_zero()) return Real(ctx);
    if (one_minus_x.is_zero()) return t_sq;  // xc/(-ln x) -> 1, 1 - t*xc -> 1
    Real denom = (1 - t * one_minus_x) * neg_log(x, one_minus_x, ctx);
    return t_sq * one_minus_x / denom;
}

namespace {

// sum_{m>=1} u^m/(m+1), the cancellation-free expansion of -1 - ln(1-u)/u.
Real inner_gamma_series(const Real& u, const PrecisionContext& ctx) {
    Real sum(ctx), um = u;
    for (long m = 1;; ++m) {
        sum += um / (m + 1);
        um *= u;
        if (um.is_zero() || mpfr_get_exp(um.raw()) < -(ctx.working_bits() + 8)) break;
    }
    return sum;
}

}  // namespace

Real inner_t_integral_gamma(const Real& u, const PrecisionContext& ctx) {
    if (u.is_zero()) return Real(ctx);
    if (!(u < 1)) throw domain_error("inner t-integral requires u < 1");
    if (tiny_for_series(u)) return inner_gamma_series(u, ctx);
    PrecisionContext esc = ctx.escalated(12);
    Real ue = u.rounded_to(esc);
    return (-log1p(-ue) / ue - 1).rounded_to(ctx);
}

Real inner_t_integral_unity(const Real& u, const PrecisionContext& ctx) {
    if (u.is_zero()) return Real(ctx);
    if (!(u < 1)) throw domain_error("inner t-integral requires u < 1");
    (void)ctx;
    return -log1p(-u);
}

QuadratureResult integral_ln_pi_over_2(const Real& tol, const PrecisionContext& ctx) {
    return integrate_unit_interval(
        [](const Real& x, const Real& xc, const PrecisionContext& work) {
            return integrand_ln_pi_over_2(x, xc, work);
        },
        tol, ctx);
}

QuadratureResult double_integral_ln4_over_pi(const Real& tol, const PrecisionContext& ctx) {
    return integrate_unit_square(
        [](const Real& x, const Real& xc, const Real& y, const Real& yc,
           const PrecisionContext& work) { return integrand_ln4_over_pi(x, xc, y, yc, work); },
        tol, ctx);
}

QuadratureResult double_integral_gamma(const Real& tol, const PrecisionContext& ctx) {
    return integrate_unit_square(
        [](const Real& x, const Real& xc, const Real& y, const Real& yc,
           const PrecisionContext& work) { return integrand_gamma_double(x, xc, y, yc, work); },
        tol, ctx);
}

QuadratureResult integral_I_2d(const Real& y_cutoff, const Real& tol, const PrecisionContext& ctx) {
    if (!(y_cutoff > 0)) throw domain_error("integral_I_2d requires y_cutoff > 0");

    QuadratureResult main = integrate_unit_square(
        [&y_cutoff](const Real& x, const Real& xc, const Real& v, const Real&,
                    const PrecisionContext& work) {
            if (x.is_zero() || xc.is_zero()) return Real(work);
            // y = y_cutoff * v; x^y * (1-x)/(1+x), Jacobian y_cutoff
            Real x_pow_y = exp(y_cutoff * v * log(x));
            return y_cutoff * x_pow_y * xc / (x + 1);
        },
        tol, ctx);

    QuadratureResult tail = integrate_unit_interval(
        [&y_cutoff](const Real& x, const Real& xc, const PrecisionContext& work) {
            if (x.is_zero() || xc.is_zero()) return Real(work);
            Real x_pow_y = exp(y_cutoff * log(x));
            return xc * x_pow_y / ((x + 1) * neg_log(x, xc, work));
        },
        tol, ctx);

    // The analytic tail equals the truncated mass exactly; carry it (with
    // headroom for its own quadrature error) inside the reported estimate.
    Real est = main.error_estimate + tail.value + div_2si(tail.value, 2) + tail.error_estimate * 2;
    return QuadratureResult{main.value, est.rounded_to(ctx), main.evaluations + tail.evaluations};
}

QuadratureResult f_prime0_integral(const Real& t, const Real& tol, const PrecisionContext& ctx) {
    if (!(t > -1 && t < 1)) throw domain_error("f_prime0_integral requires -1 < t < 1");
    return integrate_unit_interval(
        [&t](const Real& x, const Real& xc, const PrecisionContext& work) {
            return integrand_f_prime0(t, x, xc, work);
        },
        tol, ctx);
}

QuadratureResult gamma_classical_integral(const Real& tol, const PrecisionContext& ctx) {
    return integrate_unit_interval(
        [](const Real& x, const Real& xc, const PrecisionContext& work) {
            return integrand_gamma_classical(x, xc, work);
        },
        tol, ctx);
}

QuadratureResult gamma_via_f_integral(const Real& tol, const PrecisionContext& ctx) {
    // Inner integral written through L = -ln x (ln(1-u) at u = 1-x IS ln x),
    // so nodes within one ulp of x = 0 stay finite.
    return integrate_unit_interval(
        [](const Real& x, const Real& xc, const PrecisionContext& work) {
            if (x.is_zero()) return Real(1, work);
            if (xc.is_zero()) return div_2si(Real(1, work), 1);
            Real neg_ln_x = neg_log(x, xc, work);
            if (tiny_for_series(xc)) return inner_gamma_series(xc, work) / neg_ln_x;
            PrecisionContext esc = work.escalated(12);
            Real inner = neg_ln_x.rounded_to(esc) / xc.rounded_to(esc) - 1;
            return (inner.rounded_to(work)) / neg_ln_x;
        },
        tol, ctx);
}

QuadratureResult unity_via_f_integral(const Real& tol, const PrecisionContext& ctx) {
    // -ln(1-u) at u = 1-x is -ln x; the composed integrand is ln x / ln x.
    return integrate_unit_interval(
        [](const Real& x, const Real& xc, const PrecisionContext& work) {
            if (x.is_zero() || xc.is_zero()) return Real(1, work);
            Real inner = neg_log(x, xc, work);
            return inner / neg_log(x, xc, work);
        },
        tol, ctx);
}

}  // namespace zetaprod
