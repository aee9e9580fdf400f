#include "zetaprod/products.hpp"

#include "zetaprod/constants.hpp"
#include "zetaprod/series.hpp"

namespace zetaprod {

Rational ProductSpec::exponent_schedule(long n) const {
    if (n < 1) throw domain_error("exponent schedule is defined for n >= 1");
    switch (kind_) {
        case ProductKind::egamma: return Rational{ExactInt(1), ExactInt(n + 1)};
        case ProductKind::sondow_pi: return Rational{ExactInt(1), ExactInt::two_pow(static_cast<unsigned long>(n))};
        case ProductKind::guillera_e: return Rational{ExactInt(1), ExactInt(n)};
        case ProductKind::wallis: return Rational{ExactInt(1), ExactInt(1)};
        case ProductKind::pippenger: return Rational{ExactInt(1), ExactInt::two_pow(static_cast<unsigned long>(n))};
    }
    throw domain_error("unknown product kind");
}

namespace detail {

namespace {

Real lngamma_of(const Real& x) {
    Real r(x.ctx());
    mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
    r.check_finite("lngamma");
    return r;
}

}  // namespace

Real pippenger_chain_log(long n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("pippenger chain index must be >= 1");
    // The closed form cancels terms of magnitude ~2^n ln 16 down to ~ln(pi/2),
    // losing ~0.302 n digits; same escalation rule as the binomial sums. The
    // escalation also keeps 2^n exactly representable.
    PrecisionContext work = ctx.escalated(cancellation_digits(n) + 4);
    ExactInt m = ExactInt::two_pow(static_cast<unsigned long>(n - 1)) - ExactInt(1);
    Real m_real(m, work);
    Real ln2 = log_ui(2, work);
    Real sum = ln2 + m_real * mul_2si(ln2, 2);  // ln 2 + M ln 16
    sum += lngamma_of(m_real + 1) * 3;          // 3 ln M!
    sum += lngamma_of(m_real + 2);              // ln (M+1)!
    sum -= mul_2si(lngamma_of(mul_2si(m_real, 1) + 2), 1);  // 2 ln (2M+1)!
    return sum.rounded_to(ctx);
}

Real pippenger_group_log(long n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("pippenger group index must be >= 1");
    if (n == 1) return log_ui(2, ctx);
    PrecisionContext work = ctx.escalated(8);
    return (pippenger_chain_log(n, work) - pippenger_chain_log(n - 1, work)).rounded_to(ctx);
}

}  // namespace detail

namespace {

Real wallis_partial(long N, const PrecisionContext& ctx) {
    PrecisionContext work = ctx.escalated(8);
    Real prod(1, work);
    for (long n = 0; n < N; ++n) {
        unsigned long even = 2 * static_cast<unsigned long>(n) + 2;
        mpfr_mul_ui(prod.raw(), prod.raw(), even * even, MPFR_RNDN);
        mpfr_div_ui(prod.raw(), prod.raw(), even - 1, MPFR_RNDN);
        mpfr_div_ui(prod.raw(), prod.raw(), even + 1, MPFR_RNDN);
    }
    prod.check_finite("wallis_partial");
    return prod.rounded_to(ctx);
}

}  // namespace

Real product_partial(const ProductSpec& spec, long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("product_partial requires N >= 1");
    PrecisionContext acc = ctx.escalated(8);
    switch (spec.kind()) {
        case ProductKind::wallis:
            return wallis_partial(N, ctx);
        case ProductKind::pippenger: {
            Real log_sum(acc);
            for (long n = 1; n <= N; ++n)
                log_sum += div_2si(detail::pippenger_group_log(n, acc), n);
            return exp(log_sum).rounded_to(ctx);
        }
        case ProductKind::egamma: {
            Real log_sum(acc);
            for (long n = 1; n <= N; ++n) log_sum += log_core(n, acc) / (n + 1);
            return exp(log_sum).rounded_to(ctx);
        }
        case ProductKind::sondow_pi: {
            Real log_sum(acc);
            for (long n = 1; n <= N; ++n) log_sum += div_2si(log_core(n, acc), n);
            return exp(log_sum).rounded_to(ctx);
        }
        case ProductKind::guillera_e: {
            Real log_sum(acc);
            for (long n = 1; n <= N; ++n) log_sum += log_core(n, acc) / n;
            return exp(log_sum).rounded_to(ctx);
        }
    }
    throw domain_error("unknown product kind");
}

Real product_limit_reference(ProductKind kind, const PrecisionContext& ctx) {
    switch (kind) {
        case ProductKind::egamma: return exp(reference_constant(ConstantName::gamma, ctx.escalated(4))).rounded_to(ctx);
        case ProductKind::sondow_pi:
        case ProductKind::wallis: return div_2si(reference_constant(ConstantName::pi, ctx), 1);
        case ProductKind::guillera_e: return reference_constant(ConstantName::e, ctx);
        case ProductKind::pippenger: return div_2si(reference_constant(ConstantName::e, ctx), 1);
    }
    throw unknown_constant_error("unknown product kind");
}

}  // namespace zetaprod
