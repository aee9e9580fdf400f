#include "zetaprod/altzeta.hpp"

#include <algorithm>

namespace zetaprod {

namespace detail {

std::vector<Complex> shifted_powers(const Complex& s, long N, const PrecisionContext& ctx) {
    // One escalation level covers every inner sum up to order N; the per-n
    // accumulators still run at their own (smaller) escalation.
    PrecisionContext esc = ctx.escalated(cancellation_digits(N) + 8);
    Complex minus_s = -s;
    std::vector<Complex> powers;
    powers.reserve(static_cast<size_t>(N) + 1);
    for (long k = 0; k <= N; ++k)
        powers.push_back(pow_of_ui(static_cast<unsigned long>(k) + 1, minus_s, esc));
    return powers;
}

std::vector<Complex> binom_power_sums(const Complex& s, long N, const PrecisionContext& ctx) {
    std::vector<Complex> powers = shifted_powers(s, N, ctx);
    std::vector<Complex> sums;
    sums.reserve(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n)
        sums.push_back(signed_binomial_sum(
            n, 0, std::span<const Complex>(powers.data(), static_cast<size_t>(n) + 1), ctx));
    return sums;
}

std::vector<Complex> binom_logpower_sums(const Complex& s, long N, const PrecisionContext& ctx) {
    PrecisionContext esc = ctx.escalated(cancellation_digits(N) + 8);
    Complex minus_s = -s;
    std::vector<Complex> values;
    values.reserve(static_cast<size_t>(N) + 1);
    for (long k = 0; k <= N; ++k) {
        Complex p = pow_of_ui(static_cast<unsigned long>(k) + 1, minus_s, esc);
        Real ln_k1 = log_ui(static_cast<unsigned long>(k) + 1, esc);
        values.push_back(Complex(p.re() * ln_k1, p.im() * ln_k1));
    }
    std::vector<Complex> sums;
    sums.reserve(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n)
        sums.push_back(signed_binomial_sum(
            n, 1, std::span<const Complex>(values.data(), static_cast<size_t>(n) + 1), ctx));
    return sums;
}

namespace {

// k^(-sigma) for real sigma, with short-cuts for the exponents that dominate
// the long Dirichlet partial sums.
Real real_power_term(unsigned long k, const Real& sigma, const PrecisionContext& work) {
    Real r(work);
    if (sigma == 1) {
        mpfr_ui_div(r.raw(), 1, Real(static_cast<long>(k), work).raw(), MPFR_RNDN);
        return r;
    }
    if (sigma == 2 && k < (1ul << 31)) {
        mpfr_set_ui(r.raw(), k * k, MPFR_RNDN);
        mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
        return r;
    }
    Real two_sigma = mul_2si(sigma, 1);
    if (two_sigma == 1) {  // sigma = 1/2: 1/sqrt(k)
        mpfr_set_ui(r.raw(), k, MPFR_RNDN);
        mpfr_rec_sqrt(r.raw(), r.raw(), MPFR_RNDN);
        return r;
    }
    Real neg_sigma = -sigma;
    mpfr_ui_pow(r.raw(), k, neg_sigma.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

}  // namespace detail

Complex alt_zeta_dirichlet(const ZetaArgument& s, long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("alt_zeta_dirichlet requires N >= 1");
    if (!(s.re() > 0))
        throw domain_error("alt_zeta_dirichlet requires Re(s) > 0 (Dirichlet series diverges)");

    // Slack for ~N rounded additions.
    long slack = 2;
    for (long m = N; m > 0; m /= 10) ++slack;
    PrecisionContext work = ctx.escalated(slack);

    if (s.im().is_zero()) {
        Real sigma = s.re().rounded_to(work);
        Real sum(work);
        for (long k = 1; k <= N; ++k) {
            Real term = detail::real_power_term(static_cast<unsigned long>(k), sigma, work);
            if (k % 2 == 1)
                mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
            else
                mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        }
        sum.check_finite("alt_zeta_dirichlet");
        return Complex(sum.rounded_to(ctx), Real(ctx));
    }

    Complex minus_s = -s;
    Real sum_re(work), sum_im(work);
    for (long k = 1; k <= N; ++k) {
        Complex term = pow_of_ui(static_cast<unsigned long>(k), minus_s, work);
        if (k % 2 == 1) {
            mpfr_add(sum_re.raw(), sum_re.raw(), term.re().raw(), MPFR_RNDN);
            mpfr_add(sum_im.raw(), sum_im.raw(), term.im().raw(), MPFR_RNDN);
        } else {
            mpfr_sub(sum_re.raw(), sum_re.raw(), term.re().raw(), MPFR_RNDN);
            mpfr_sub(sum_im.raw(), sum_im.raw(), term.im().raw(), MPFR_RNDN);
        }
    }
    sum_re.check_finite("alt_zeta_dirichlet");
    sum_im.check_finite("alt_zeta_dirichlet");
    return Complex(sum_re.rounded_to(ctx), sum_im.rounded_to(ctx));
}

Complex alt_zeta_global(const ZetaArgument& s, long N, const PrecisionContext& ctx) {
    if (N < 0) throw domain_error("alt_zeta_global requires N >= 0");
    std::vector<Complex> sums = detail::binom_power_sums(s, N, ctx);
    PrecisionContext acc = ctx.escalated(8);
    Real re(acc), im(acc);
    for (long n = 0; n <= N; ++n) {
        re += div_2si(sums[static_cast<size_t>(n)].re(), n + 1);
        im += div_2si(sums[static_cast<size_t>(n)].im(), n + 1);
    }
    return Complex(re.rounded_to(ctx), im.rounded_to(ctx));
}

Complex alt_zeta_deriv_global(const ZetaArgument& s, long N, const PrecisionContext& ctx) {
    if (N < 0) throw domain_error("alt_zeta_deriv_global requires N >= 0");
    std::vector<Complex> sums = detail::binom_logpower_sums(s, N, ctx);
    PrecisionContext acc = ctx.escalated(8);
    Real re(acc), im(acc);
    for (long n = 0; n <= N; ++n) {
        re += div_2si(sums[static_cast<size_t>(n)].re(), n + 1);
        im += div_2si(sums[static_cast<size_t>(n)].im(), n + 1);
    }
    return Complex(re.rounded_to(ctx), im.rounded_to(ctx));
}

Real ln_pi_over_2_series(long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("ln_pi_over_2_series requires N >= 1");
    PrecisionContext acc = ctx.escalated(8);
    Real sum(acc);
    for (long n = 1; n <= N; ++n) sum += div_2si(log_core(n, acc), n);
    return sum.rounded_to(ctx);
}

}  // namespace zetaprod
