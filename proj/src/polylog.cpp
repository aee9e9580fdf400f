#include "zetaprod/polylog.hpp"

#include "zetaprod/altzeta.hpp"
#include "zetaprod/series.hpp"

namespace zetaprod {

Complex f_series(const FArgument& arg, long N, const PrecisionContext& ctx) {
    if (N < 0) throw domain_error("f_series requires N >= 0");
    if (!(arg.t > -1 && arg.t < 1)) throw domain_error("f_series requires -1 < t < 1");
    std::vector<Complex> sums = detail::binom_power_sums(arg.s, N, ctx);
    PrecisionContext acc = ctx.escalated(8);
    Real re(acc), im(acc);
    Real t_pow = arg.t.rounded_to(acc);  // t^(n+1), starting at n = 0
    for (long n = 0; n <= N; ++n) {
        re += t_pow * sums[static_cast<size_t>(n)].re();
        im += t_pow * sums[static_cast<size_t>(n)].im();
        t_pow *= arg.t;
    }
    return Complex(re.rounded_to(ctx), im.rounded_to(ctx));
}

Complex F_series(const Real& t, const Complex& s, long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("F_series requires N >= 1");
    if (!(t >= -1 && t < 1)) throw domain_error("F_series requires -1 <= t < 1");
    if (t == -1 && !(s.re() > 0)) throw domain_error("F_series at t = -1 requires Re(s) > 0");

    long slack = 2;
    for (long m = N; m > 0; m /= 10) ++slack;
    PrecisionContext work = ctx.escalated(slack);

    Complex minus_s = -s;
    Real t_pow = t.rounded_to(work);
    Real re(work), im(work);
    const bool real_s = s.im().is_zero();
    for (long k = 1; k <= N; ++k) {
        Complex p = pow_of_ui(static_cast<unsigned long>(k), minus_s, work);
        re += t_pow * p.re();
        if (!real_s) im += t_pow * p.im();
        t_pow *= t;
    }
    return Complex(re.rounded_to(ctx), im.rounded_to(ctx));
}

Complex f_via_F(const FArgument& arg, long N, const PrecisionContext& ctx) {
    if (!(arg.t > -1) || arg.t > div_2si(Real(1, ctx), 1))
        throw domain_error("f_via_F requires -1 < t <= 1/2");
    PrecisionContext work = ctx.escalated(4);
    Real mapped = arg.t.rounded_to(work) / (arg.t - 1);
    Complex value = F_series(mapped, arg.s, N, work);
    return Complex((-value.re()).rounded_to(ctx), (-value.im()).rounded_to(ctx));
}

Real f_prime0_series(const Real& t, long N, const PrecisionContext& ctx) {
    if (N < 0) throw domain_error("f_prime0_series requires N >= 0");
    if (!(t > -1 && t < 1)) throw domain_error("f_prime0_series requires -1 < t < 1");
    PrecisionContext acc = ctx.escalated(8);
    Real sum(acc);
    Real t_pow = (t * t).rounded_to(acc);  // t^(n+1) from n = 1
    for (long n = 1; n <= N; ++n) {
        sum += t_pow * log_core(n, acc);
        t_pow *= t;
    }
    return sum.rounded_to(ctx);
}

Real gamma_series_via_f(long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("gamma_series_via_f requires N >= 1");
    PrecisionContext acc = ctx.escalated(8);
    Real sum(acc);
    for (long n = 1; n <= N; ++n) sum += log_core(n, acc) / (n + 1);
    return sum.rounded_to(ctx);
}

}  // namespace zetaprod
