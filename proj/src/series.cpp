#include "zetaprod/series.hpp"

namespace zetaprod {

namespace detail {

namespace {

// Iterates C(n,0), C(n,1), ..., C(n,n) exactly.
class BinomialRow {
public:
    explicit BinomialRow(long n) : n_(n), k_(0), value_(1) {}

    const ExactInt& value() const { return value_; }

    void advance() {
        value_ *= static_cast<unsigned long>(n_ - k_);
        value_.divexact(static_cast<unsigned long>(k_ + 1));
        ++k_;
    }

private:
    long n_;
    long k_;
    ExactInt value_;
};

}  // namespace

Real signed_binomial_sum(long n, int parity,
                         const std::function<Real(long, const PrecisionContext&)>& g,
                         const PrecisionContext& ctx) {
    if (n < 0) throw domain_error("signed_binomial_sum requires n >= 0");
    PrecisionContext esc = ctx.escalated(cancellation_digits(n));
    Real pos(esc), neg(esc), term(esc);
    BinomialRow row(n);
    for (long k = 0; k <= n; ++k) {
        Real gk = g(k, esc);
        mpfr_mul_z(term.raw(), gk.raw(), row.value().raw(), MPFR_RNDN);
        if ((k + parity) % 2 == 0)
            mpfr_add(pos.raw(), pos.raw(), term.raw(), MPFR_RNDN);
        else
            mpfr_add(neg.raw(), neg.raw(), term.raw(), MPFR_RNDN);
        if (k < n) row.advance();
    }
    Real out = pos - neg;
    out.check_finite("signed_binomial_sum");
    return out.rounded_to(ctx);
}

Real signed_binomial_sum(long n, int parity, std::span<const Real> g, const PrecisionContext& ctx) {
    return signed_binomial_sum(
        n, parity, [&g](long k, const PrecisionContext&) { return g[static_cast<size_t>(k)]; }, ctx);
}

Complex signed_binomial_sum(long n, int parity, std::span<const Complex> g,
                            const PrecisionContext& ctx) {
    if (n < 0) throw domain_error("signed_binomial_sum requires n >= 0");
    PrecisionContext esc = ctx.escalated(cancellation_digits(n));
    Real pos_re(esc), neg_re(esc), pos_im(esc), neg_im(esc), term(esc);
    BinomialRow row(n);
    for (long k = 0; k <= n; ++k) {
        const Complex& gk = g[static_cast<size_t>(k)];
        bool positive = (k + parity) % 2 == 0;
        mpfr_mul_z(term.raw(), gk.re().raw(), row.value().raw(), MPFR_RNDN);
        mpfr_add((positive ? pos_re : neg_re).raw(), (positive ? pos_re : neg_re).raw(), term.raw(),
                 MPFR_RNDN);
        mpfr_mul_z(term.raw(), gk.im().raw(), row.value().raw(), MPFR_RNDN);
        mpfr_add((positive ? pos_im : neg_im).raw(), (positive ? pos_im : neg_im).raw(), term.raw(),
                 MPFR_RNDN);
        if (k < n) row.advance();
    }
    Real re = pos_re - neg_re;
    Real im = pos_im - neg_im;
    re.check_finite("signed_binomial_sum");
    im.check_finite("signed_binomial_sum");
    return Complex(re.rounded_to(ctx), im.rounded_to(ctx));
}

}  // namespace detail

Real log_core(long n, const PrecisionContext& ctx) {
    if (n < 1) throw domain_error("log_core requires n >= 1");
    return detail::signed_binomial_sum(
        n, 1, [](long k, const PrecisionContext& esc) { return log_ui(static_cast<unsigned long>(k) + 1, esc); },
        ctx);
}

Real alternating_partial(const SeriesSpec& series, long N, const PrecisionContext& ctx) {
    if (N < 1) throw domain_error("alternating_partial requires N >= 1");
    PrecisionContext acc_ctx = ctx.escalated(8);
    Real sum(acc_ctx);
    for (long n = 1; n <= N; ++n) {
        Real a = series.term(n, acc_ctx);
        if (n % 2 == 1)
            sum += a;
        else
            sum -= a;
    }
    return sum.rounded_to(ctx);
}

Real euler_transform_partial(const SeriesSpec& series, long N, const PrecisionContext& ctx) {
    if (N < 0) throw domain_error("euler_transform_partial requires N >= 0");
    PrecisionContext acc_ctx = ctx.escalated(8);
    Real sum(acc_ctx);
    for (long n = 0; n <= N; ++n) {
        Real inner = detail::signed_binomial_sum(
            n, 0,
            [&series](long k, const PrecisionContext& esc) { return series.term(k + 1, esc); },
            acc_ctx);
        sum += div_2si(inner, n + 1);
    }
    return sum.rounded_to(ctx);
}

ConvergenceTrace convergence_trace(const std::function<Real(long)>& partials, const Real& reference,
                                   long n_max, const PrecisionContext& ctx) {
    if (n_max < 1) throw domain_error("convergence_trace requires n_max >= 1");
    Real ref = reference.rounded_to(ctx);
    ConvergenceTrace trace;
    trace.entries.reserve(static_cast<size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        Real p = partials(n).rounded_to(ctx);
        Real err = abs(p - ref).rounded_to(ctx);
        trace.entries.push_back(TraceEntry{n, std::move(p), std::move(err)});
    }
    return trace;
}

}  // namespace zetaprod
