#include <doctest.h>

#include "zetaprod/altzeta.hpp"
#include "zetaprod/constants.hpp"
#include "zetaprod/products.hpp"
#include "zetaprod/series.hpp"

using namespace zetaprod;

namespace {

Real pow10(long e, const PrecisionContext& ctx) {
    Real r(10, ctx);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

// Product of the chain ratios (2*ceil(j/2))/(2*floor(j/2)+1) for group n,
// j in [2^(n-1), 2^n - 1], multiplied out one by one.
Real pippenger_group_direct(long n, const PrecisionContext& ctx) {
    Real prod(1, ctx);
    long j_lo = 1L << (n - 1);
    long j_hi = (1L << n) - 1;
    for (long j = j_lo; j <= j_hi; ++j) {
        unsigned long num = 2 * static_cast<unsigned long>((j + 1) / 2);
        unsigned long den = 2 * static_cast<unsigned long>(j / 2) + 1;
        mpfr_mul_ui(prod.raw(), prod.raw(), num, MPFR_RNDN);
        mpfr_div_ui(prod.raw(), prod.raw(), den, MPFR_RNDN);
    }
    return prod;
}

}  // namespace

TEST_CASE("exponent schedules match their kinds") {
    auto egamma = ProductSpec::make(ProductKind::egamma);
    auto sondow = ProductSpec::make(ProductKind::sondow_pi);
    auto guillera = ProductSpec::make(ProductKind::guillera_e);
    auto wallis = ProductSpec::make(ProductKind::wallis);
    auto pippenger = ProductSpec::make(ProductKind::pippenger);

    for (long n : {1L, 2L, 7L, 40L, 80L}) {
        CHECK(egamma.exponent_schedule(n).num == ExactInt(1));
        CHECK(egamma.exponent_schedule(n).den == ExactInt(n + 1));
        CHECK(sondow.exponent_schedule(n).den == ExactInt::two_pow(static_cast<unsigned long>(n)));
        CHECK(guillera.exponent_schedule(n).den == ExactInt(n));
        CHECK(wallis.exponent_schedule(n).den == ExactInt(1));
        CHECK(pippenger.exponent_schedule(n).den ==
              ExactInt::two_pow(static_cast<unsigned long>(n)));
    }
    CHECK_THROWS_AS(egamma.exponent_schedule(0), domain_error);
}

TEST_CASE("product_partial: first factors") {
    PrecisionContext ctx = make_context(40);
    Real tol = pow10(-35, ctx);
    Real sqrt2 = sqrt(Real(2, ctx));
    Real ln_4_3 = log(Real(4, ctx) / 3);

    Real sondow1 = product_partial(ProductSpec::make(ProductKind::sondow_pi), 1, ctx);
    CHECK(abs(sondow1 - sqrt2) < tol);
    CHECK(abs(sondow1 - Real::from_string("1.4142135624", ctx)) < pow10(-10, ctx));

    Real sondow2 = product_partial(ProductSpec::make(ProductKind::sondow_pi), 2, ctx);
    CHECK(abs(sondow2 - sqrt2 * exp(div_2si(ln_4_3, 2))) < tol);
    CHECK(abs(sondow2 - Real::from_string("1.5196713713", ctx)) < pow10(-10, ctx));

    Real egamma2 = product_partial(ProductSpec::make(ProductKind::egamma), 2, ctx);
    CHECK(abs(egamma2 - sqrt2 * exp(ln_4_3 / 3)) < tol);

    Real guillera1 = product_partial(ProductSpec::make(ProductKind::guillera_e), 1, ctx);
    CHECK(abs(guillera1 - Real(2, ctx)) < tol);

    Real wallis2 = product_partial(ProductSpec::make(ProductKind::wallis), 2, ctx);
    CHECK(abs(wallis2 - Real(64, ctx) / 45) < tol);

    Real pip1 = product_partial(ProductSpec::make(ProductKind::pippenger), 1, ctx);
    CHECK(abs(pip1 - sqrt2) < tol);

    CHECK_THROWS_AS(product_partial(ProductSpec::make(ProductKind::wallis), 0, ctx), domain_error);
}

TEST_CASE("pippenger closed form against direct group products") {
    PrecisionContext ctx = make_context(40);
    Real tol = pow10(-33, ctx);
    for (long n = 1; n <= 12; ++n) {
        Real direct = log(pippenger_group_direct(n, ctx.escalated(8)));
        CHECK(abs(detail::pippenger_group_log(n, ctx) - direct.rounded_to(ctx)) < tol);
    }

    // end to end for small N: multiply groups and take the 2^n-th roots
    for (long N : {1L, 3L, 6L, 10L}) {
        Real direct_log(ctx.escalated(8));
        for (long n = 1; n <= N; ++n)
            direct_log += div_2si(log(pippenger_group_direct(n, ctx.escalated(8))), n);
        Real expected = exp(direct_log).rounded_to(ctx);
        Real got = product_partial(ProductSpec::make(ProductKind::pippenger), N, ctx);
        CHECK(abs(got - expected) < tol);
    }
}

TEST_CASE("factor bases as exact rationals match exp(log_core) for n <= 10") {
    PrecisionContext ctx = make_context(40);
    Real tol = pow10(-(ctx.digits() - 5), ctx);
    for (long n = 1; n <= 10; ++n) {
        ExactInt num(1), den(1);
        for (long k = 0; k <= n; ++k) {
            ExactInt c = binomial(n, k);
            ExactInt p = ExactInt::pow(ExactInt(k + 1), static_cast<unsigned long>(c.to_long()));
            if (k % 2 == 1)
                num *= p;
            else
                den *= p;
        }
        Real rational_base = Real(num, ctx) / Real(den, ctx);
        CHECK(abs(exp(log_core(n, ctx)) - rational_base) < tol);
    }
}

TEST_CASE("product limits come from the reference oracles") {
    PrecisionContext ctx = make_context(30);
    Real pi = reference_constant(ConstantName::pi, ctx);
    Real e = reference_constant(ConstantName::e, ctx);
    Real gamma = reference_constant(ConstantName::gamma, ctx);
    Real tol = pow10(-27, ctx);

    CHECK(abs(product_limit_reference(ProductKind::sondow_pi, ctx) - div_2si(pi, 1)) < tol);
    CHECK(abs(product_limit_reference(ProductKind::wallis, ctx) - div_2si(pi, 1)) < tol);
    CHECK(abs(product_limit_reference(ProductKind::guillera_e, ctx) - e) < tol);
    CHECK(abs(product_limit_reference(ProductKind::pippenger, ctx) - div_2si(e, 1)) < tol);
    CHECK(abs(product_limit_reference(ProductKind::egamma, ctx) - exp(gamma)) < tol);

    CHECK(abs(product_limit_reference(ProductKind::sondow_pi, ctx) -
              Real::from_string("1.5707963268", ctx)) < pow10(-10, ctx));
    CHECK(abs(product_limit_reference(ProductKind::egamma, ctx) -
              Real::from_string("1.7810724180", ctx)) < pow10(-10, ctx));
    CHECK(abs(product_limit_reference(ProductKind::pippenger, ctx) -
              Real::from_string("1.3591409142", ctx)) < pow10(-10, ctx));
}

TEST_CASE("errors shrink along every product family") {
    PrecisionContext ctx = make_context(40);
    for (ProductKind kind : {ProductKind::sondow_pi, ProductKind::wallis, ProductKind::pippenger}) {
        Real limit = product_limit_reference(kind, ctx);
        Real prev_err(ctx);
        for (long n = 1; n <= 40; ++n) {
            Real err = abs(product_partial(ProductSpec::make(kind), n, ctx) - limit);
            if (n >= 2) CHECK(err < prev_err);
            prev_err = err;
        }
    }
    // The slow families are checked through incremental log sums (recomputing
    // every partial from scratch is cubic); the final partial is then compared
    // bit-for-bit against product_partial, which walks the same path.
    PrecisionContext big = make_context(120);
    PrecisionContext acc = big.escalated(8);
    for (ProductKind kind : {ProductKind::egamma, ProductKind::guillera_e}) {
        Real limit = product_limit_reference(kind, big);
        Real log_sum(acc);
        Real prev_err(big);
        for (long n = 1; n <= 200; ++n) {
            log_sum += log_core(n, acc) / (kind == ProductKind::egamma ? n + 1 : n);
            Real err = abs(exp(log_sum).rounded_to(big) - limit);
            if (n >= 2) CHECK(err < prev_err);
            prev_err = err;
        }
        Real via_api = product_partial(ProductSpec::make(kind), 200, big);
        CHECK(mpfr_equal_p(via_api.raw(), exp(log_sum).rounded_to(big).raw()) != 0);
    }
}

TEST_CASE("the 2^-n exponent schedule beats Wallis factor by factor (2..25)") {
    PrecisionContext ctx = make_context(40);
    Real half_pi = product_limit_reference(ProductKind::sondow_pi, ctx);
    for (long n = 2; n <= 25; ++n) {
        Real sondow_err =
            abs(product_partial(ProductSpec::make(ProductKind::sondow_pi), n, ctx) - half_pi);
        Real wallis_err =
            abs(product_partial(ProductSpec::make(ProductKind::wallis), n, ctx) - half_pi);
        CHECK(sondow_err < wallis_err);
    }
}

TEST_CASE("rate ordering at N = 100: geometric schedules beat harmonic ones") {
    PrecisionContext ctx = make_context(120);
    auto err = [&ctx](ProductKind kind, long n) {
        return abs(product_partial(ProductSpec::make(kind), n, ctx) -
                   product_limit_reference(kind, ctx));
    };
    CHECK(err(ProductKind::sondow_pi, 100) < err(ProductKind::egamma, 100));
    CHECK(err(ProductKind::pippenger, 100) < err(ProductKind::guillera_e, 100));
}

TEST_CASE("exponentiated log series reproduces the sondow partial products") {
    PrecisionContext ctx = make_context(40);
    Real tol = pow10(-(ctx.digits() - 5), ctx);
    for (long N : {1L, 2L, 10L, 40L}) {
        Real via_series = exp(ln_pi_over_2_series(N, ctx));
        Real via_product = product_partial(ProductSpec::make(ProductKind::sondow_pi), N, ctx);
        CHECK(abs(via_series - via_product) < tol);
    }
}

TEST_CASE("slow products fail loudly when the context cannot fund them") {
    PrecisionContext ctx = make_context(30);  // escalation allowance: 40 digits
    CHECK_THROWS_AS(product_partial(ProductSpec::make(ProductKind::egamma), 200, ctx),
                    precision_exhausted_error);
    CHECK_NOTHROW(product_partial(ProductSpec::make(ProductKind::egamma), 80, ctx));
}
