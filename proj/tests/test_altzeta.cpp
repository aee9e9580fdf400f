#include <doctest.h>

#include "dirichlet_bracket.hpp"
#include "zetaprod/constants.hpp"

using namespace zetaprod;
using zetaprod_tests::bracket_terms;
using zetaprod_tests::dirichlet_midpoint;

namespace {

Real pow10(long e, const PrecisionContext& ctx) {
    Real r(10, ctx);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

Complex real_arg(const char* s, const PrecisionContext& ctx) {
    return Complex(Real::from_string(s, ctx));
}

}  // namespace

TEST_CASE("alt_zeta_dirichlet: spot values and domain") {
    PrecisionContext ctx = make_context(30);
    Real ln2 = reference_constant(ConstantName::ln2, ctx);
    Real pi = reference_constant(ConstantName::pi, ctx);

    Complex at_one = alt_zeta_dirichlet(real_arg("1", ctx), 1000000, ctx);
    CHECK(abs(at_one.re() - ln2) < pow10(-6, ctx));
    CHECK(at_one.im().is_zero());

    Complex at_two = alt_zeta_dirichlet(real_arg("2", ctx), 10000, ctx);
    Real pi_sq_12 = pi * pi / 12;
    CHECK(abs(at_two.re() - pi_sq_12) < pow10(-8, ctx));

    // two terms at s = 1/2: 1 - 2^(-1/2)
    Complex two_terms = alt_zeta_dirichlet(real_arg("0.5", ctx), 2, ctx);
    Real expected = 1 - 1 / sqrt(Real(2, ctx));
    CHECK(abs(two_terms.re() - expected) < pow10(-27, ctx));
    CHECK(abs(two_terms.re() - Real::from_string("0.2928932188", ctx)) < pow10(-10, ctx));

    CHECK_THROWS_AS(alt_zeta_dirichlet(real_arg("0", ctx), 10, ctx), domain_error);
    CHECK_THROWS_AS(alt_zeta_dirichlet(real_arg("-1", ctx), 10, ctx), domain_error);
    CHECK_THROWS_AS(alt_zeta_dirichlet(real_arg("1", ctx), 0, ctx), domain_error);
}

TEST_CASE("alt_zeta_global: closed forms at s = 0, 1, -1") {
    PrecisionContext ctx = make_context(30);
    Real ln2 = reference_constant(ConstantName::ln2, ctx);

    for (long N : {0L, 1L, 5L, 60L}) {
        Complex v = alt_zeta_global(real_arg("0", ctx), N, ctx);
        CHECK(abs(v.re() - div_2si(Real(1, ctx), 1)) < pow10(-27, ctx));
        CHECK(v.im().is_zero());
    }

    Complex at_one = alt_zeta_global(real_arg("1", ctx), 40, ctx);
    CHECK(abs(at_one.re() - ln2) < pow10(-12, ctx));

    // s = -1: the inner sums annihilate the degree-1 polynomial for n >= 2,
    // so the partial is exactly 1/2 - 1/4 = 1/4 from N = 1 on.
    Complex at_minus_one = alt_zeta_global(real_arg("-1", ctx), 60, ctx);
    Real quarter = div_2si(Real(1, ctx), 2);
    CHECK(abs(at_minus_one.re() - quarter) < pow10(-27, ctx));
    CHECK(abs(at_minus_one.re() - quarter) < pow10(-10, ctx));
}

TEST_CASE("global and Dirichlet series agree on the overlap") {
    PrecisionContext ctx = make_context(30);
    const double tol = 1e-8;
    Real tol_r = Real::from_string("1e-8", ctx);

    for (const char* s_str : {"1", "2", "3", "0.5"}) {
        CAPTURE(s_str);
        Complex s = real_arg(s_str, ctx);
        long n_terms = bracket_terms(s.re().to_double(), tol);
        Complex via_global = alt_zeta_global(s, 60, ctx);
        Complex via_dirichlet = dirichlet_midpoint(s, n_terms, ctx);
        CHECK(abs(via_global - via_dirichlet) < tol_r);
    }

    Complex s = parse_complex("1+1i", ctx);
    Complex via_global = alt_zeta_global(s, 60, ctx);
    Complex via_dirichlet = dirichlet_midpoint(s, bracket_terms(1.0, tol), ctx);
    CHECK(abs(via_global - via_dirichlet) < tol_r);
}

TEST_CASE("alt_zeta_deriv_global: ln(pi/2)/2 at s = 0 and a finite-difference probe at s = 1") {
    PrecisionContext ctx = make_context(40);
    Real pi = reference_constant(ConstantName::pi, ctx);
    Real half_ln_half_pi = div_2si(log(div_2si(pi, 1)), 1);

    Complex d0 = alt_zeta_deriv_global(real_arg("0", ctx), 40, ctx);
    CHECK(abs(d0.re() - half_ln_half_pi) < pow10(-10, ctx));
    CHECK(d0.im().is_zero());

    Complex d0_empty = alt_zeta_deriv_global(real_arg("0", ctx), 0, ctx);
    CHECK(d0_empty.re().is_zero());

    // central difference of the global series at s = 1, h = 1e-10
    Real h = pow10(-10, ctx);
    Complex up = alt_zeta_global(Complex(Real(1, ctx) + h), 50, ctx);
    Complex down = alt_zeta_global(Complex(Real(1, ctx) - h), 50, ctx);
    Real fd = div_2si((up.re() - down.re()) / h, 1);
    Complex d1 = alt_zeta_deriv_global(real_arg("1", ctx), 50, ctx);
    CHECK(abs(d1.re() - fd) < pow10(-8, ctx));
}

TEST_CASE("ln_pi_over_2_series: partials and limit") {
    PrecisionContext ctx = make_context(40);
    Real ln2 = reference_constant(ConstantName::ln2, ctx);
    Real pi = reference_constant(ConstantName::pi, ctx);

    Real one_term = ln_pi_over_2_series(1, ctx);
    CHECK(abs(one_term - div_2si(ln2, 1)) < pow10(-38, ctx));

    Real two_terms = ln_pi_over_2_series(2, ctx);
    Real expected = div_2si(ln2, 1) + div_2si(log(Real(4, ctx) / 3), 2);
    CHECK(abs(two_terms - expected) < pow10(-38, ctx));
    CHECK(abs(two_terms - Real::from_string("0.4184941084", ctx)) < pow10(-10, ctx));

    Real forty = ln_pi_over_2_series(40, ctx);
    CHECK(abs(forty - log(div_2si(pi, 1))) < pow10(-10, ctx));

    CHECK_THROWS_AS(ln_pi_over_2_series(0, ctx), domain_error);
}

TEST_CASE("ln_pi_over_2_series is twice the derivative series at s = 0") {
    PrecisionContext ctx = make_context(35);
    for (long N : {1L, 2L, 10L, 40L}) {
        Real series = ln_pi_over_2_series(N, ctx);
        Real doubled = mul_2si(alt_zeta_deriv_global(real_arg("0", ctx), N, ctx).re(), 1);
        CHECK(abs(series - doubled) < pow10(-(ctx.digits() - 3), ctx));
    }
}

TEST_CASE("global series at complex s is deterministic") {
    PrecisionContext ctx = make_context(30);
    Complex s = parse_complex("0.5+14.134725i", ctx);
    Complex a = alt_zeta_global(s, 50, ctx);
    Complex b = alt_zeta_global(s, 50, ctx);
    CHECK(mpfr_equal_p(a.re().raw(), b.re().raw()) != 0);
    CHECK(mpfr_equal_p(a.im().raw(), b.im().raw()) != 0);
}
