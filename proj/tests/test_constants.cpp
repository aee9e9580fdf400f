#include <doctest.h>

#include "zetaprod/constants.hpp"

using namespace zetaprod;

namespace {

Real mpfr_builtin(ConstantName name, const PrecisionContext& ctx) {
    Real r(ctx);
    switch (name) {
        case ConstantName::pi: mpfr_const_pi(r.raw(), MPFR_RNDN); break;
        case ConstantName::gamma: mpfr_const_euler(r.raw(), MPFR_RNDN); break;
        case ConstantName::ln2: mpfr_const_log2(r.raw(), MPFR_RNDN); break;
        case ConstantName::e: {
            Real one(1, ctx);
            mpfr_exp(r.raw(), one.raw(), MPFR_RNDN);
            break;
        }
    }
    return r;
}

}  // namespace

TEST_CASE("reference constants match published digits") {
    // Rounded published values; the oracle must reproduce them exactly under
    // fixed significant-digit formatting.
    CHECK(to_decimal_string(reference_constant("pi", make_context(30)), 30) ==
          "3.14159265358979323846264338328");
    CHECK(to_decimal_string(reference_constant("gamma", make_context(20)), 20) ==
          "0.57721566490153286061");
    CHECK(to_decimal_string(reference_constant("ln2", make_context(20)), 20) ==
          "0.69314718055994530942");
    CHECK(to_decimal_string(reference_constant("e", make_context(20)), 20) ==
          "2.7182818284590452354");
}

TEST_CASE("reference constants agree with an independent implementation to 120 digits") {
    PrecisionContext ctx = make_context(120);
    Real tol = div_2si(Real(1, ctx), ctx.working_bits() - 12);
    for (ConstantName name :
         {ConstantName::pi, ConstantName::gamma, ConstantName::e, ConstantName::ln2}) {
        Real mine = reference_constant(name, ctx);
        Real theirs = mpfr_builtin(name, ctx);
        CHECK(abs(mine - theirs) < tol);
    }
}

TEST_CASE("reference constants are bit-for-bit reproducible") {
    PrecisionContext ctx = make_context(75, 3);
    for (ConstantName name :
         {ConstantName::pi, ConstantName::gamma, ConstantName::e, ConstantName::ln2}) {
        Real a = reference_constant(name, ctx);
        Real b = reference_constant(name, ctx);
        CHECK(mpfr_equal_p(a.raw(), b.raw()) != 0);
        CHECK(mpfr_get_prec(a.raw()) == ctx.working_bits());
    }
}

TEST_CASE("unknown constant name") {
    CHECK_THROWS_AS(reference_constant("phi", make_context(20)), unknown_constant_error);
}
