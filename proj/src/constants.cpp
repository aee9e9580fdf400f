#include "zetaprod/constants.hpp"

#include <algorithm>

namespace zetaprod {

namespace {

// All series below run at a context escalated by a fixed slack so the final
// rounding back to the caller's working precision absorbs accumulation error.
constexpr long kSlackDigits = 10;

// Working contexts for the oracles bypass the cancellation cap: these sums
// have no sign cancellation, and the oracle must not fail where the artifact
// series under test would.
PrecisionContext oracle_ctx(const PrecisionContext& ctx, long extra) {
    return PrecisionContext(ctx.working_digits() + extra, 0);
}

// Truncation threshold: stop once a term falls below 2^-(workbits + 16).
bool negligible(const Real& term, const PrecisionContext& work) {
    if (term.is_zero()) return true;
    return mpfr_get_exp(term.raw()) < -(work.working_bits() + 16);
}

// atan(1/m) for integer m >= 2 by the Taylor series sum (-1)^i / ((2i+1) m^(2i+1)).
Real arctan_inverse_ui(unsigned long m, const PrecisionContext& work) {
    Real p = 1 / Real(static_cast<long>(m), work);
    const unsigned long msq = m * m;
    Real sum(work);
    long i = 0;
    while (!negligible(p, work)) {
        Real term = p / (2 * i + 1);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
        mpfr_div_ui(p.raw(), p.raw(), msq, MPFR_RNDN);
        ++i;
    }
    return sum;
}

Real compute_pi(const PrecisionContext& work) {
    Real a5 = arctan_inverse_ui(5, work);
    Real a239 = arctan_inverse_ui(239, work);
    return mul_2si(a5, 4) - mul_2si(a239, 2);
}

// ln 2 = 2 * atanh(1/3) = 2 * sum 1/((2i+1) 3^(2i+1)).
Real compute_ln2(const PrecisionContext& work) {
    Real p = 1 / Real(3, work);
    Real sum(work);
    long i = 0;
    while (!negligible(p, work)) {
        sum += p / (2 * i + 1);
        mpfr_div_ui(p.raw(), p.raw(), 9, MPFR_RNDN);
        ++i;
    }
    return mul_2si(sum, 1);
}

Real compute_e(const PrecisionContext& work) {
    Real term(1, work);
    Real sum(1, work);
    unsigned long k = 1;
    while (!negligible(term, work)) {
        mpfr_div_ui(term.raw(), term.raw(), k, MPFR_RNDN);
        sum += term;
        ++k;
    }
    return sum;
}

// Brent-McMillan: gamma = A(n)/B(n) - ln n + O(e^{-4n}), where
//   B(n) = sum_k (n^k/k!)^2,  A(n) = sum_k (n^k/k!)^2 H_k.
// n is the smallest power of two with 4n >= working digits in nats (+ slack),
// so ln n = log2(n) * ln 2 comes from the atanh series above.
Real compute_gamma(const PrecisionContext& work) {
    const double nats = static_cast<double>(work.working_digits() + 8) * 2.302585093;
    long n = 8;
    long log2n = 3;
    while (4.0 * static_cast<double>(n) < nats) {
        n *= 2;
        ++log2n;
    }

    Real term(1, work);   // (n^k/k!)^2, starting at k = 0
    Real harmonic(work);  // H_k
    Real a(work);
    Real b(1, work);
    const unsigned long nsq = (n <= 46340) ? static_cast<unsigned long>(n) * static_cast<unsigned long>(n) : 0;
    Real n_real(n, work);

    for (unsigned long k = 1;; ++k) {
        if (nsq != 0) {
            mpfr_mul_ui(term.raw(), term.raw(), nsq, MPFR_RNDN);
        } else {
            term *= n_real;
            term *= n_real;
        }
        mpfr_div_ui(term.raw(), term.raw(), k, MPFR_RNDN);
        mpfr_div_ui(term.raw(), term.raw(), k, MPFR_RNDN);
        harmonic += Real(1, work) / static_cast<long>(k);
        b += term;
        a += term * harmonic;
        // Terms peak near k = n and then decay; stop once past the peak and
        // negligible relative to B's magnitude ~ e^{2n}.
        if (static_cast<long>(k) > n && mpfr_get_exp(term.raw()) <
                                            mpfr_get_exp(b.raw()) - (work.working_bits() + 16))
            break;
    }
    return a / b - Real(log2n, work) * compute_ln2(work);
}

}  // namespace

Real reference_constant(ConstantName name, const PrecisionContext& ctx) {
    PrecisionContext work = oracle_ctx(ctx, kSlackDigits);
    Real value(work);
    switch (name) {
        case ConstantName::pi: value = compute_pi(work); break;
        case ConstantName::gamma: value = compute_gamma(work); break;
        case ConstantName::e: value = compute_e(work); break;
        case ConstantName::ln2: value = compute_ln2(work); break;
    }
    return value.rounded_to(ctx);
}

Real reference_constant(std::string_view name, const PrecisionContext& ctx) {
    if (name == "pi") return reference_constant(ConstantName::pi, ctx);
    if (name == "gamma") return reference_constant(ConstantName::gamma, ctx);
    if (name == "e") return reference_constant(ConstantName::e, ctx);
    if (name == "ln2") return reference_constant(ConstantName::ln2, ctx);
    throw unknown_constant_error("unknown constant: " + std::string(name));
}

}  // namespace zetaprod
