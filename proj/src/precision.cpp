#include "zetaprod/precision.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace zetaprod {

// ---------------------------------------------------------------------------
// PrecisionContext
// ---------------------------------------------------------------------------

PrecisionContext::PrecisionContext(long digits, std::optional<long> guard) {
    if (digits < 10) throw invalid_precision_error("precision must be at least 10 digits");
    long g = guard.value_or(std::max<long>(10, digits / 10));
    if (g < 0) throw invalid_precision_error("guard digits must be non-negative");
    digits_ = digits;
    guard_ = g;
    cap_ = 2 * (digits_ + guard_);
}

mpfr_prec_t PrecisionContext::working_bits() const {
    // ceil(working_digits * log2(10)) plus a fixed margin of 8 bits.
    long wd = working_digits();
    long bits = (wd * 33220 + 9999) / 10000 + 8;
    return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
}

PrecisionContext PrecisionContext::escalated(long extra) const {
    if (extra < 0) extra = 0;
    long need = working_digits() + extra;
    if (need > cap_) {
        throw precision_exhausted_error(
            "working precision exhausted: needs " + std::to_string(need - cap_) +
                " more working digits (requested " + std::to_string(need) + ", context allows " +
                std::to_string(cap_) + ")",
            need - cap_);
    }
    return PrecisionContext(digits_, guard_ + extra, cap_);
}

PrecisionContext make_context(long digits, std::optional<long> guard) {
    return PrecisionContext(digits, guard);
}

long cancellation_digits(long n) {
    if (n <= 0) return 0;
    return (n * 302 + 999) / 1000;  // ceil(n * 0.302)
}

// ---------------------------------------------------------------------------
// ExactInt
// ---------------------------------------------------------------------------

ExactInt ExactInt::from_string(const std::string& s) {
    ExactInt r;
    if (mpz_set_str(r.z_, s.c_str(), 10) != 0) throw domain_error("malformed integer literal: " + s);
    return r;
}

std::string ExactInt::to_string() const {
    char* raw = mpz_get_str(nullptr, 10, z_);
    std::string s(raw);
    std::free(raw);
    return s;
}

ExactInt binomial(long n, long k) {
    if (n < 0) throw domain_error("binomial requires n >= 0");
    if (k < 0 || k > n) return ExactInt(0);
    ExactInt r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// ---------------------------------------------------------------------------
// Real
// ---------------------------------------------------------------------------

namespace {

inline const PrecisionContext& wider(const PrecisionContext& a, const PrecisionContext& b) {
    return b.working_digits() > a.working_digits() ? b : a;
}

}  // namespace

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
        ctx_ = other.ctx_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(x_, other.x_);
    ctx_ = other.ctx_;
    return *this;
}

Real Real::from_string(std::string_view s, const PrecisionContext& ctx) {
    Real r(ctx);
    std::string buf(s);
    char* end = nullptr;
    if (mpfr_strtofr(r.x_, buf.c_str(), &end, 10, MPFR_RNDN) != 0 && end == buf.c_str())
        throw domain_error("malformed number: " + buf);
    if (end == nullptr || *end != '\0' || end == buf.c_str())
        throw domain_error("malformed number: " + buf);
    r.check_finite("parse");
    return r;
}

Real Real::from_double(double d, const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_set_d(r.x_, d, MPFR_RNDN);
    r.check_finite("from_double");
    return r;
}

void Real::check_finite(const char* op) const {
    if (!mpfr_number_p(x_))
        throw arithmetic_error(std::string("non-finite result in ") + op);
}

Real Real::rounded_to(const PrecisionContext& ctx) const {
    Real r(ctx);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    r.check_finite("round");
    return r;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
}

#define ZP_BINOP(name, fn)                                     \
    Real operator name(const Real& a, const Real& b) {         \
        Real r(wider(a.ctx_, b.ctx_));                         \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                       \
        r.check_finite(#name);                                 \
        return r;                                              \
    }

ZP_BINOP(+, mpfr_add)
ZP_BINOP(-, mpfr_sub)
ZP_BINOP(*, mpfr_mul)
ZP_BINOP(/, mpfr_div)
#undef ZP_BINOP

Real operator+(const Real& a, long b) {
    Real r(a.ctx_);
    mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
    r.check_finite("+");
    return r;
}
Real operator-(const Real& a, long b) {
    Real r(a.ctx_);
    mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
    r.check_finite("-");
    return r;
}
Real operator-(long a, const Real& b) {
    Real r(b.ctx_);
    mpfr_si_sub(r.x_, a, b.x_, MPFR_RNDN);
    r.check_finite("-");
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.ctx_);
    mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
    r.check_finite("*");
    return r;
}
Real operator/(const Real& a, long b) {
    if (b == 0) throw arithmetic_error("division by zero");
    Real r(a.ctx_);
    mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
    r.check_finite("/");
    return r;
}
Real operator/(long a, const Real& b) {
    if (b.is_zero()) throw arithmetic_error("division by zero");
    Real r(b.ctx_);
    mpfr_si_div(r.x_, a, b.x_, MPFR_RNDN);
    r.check_finite("/");
    return r;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    check_finite("+=");
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    check_finite("-=");
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    check_finite("*=");
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    check_finite("/=");
    return *this;
}

#define ZP_UNFN(name, fn)                  \
    Real name(const Real& a) {             \
        Real r(a.ctx());                   \
        fn(r.raw(), a.raw(), MPFR_RNDN);   \
        r.check_finite(#name);             \
        return r;                          \
    }

ZP_UNFN(abs, mpfr_abs)
ZP_UNFN(sqrt, mpfr_sqrt)
ZP_UNFN(exp, mpfr_exp)
ZP_UNFN(expm1, mpfr_expm1)
ZP_UNFN(log, mpfr_log)
ZP_UNFN(log1p, mpfr_log1p)
ZP_UNFN(sinh, mpfr_sinh)
ZP_UNFN(cosh, mpfr_cosh)
#undef ZP_UNFN

Real pow(const Real& base, const Real& e) {
    Real r(wider(base.ctx(), e.ctx()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    r.check_finite("pow");
    return r;
}

Real hypot(const Real& a, const Real& b) {
    Real r(wider(a.ctx(), b.ctx()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.check_finite("hypot");
    return r;
}

Real mul_2si(const Real& a, long k) {
    Real r(a.ctx());
    mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
    r.check_finite("mul_2si");
    return r;
}

Real div_2si(const Real& a, long k) {
    Real r(a.ctx());
    mpfr_div_2si(r.raw(), a.raw(), k, MPFR_RNDN);
    r.check_finite("div_2si");
    return r;
}

Real log_ui(unsigned long n, const PrecisionContext& ctx) {
    if (n == 0) throw domain_error("log of zero");
    Real r(ctx);
    mpfr_log_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

Real const_pi(const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------------------
// Decimal formatting
// ---------------------------------------------------------------------------

std::string to_decimal_string(const Real& x, long significant_digits) {
    if (significant_digits < 2) significant_digits = 2;
    const size_t sig = static_cast<size_t>(significant_digits);

    if (x.is_zero()) {
        std::string s = "0.";
        s.append(sig - 1, '0');
        return s;
    }

    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, sig, x.raw(), MPFR_RNDN);
    if (raw == nullptr) throw arithmetic_error("decimal conversion failed");
    std::string digits(raw);
    mpfr_free_str(raw);

    bool negative = false;
    if (!digits.empty() && digits[0] == '-') {
        negative = true;
        digits.erase(digits.begin());
    }
    // mpfr convention: value = 0.<digits> * 10^e
    long point = static_cast<long>(e);

    std::string body;
    if (point >= -3 && point <= 21) {
        if (point <= 0) {
            body = "0.";
            body.append(static_cast<size_t>(-point), '0');
            body += digits;
        } else if (static_cast<size_t>(point) >= digits.size()) {
            body = digits;
            body.append(static_cast<size_t>(point) - digits.size(), '0');
            body += ".0";
        } else {
            body = digits.substr(0, static_cast<size_t>(point)) + "." +
                   digits.substr(static_cast<size_t>(point));
        }
    } else {
        long sci = point - 1;  // exponent with one digit before the point
        body = digits.substr(0, 1) + "." + digits.substr(1) + "e" + (sci < 0 ? "-" : "+");
        std::string mag = std::to_string(sci < 0 ? -sci : sci);
        if (mag.size() < 2) mag.insert(mag.begin(), '0');
        body += mag;
    }
    return negative ? "-" + body : body;
}

// ---------------------------------------------------------------------------
// Complex
// ---------------------------------------------------------------------------

Real abs(const Complex& a) { return hypot(a.re(), a.im()); }

Complex pow_of_ui(unsigned long base, const Complex& exponent, const PrecisionContext& ctx) {
    if (base == 0) throw domain_error("pow_of_ui requires base >= 1");
    if (base == 1) return Complex(Real(1, ctx), Real(ctx));
    Real ln_base = log_ui(base, ctx);
    Real mag = exp(exponent.re() * ln_base);
    if (exponent.im().is_zero()) return Complex(mag, Real(ctx));
    Real theta = exponent.im() * ln_base;
    Real c(ctx), s(ctx);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return Complex(mag * c, mag * s);
}

Complex parse_complex(std::string_view sv, const PrecisionContext& ctx) {
    std::string s;
    for (char c : sv)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw domain_error("empty complex literal");

    auto parse_coeff = [&](std::string t, long fallback) -> Real {
        if (t.empty() || t == "+") return Real(fallback, ctx);
        if (t == "-") return Real(-fallback, ctx);
        return Real::from_string(t, ctx);
    };

    if (s.back() == 'i' || s.back() == 'I') {
        std::string t = s.substr(0, s.size() - 1);
        // split "a+b" / "a-b" on the last sign that is not the leading one and
        // not part of an exponent marker
        for (size_t pos = t.size(); pos-- > 1;) {
            char c = t[pos];
            if ((c == '+' || c == '-') && t[pos - 1] != 'e' && t[pos - 1] != 'E') {
                Real re = Real::from_string(t.substr(0, pos), ctx);
                Real im = parse_coeff(t.substr(pos), 1);
                return Complex(std::move(re), std::move(im));
            }
        }
        return Complex(Real(ctx), parse_coeff(t, 1));
    }
    return Complex(Real::from_string(s, ctx), Real(ctx));
}

std::string to_decimal_string(const Complex& z, long significant_digits) {
    if (z.is_real()) return to_decimal_string(z.re(), significant_digits);
    std::string im = to_decimal_string(z.im(), significant_digits);
    std::string sep = (!im.empty() && im[0] == '-') ? "" : "+";
    return to_decimal_string(z.re(), significant_digits) + sep + im + "i";
}

}  // namespace zetaprod
