#ifndef ZETAPROD_PRECISION_HPP
#define ZETAPROD_PRECISION_HPP

#include <gmp.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace zetaprod {

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_precision_error : public error {
public:
    using error::error;
};

class unknown_constant_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

// A public operation produced a non-finite value.
class arithmetic_error : public error {
public:
    using error::error;
};

// The requested computation needs more working digits than the context allows.
class precision_exhausted_error : public error {
public:
    precision_exhausted_error(const std::string& what, long required_extra)
        : error(what), required_extra_digits_(required_extra) {}

    /// How many additional working digits the context would need.
    long required_extra_digits() const { return required_extra_digits_; }

private:
    long required_extra_digits_;
};

// ---------------------------------------------------------------------------
// PrecisionContext
// ---------------------------------------------------------------------------

/// Working-precision policy for every arithmetic operation.
///
/// A context promises `digits` significant decimal digits and carries `guard`
/// extra working digits on top. Cancellation-heavy kernels (the binomial
/// inner sums) escalate further via escalated(); escalation is bounded by
/// max_working_digits(), which is fixed at construction to twice the working
/// digits. Exceeding the bound raises precision_exhausted_error naming the
/// shortfall, so a too-small context fails loudly instead of returning noise.
class PrecisionContext {
public:
    /// digits >= 10 required; default guard is max(10, digits / 10).
    explicit PrecisionContext(long digits, std::optional<long> guard = std::nullopt);

    long digits() const { return digits_; }
    long guard() const { return guard_; }
    long working_digits() const { return digits_ + guard_; }
    long max_working_digits() const { return cap_; }

    /// Working precision in bits (ceil of decimal->binary conversion plus a
    /// small fixed margin).
    mpfr_prec_t working_bits() const;

    /// A context with `extra` more working digits and the same cap.
    /// Throws precision_exhausted_error if the cap would be exceeded.
    PrecisionContext escalated(long extra) const;

    bool operator==(const PrecisionContext& other) const {
        return digits_ == other.digits_ && guard_ == other.guard_ && cap_ == other.cap_;
    }
    bool operator!=(const PrecisionContext& other) const { return !(*this == other); }

private:
    PrecisionContext(long digits, long guard, long cap) : digits_(digits), guard_(guard), cap_(cap) {}

    long digits_;
    long guard_;
    long cap_;
};

/// Spec-level constructor; validates digits >= 10 and guard >= 0.
PrecisionContext make_context(long digits, std::optional<long> guard = std::nullopt);

/// Decimal digits irrecoverably lost to cancellation in a signed binomial sum
/// of order n (~ n*log10(2), rounded up).
long cancellation_digits(long n);

// ---------------------------------------------------------------------------
// ExactInt — arbitrary-precision signed integer (GMP mpz), never rounded
// ---------------------------------------------------------------------------

class ExactInt {
public:
    ExactInt() { mpz_init(z_); }
    explicit ExactInt(long v) { mpz_init_set_si(z_, v); }

    ExactInt(const ExactInt& other) { mpz_init_set(z_, other.z_); }
    ExactInt(ExactInt&& other) noexcept {
        mpz_init(z_);
        mpz_swap(z_, other.z_);
    }
    ExactInt& operator=(const ExactInt& other) {
        if (this != &other) mpz_set(z_, other.z_);
        return *this;
    }
    ExactInt& operator=(ExactInt&& other) noexcept {
        mpz_swap(z_, other.z_);
        return *this;
    }
    ~ExactInt() { mpz_clear(z_); }

    static ExactInt from_string(const std::string& s);

    ExactInt& operator+=(const ExactInt& o) { mpz_add(z_, z_, o.z_); return *this; }
    ExactInt& operator-=(const ExactInt& o) { mpz_sub(z_, z_, o.z_); return *this; }
    ExactInt& operator*=(const ExactInt& o) { mpz_mul(z_, z_, o.z_); return *this; }
    ExactInt& operator*=(unsigned long u) { mpz_mul_ui(z_, z_, u); return *this; }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { a += b; return a; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { a -= b; return a; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { a *= b; return a; }

    ExactInt operator-() const {
        ExactInt r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }

    /// Exact division by a known divisor of *this.
    void divexact(unsigned long u) { mpz_divexact_ui(z_, z_, u); }

    /// *this <<= k  (multiply by 2^k).
    void shift_left(unsigned long k) { mpz_mul_2exp(z_, z_, k); }

    static ExactInt pow(const ExactInt& base, unsigned long e) {
        ExactInt r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }
    static ExactInt two_pow(unsigned long e) {
        ExactInt r(1);
        r.shift_left(e);
        return r;
    }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const ExactInt& a, const ExactInt& b) { return !(a == b); }
    friend bool operator<(const ExactInt& a, const ExactInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    std::string to_string() const;

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
ExactInt binomial(long n, long k);

// ---------------------------------------------------------------------------
// Real — arbitrary-precision real bound to a PrecisionContext
// ---------------------------------------------------------------------------

/// Immutable-by-convention high-precision real. Every public operation rounds
/// to nearest at the wider operand's working precision and verifies the result
/// is finite. Binary operands may carry different contexts; the result adopts
/// the one with more working digits.
class Real {
public:
    explicit Real(const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(x_, ctx.working_bits());
        mpfr_set_zero(x_, 1);
    }
    Real(long v, const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(x_, ctx.working_bits());
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    Real(const ExactInt& v, const PrecisionContext& ctx) : ctx_(ctx) {
        mpfr_init2(x_, ctx.working_bits());
        mpfr_set_z(x_, v.raw(), MPFR_RNDN);
    }

    Real(const Real& other) : ctx_(other.ctx_) {
        mpfr_init2(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept : ctx_(other.ctx_) {
        mpfr_init2(x_, mpfr_get_prec(other.x_));
        mpfr_swap(x_, other.x_);
    }
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real() { mpfr_clear(x_); }

    /// Parse a decimal string at the context's working precision.
    static Real from_string(std::string_view s, const PrecisionContext& ctx);
    /// Exact embedding of a double (tests and tolerances only).
    static Real from_double(double d, const PrecisionContext& ctx);

    const PrecisionContext& ctx() const { return ctx_; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Round to another (usually narrower) context.
    Real rounded_to(const PrecisionContext& ctx) const;

    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator/(long a, const Real& b);

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }

    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    /// Throws arithmetic_error unless the value is finite.
    void check_finite(const char* op) const;

private:
    mpfr_t x_;
    PrecisionContext ctx_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real expm1(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real pow(const Real& base, const Real& e);
Real hypot(const Real& a, const Real& b);
Real sinh(const Real& a);
Real cosh(const Real& a);

/// a * 2^k (exact apart from the usual finiteness check).
Real mul_2si(const Real& a, long k);
/// a / 2^k.
Real div_2si(const Real& a, long k);

/// ln(n) for integer n >= 1 at the context's working precision.
Real log_ui(unsigned long n, const PrecisionContext& ctx);

/// pi at the context's working precision (quadrature plumbing; the reference
/// oracle for pi lives in constants.hpp and does not use this).
Real const_pi(const PrecisionContext& ctx);

/// Fixed significant-digit decimal rendering, round-to-nearest, locale-free.
/// Positional in a moderate exponent window, scientific outside it.
std::string to_decimal_string(const Real& x, long significant_digits = 20);

// ---------------------------------------------------------------------------
// Complex — pair of Reals with identical contexts
// ---------------------------------------------------------------------------

class Complex {
public:
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        if (re_.ctx() != im_.ctx()) throw domain_error("complex components carry different contexts");
    }
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.ctx()) {}
    Complex(long re, const PrecisionContext& ctx) : re_(re, ctx), im_(ctx) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const PrecisionContext& ctx() const { return re_.ctx(); }

    bool is_real() const { return im_.is_zero(); }

    Complex operator-() const { return Complex(-re_, -im_); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re_ * s, a.im_ * s); }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& a);

/// base^exponent for an integer base >= 1 via exp(exponent * ln base); the
/// principal (real, positive) logarithm of the base, so no branch ambiguity.
Complex pow_of_ui(unsigned long base, const Complex& exponent, const PrecisionContext& ctx);

/// "a", "a+bi", "-bi", "i", ... -> Complex at the context precision.
/// Throws domain_error on malformed input.
Complex parse_complex(std::string_view s, const PrecisionContext& ctx);

/// Decimal rendering of a complex value ("re" when purely real, else "re+imi").
std::string to_decimal_string(const Complex& z, long significant_digits = 20);

}  // namespace zetaprod

#endif  // ZETAPROD_PRECISION_HPP
