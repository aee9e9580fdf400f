#ifndef ZETAPROD_PRODUCTS_HPP
#define ZETAPROD_PRODUCTS_HPP

#include "zetaprod/precision.hpp"

namespace zetaprod {

/// The five product families:
///   egamma      e^gamma,  factor base_n with exponent 1/(n+1)
///   sondow_pi   pi/2,     factor base_n with exponent 1/2^n
///   guillera_e  e,        factor base_n with exponent 1/n
///   wallis      pi/2,     grouped ratios (2n+2)^2/((2n+1)(2n+3)), exponent 1
///   pippenger   e/2,      Wallis-chain groups of 2^(n-1) ratios, exponent 1/2^n
/// where base_n = prod_{k=0}^{n} (k+1)^((-1)^(k+1) C(n,k)) = exp(log_core(n)).
enum class ProductKind { egamma, sondow_pi, guillera_e, wallis, pippenger };

struct Rational {
    ExactInt num;
    ExactInt den;
};

/// A product family plus its per-factor exponent schedule. Construction goes
/// through make(), which ties the schedule to the kind.
class ProductSpec {
public:
    static ProductSpec make(ProductKind kind) { return ProductSpec(kind); }

    ProductKind kind() const { return kind_; }

    /// Exponent of factor n (n >= 1) as an exact rational.
    Rational exponent_schedule(long n) const;

private:
    explicit ProductSpec(ProductKind kind) : kind_(kind) {}
    ProductKind kind_;
};

/// Partial product with N factors (N >= 1).
///
/// The log-core families evaluate exp(sum schedule(n) * log_core(n)). Wallis
/// multiplies its grouped ratios directly. Pippenger factors are
/// G_n^(1/2^n) where G_n is the product of the 2^(n-1) consecutive chain
/// ratios (2*ceil(j/2))/(2*floor(j/2)+1), j in [2^(n-1), 2^n - 1]; G_n is
/// evaluated through the log-Gamma closed form of chain prefixes, since the
/// group sizes grow exponentially.
Real product_partial(const ProductSpec& spec, long N, const PrecisionContext& ctx);

/// The limit constant, assembled from reference_constant oracles.
Real product_limit_reference(ProductKind kind, const PrecisionContext& ctx);

namespace detail {

/// ln of the Wallis chain prefix through ratio index J = 2^n - 1, via
/// ln 2 + M ln 16 + 3 ln M! + ln (M+1)! - 2 ln (2M+1)!  with M = 2^(n-1) - 1.
Real pippenger_chain_log(long n, const PrecisionContext& ctx);

/// ln G_n for group n >= 1.
Real pippenger_group_log(long n, const PrecisionContext& ctx);

}  // namespace detail

}  // namespace zetaprod

#endif  // ZETAPROD_PRODUCTS_HPP
