#ifndef ZETAPROD_SERIES_HPP
#define ZETAPROD_SERIES_HPP

#include <functional>
#include <span>
#include <vector>

#include "zetaprod/precision.hpp"

namespace zetaprod {

/// Terms a_n (n >= 1) of an alternating series sum (-1)^(n-1) a_n.
/// The callback must be deterministic: same index and context, same value.
/// It receives the working context actually in force, which may be escalated
/// beyond the caller's when evaluated inside a binomial inner sum.
struct SeriesSpec {
    std::function<Real(long n, const PrecisionContext&)> term;
};

struct TraceEntry {
    long n;
    Real partial;
    Real abs_error;
};

/// Partial values and absolute errors against a fixed reference, n ascending.
struct ConvergenceTrace {
    std::vector<TraceEntry> entries;
};

/// log_core(n) = sum_{k=0}^{n} (-1)^(k+1) C(n,k) ln(k+1), n >= 1.
///
/// This is the logarithm of the n-th bracketed factor base shared by the
/// e^gamma, pi/2 and e products. The alternating binomial weights cancel
/// ~0.302*n leading digits, so the sum runs at an escalated working precision
/// with exact integer weights; see PrecisionContext::escalated for the
/// failure mode when the context cannot support the escalation.
Real log_core(long n, const PrecisionContext& ctx);

/// sum_{n=1}^{N} (-1)^(n-1) a_n, accumulated in ascending index order.
Real alternating_partial(const SeriesSpec& series, long N, const PrecisionContext& ctx);

/// Euler transformation partial sum
///   sum_{n=0}^{N} 2^-(n+1) sum_{k=0}^{n} (-1)^k C(n,k) a_{k+1},
/// inner sums cancellation-compensated as in log_core.
Real euler_transform_partial(const SeriesSpec& series, long N, const PrecisionContext& ctx);

/// Trace of |partials(n) - reference| for n = 1..n_max.
ConvergenceTrace convergence_trace(const std::function<Real(long)>& partials, const Real& reference,
                                   long n_max, const PrecisionContext& ctx);

namespace detail {

/// sum_{k=0}^{n} sign(k) C(n,k) g(k) with sign(k) = (-1)^(k+parity), computed
/// at ctx escalated by cancellation_digits(n). Positive and negative
/// contributions are accumulated separately and subtracted once. The result
/// is rounded back to ctx working precision.
Real signed_binomial_sum(long n, int parity,
                         const std::function<Real(long, const PrecisionContext&)>& g,
                         const PrecisionContext& ctx);

/// Same, over precomputed values (which must already carry enough precision).
Real signed_binomial_sum(long n, int parity, std::span<const Real> g, const PrecisionContext& ctx);
Complex signed_binomial_sum(long n, int parity, std::span<const Complex> g,
                            const PrecisionContext& ctx);

}  // namespace detail

}  // namespace zetaprod

#endif  // ZETAPROD_SERIES_HPP
