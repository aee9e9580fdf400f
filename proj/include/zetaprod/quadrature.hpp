#ifndef ZETAPROD_QUADRATURE_HPP
#define ZETAPROD_QUADRATURE_HPP

#include <functional>

#include "zetaprod/precision.hpp"

namespace zetaprod {

struct QuadratureResult {
    Real value;
    Real error_estimate;  // empirical: successive-refinement difference x 10
    long evaluations;
};

/// Integrand on (0,1). Receives both x and 1-x, each computed directly from
/// the node transform, so endpoint-sensitive factors like (1-x) or ln x stay
/// accurate when a node lies within 1e-100 of an endpoint. Nodes are strictly
/// interior; callers handle their removable endpoint limits separately.
using Integrand1D = std::function<Real(const Real& x, const Real& xc, const PrecisionContext&)>;

/// Integrand on (0,1)^2 with the same (value, complement) convention per axis.
using Integrand2D = std::function<Real(const Real& x, const Real& xc, const Real& y, const Real& yc,
                                       const PrecisionContext&)>;

/// tanh-sinh quadrature over (0,1): x(t) = (1 + tanh((pi/2) sinh t))/2,
/// trapezoid in t with step 1/2^level, refined until the empirical estimate
/// meets tol. Throws precision_exhausted_error when the estimate cannot reach
/// tol within the level budget.
QuadratureResult integrate_unit_interval(const Integrand1D& f, const Real& tol,
                                         const PrecisionContext& ctx, int max_level = 11);

/// Tensor-product tanh-sinh over (0,1)^2, both axes refined together. The
/// double-exponential node clustering grades the mesh into the corners, which
/// is what integrable corner singularities (gamma's (1,1) corner) need.
QuadratureResult integrate_unit_square(const Integrand2D& f, const Real& tol,
                                       const PrecisionContext& ctx, int max_level = 7);

}  // namespace zetaprod

#endif  // ZETAPROD_QUADRATURE_HPP
