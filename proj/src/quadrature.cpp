#include "zetaprod/quadrature.hpp"

#include <cmath>
#include <vector>

namespace zetaprod {

namespace {

// Engine-internal working context: the caller's working digits plus slack for
// summing thousands of nodes. Built fresh so integrand-level escalation is
// not charged against the caller's cancellation budget.
PrecisionContext engine_ctx(const PrecisionContext& ctx) {
    return PrecisionContext(ctx.working_digits() + 8, 0);
}

struct Node {
    Real x;   // node position in (0,1)
    Real xc;  // 1 - x, computed from the transform, not by subtraction
    Real w;   // weight pi * cosh(t) * x * xc (before the step factor h)
};

// Nodes t = j/2^level for j = -J..J, J chosen so the double-exponential
// weight decay has passed below the working precision.
std::vector<Node> de_nodes(int level, const PrecisionContext& work) {
    const double wd = static_cast<double>(work.working_digits());
    const double sinh_tmax = (wd * 2.302585092994046 + 12.0) / 3.141592653589793;
    const double t_max = std::asinh(sinh_tmax);
    const long j_max = static_cast<long>(std::ceil(t_max * std::ldexp(1.0, level)));

    Real pi = const_pi(work);
    Real h = div_2si(Real(1, work), level);
    std::vector<Node> nodes;
    nodes.reserve(static_cast<size_t>(2 * j_max + 1));
    for (long j = -j_max; j <= j_max; ++j) {
        Real t = Real(j, work) * h;
        Real sh(work), ch(work);
        mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
        Real u = div_2si(pi * sh, 1);
        Real q = exp(mul_2si(-abs(u), 1));  // e^(-2|u|)
        Real one_plus_q = q + 1;
        Real near_side = q / one_plus_q;
        Real far_side = 1 / one_plus_q;
        Real w = pi * ch * near_side * far_side;
        if (j >= 0)
            nodes.push_back(Node{far_side, near_side, std::move(w)});
        else
            nodes.push_back(Node{near_side, far_side, std::move(w)});
    }
    return nodes;
}

[[noreturn]] void exhausted(const Real& estimate, const Real& tol) {
    double ratio = (estimate / tol).to_double();
    long extra = ratio > 1.0 ? static_cast<long>(std::ceil(std::log10(ratio))) + 2 : 2;
    throw precision_exhausted_error(
        "quadrature tolerance unreachable at this precision: needs about " +
            std::to_string(extra) + " more working digits",
        extra);
}

}  // namespace

QuadratureResult integrate_unit_interval(const Integrand1D& f, const Real& tol,
                                         const PrecisionContext& ctx, int max_level) {
    if (!(tol > 0)) throw domain_error("quadrature tolerance must be positive");
    PrecisionContext work = engine_ctx(ctx);
    Real tol_w = tol.rounded_to(work);

    long evaluations = 0;
    Real prev(work);
    Real estimate(work);
    bool have_prev = false;

    for (int level = 3; level <= max_level; ++level) {
        std::vector<Node> nodes = de_nodes(level, work);
        Real sum(work);
        for (const Node& node : nodes) {
            sum += node.w * f(node.x, node.xc, work);
            ++evaluations;
        }
        Real value = div_2si(sum, level);
        if (have_prev) {
            estimate = abs(value - prev) * 10;
            if (estimate <= tol_w)
                return QuadratureResult{value.rounded_to(ctx), estimate.rounded_to(ctx), evaluations};
        }
        prev = value;
        have_prev = true;
    }
    exhausted(estimate, tol_w);
}

QuadratureResult integrate_unit_square(const Integrand2D& f, const Real& tol,
                                       const PrecisionContext& ctx, int max_level) {
    if (!(tol > 0)) throw domain_error("quadrature tolerance must be positive");
    PrecisionContext work = engine_ctx(ctx);
    Real tol_w = tol.rounded_to(work);

    long evaluations = 0;
    Real prev(work);
    Real estimate(work);
    bool have_prev = false;

    for (int level = 3; level <= max_level; ++level) {
        std::vector<Node> nodes = de_nodes(level, work);
        Real sum(work);
        for (const Node& ny : nodes) {
            Real row(work);
            for (const Node& nx : nodes) {
                row += nx.w * f(nx.x, nx.xc, ny.x, ny.xc, work);
                ++evaluations;
            }
            sum += ny.w * row;
        }
        Real value = div_2si(sum, 2 * level);
        if (have_prev) {
            estimate = abs(value - prev) * 10;
            if (estimate <= tol_w)
                return QuadratureResult{value.rounded_to(ctx), estimate.rounded_to(ctx), evaluations};
        }
        prev = value;
        have_prev = true;
    }
    exhausted(estimate, tol_w);
}

}  // namespace zetaprod
