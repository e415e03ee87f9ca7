#include "frnet/solver.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace frnet {

const char* explicit_kind_tag(ExplicitKind kind) {
    switch (kind) {
        case ExplicitKind::perfect_square:
            return "perfect-square";
        case ExplicitKind::monomial_discriminant:
            return "monomial-discriminant";
        case ExplicitKind::implicit:
            return "implicit";
    }
    return "implicit";
}

ExplicitResult try_explicit(const QuadraticImplicitOp& eq) {
    const QuadraticImplicitOp me = eq.monic();
    const FracPoly disc = me.b * me.b - 4.0 * me.c;
    if (disc.is_zero()) {
        return {ExplicitKind::perfect_square, {-0.5 * me.b}};
    }
    if (disc.size() == 1 && disc.terms().front().coeff > 0.0) {
        const FracPoly half = 0.5 * sqrt_monomial(disc);
        const FracPoly minus_half_b = -0.5 * me.b;
        return {ExplicitKind::monomial_discriminant,
                {minus_half_b + half, minus_half_b - half}};
    }
    return {ExplicitKind::implicit, {}};
}

double equivalent_order(const QuadraticImplicitOp& eq) {
    if (eq.b.is_zero() && eq.c.is_zero()) {
        throw Degenerate("b and c are both zero; the equation has no order");
    }
    double top = std::numeric_limits<double>::lowest();
    if (!eq.b.is_zero()) top = std::max(top, eq.b.max_exponent());
    if (!eq.c.is_zero()) top = std::max(top, eq.c.max_exponent());
    return top / 2.0;
}

}  // namespace frnet
