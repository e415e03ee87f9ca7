#pragma once

#include <vector>

#include "frnet/network.hpp"

namespace frnet {

/// equivalent_order called with b and c both zero.
struct Degenerate : DerivationError {
    using DerivationError::DerivationError;
};

enum class ExplicitKind { perfect_square, monomial_discriminant, implicit };

/// Literal report tag: "perfect-square", "monomial-discriminant", "implicit".
const char* explicit_kind_tag(ExplicitKind kind);

/// Closed-form classification of a quadratic implicit operator. `roots`
/// holds zero operators for `implicit`, the single repeated root for
/// `perfect_square`, and the plus branch then the minus branch for
/// `monomial_discriminant`.
struct ExplicitResult {
    ExplicitKind kind = ExplicitKind::implicit;
    std::vector<FracPoly> roots;
};

/// Works on the monic form (b, c divided by a2). Returns perfect_square with
/// root -b/2 when b^2 = 4c by exact term-list equality; returns
/// monomial_discriminant with roots (-b +- sqrt(g)*D^(mu/2))/2 when b^2 - 4c
/// is a single term g*D^mu with g > 0 (this covers the tree of monomials,
/// where b = 0); returns implicit otherwise. Implicit is a result, not an
/// error; no tolerance matching anywhere.
ExplicitResult try_explicit(const QuadraticImplicitOp& eq);

/// Highest D exponent appearing in b or c, divided by 2 (the highest power
/// of the unknown operator in a quadratic). Negative exponents count toward
/// the maximum like any other; the maximum is the most positive exponent.
/// Throws Degenerate when b and c are both zero.
double equivalent_order(const QuadraticImplicitOp& eq);

}  // namespace frnet
