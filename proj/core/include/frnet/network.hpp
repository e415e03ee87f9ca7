#pragma once

#include <variant>

#include "frnet/frac_poly.hpp"

namespace frnet {

/// Component parameter outside its physical range.
struct InvalidParameter : DerivationError {
    using DerivationError::DerivationError;
};

/// A derivation received the zero operator for a branch.
struct ZeroOperator : DerivationError {
    using DerivationError::DerivationError;
};

/// Multi-furcation counts outside m >= 1, n >= 0, m + n >= 2.
struct InvalidArity : DerivationError {
    using DerivationError::DerivationError;
};

/// Leading coefficient a2 = 0; the equation is not a quadratic.
struct DegenerateEquation : DerivationError {
    using DerivationError::DerivationError;
};

/// Series RLC branch; L, R, C all strictly positive.
struct RlcSeries {
    double L = 0.0;
    double R = 0.0;
    double C = 0.0;
};

/// Viscous pipe flow, [D + a*D^0](u) = b*dphi; a, b strictly positive.
struct Pipe {
    double a = 0.0;
    double b = 0.0;
};

/// Heat conduction along a rod; same operator shape as Pipe.
struct Rod {
    double a = 0.0;
    double b = 0.0;
};

/// Spring-damper pair; damping c and stiffness k strictly positive.
struct SpringDamper {
    double c = 0.0;
    double k = 0.0;
};

/// A physical component law, or a raw operator supplied directly.
using ComponentModel = std::variant<RlcSeries, Pipe, Rod, SpringDamper, FracPoly>;

enum class Topology { tree, multitree, ladder };

/// Coefficient convention for the multi-furcating linear term; `recursion`
/// follows the junction-law derivation, `paper` keeps the published
/// (m-1)La + (n-1)Lb ordering for comparison. See derive_multitree.
enum class MultitreeConvention { recursion, paper };

/// A self-similar network: two component types arranged as an infinite
/// bifurcating tree, an (m, n) multi-furcating tree, or a ladder.
/// m and n are read only for the multitree topology.
struct NetworkSpec {
    Topology topology = Topology::tree;
    int m = 1;
    int n = 1;
    ComponentModel component_a;
    ComponentModel component_b;
};

/// The implicit operator equation a2*L^2 + b(D)*L + c(D) = 0 whose root L
/// is the network's equivalent operator. a2 > 0 for every valid topology
/// (a2 = n + m - 1 for the multitree, 1 otherwise).
struct QuadraticImplicitOp {
    double a2 = 1.0;
    FracPoly b;
    FracPoly c;

    /// Same roots with a2 scaled to 1. Throws DegenerateEquation if a2 = 0.
    [[nodiscard]] QuadraticImplicitOp monic() const;

    bool operator==(const QuadraticImplicitOp&) const = default;
};

/// The operator L with L(u) = dphi for one component:
/// rlc_series -> L*D + R*D^0 + (1/C)*D^-1; pipe and rod -> (1/b)*D + (a/b)*D^0
/// (the governing law carries gain b on the potential side, so the stored
/// operator is pre-divided by b); spring_damper -> c*D + k*D^0; raw operators
/// pass through unchanged. Throws InvalidParameter when a physical parameter
/// is not strictly positive or a raw operator is zero.
FracPoly component_operator(const ComponentModel& cm);

/// Bifurcating tree: L^2 - La*Lb = 0.
QuadraticImplicitOp derive_tree(const FracPoly& La, const FracPoly& Lb);

/// Multi-furcating tree with m branches of La and n of Lb per junction:
/// (n+m-1)*L^2 + b*L - La*Lb = 0 where b = (n-1)La + (m-1)Lb under the
/// `recursion` convention and (m-1)La + (n-1)Lb under `paper`. The two
/// conventions coincide for m = n = 1, where the result equals derive_tree
/// exactly. The finite-depth recursion oracle confirms `recursion` (a tree
/// built only of La must have equivalent operator La), so it is the default.
QuadraticImplicitOp derive_multitree(
    const FracPoly& La, const FracPoly& Lb, int m, int n,
    MultitreeConvention convention = MultitreeConvention::recursion);

/// Ladder: L^2 - La*L - La*Lb = 0.
QuadraticImplicitOp derive_ladder(const FracPoly& La, const FracPoly& Lb);

/// Dispatches on spec.topology; convention applies to multitree only.
QuadraticImplicitOp derive_equation(
    const NetworkSpec& spec,
    MultitreeConvention convention = MultitreeConvention::recursion);

}  // namespace frnet
