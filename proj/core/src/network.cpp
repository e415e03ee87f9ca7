#include "frnet/network.hpp"

#include <string>

namespace frnet {
namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw InvalidParameter(std::string(name) + " must be > 0, got " +
                               format_g17(value));
    }
}

FracPoly first_order(double rate_gain, double zero_gain) {
    return FracPoly{{rate_gain, 1.0}, {zero_gain, 0.0}};
}

void require_nonzero(const FracPoly& f, const char* which) {
    if (f.is_zero()) {
        throw ZeroOperator(std::string("component ") + which +
                           " is the zero operator");
    }
}

}  // namespace

QuadraticImplicitOp QuadraticImplicitOp::monic() const {
    if (a2 == 0.0) {
        throw DegenerateEquation("leading coefficient a2 = 0");
    }
    if (a2 == 1.0) return *this;
    auto scale = [&](const FracPoly& f) {
        std::vector<FracPoly::Term> terms = f.terms();
        for (auto& t : terms) t.coeff /= a2;
        return FracPoly::from_terms(std::move(terms));
    };
    return {1.0, scale(b), scale(c)};
}

FracPoly component_operator(const ComponentModel& cm) {
    struct Visitor {
        FracPoly operator()(const RlcSeries& rlc) const {
            require_positive(rlc.L, "L");
            require_positive(rlc.R, "R");
            require_positive(rlc.C, "C");
            return FracPoly{{rlc.L, 1.0}, {rlc.R, 0.0}, {1.0 / rlc.C, -1.0}};
        }
        FracPoly operator()(const Pipe& p) const {
            require_positive(p.a, "a");
            require_positive(p.b, "b");
            return first_order(1.0 / p.b, p.a / p.b);
        }
        FracPoly operator()(const Rod& r) const {
            require_positive(r.a, "a");
            require_positive(r.b, "b");
            return first_order(1.0 / r.b, r.a / r.b);
        }
        FracPoly operator()(const SpringDamper& sd) const {
            require_positive(sd.c, "c");
            require_positive(sd.k, "k");
            return first_order(sd.c, sd.k);
        }
        FracPoly operator()(const FracPoly& raw) const {
            if (raw.is_zero()) {
                throw InvalidParameter("raw component operator is zero");
            }
            return raw;
        }
    };
    return std::visit(Visitor{}, cm);
}

QuadraticImplicitOp derive_tree(const FracPoly& La, const FracPoly& Lb) {
    require_nonzero(La, "a");
    require_nonzero(Lb, "b");
    return {1.0, FracPoly{}, -(La * Lb)};
}

QuadraticImplicitOp derive_multitree(const FracPoly& La, const FracPoly& Lb,
                                     int m, int n,
                                     MultitreeConvention convention) {
    if (m < 1 || n < 0 || m + n < 2) {
        throw InvalidArity("multitree requires m >= 1, n >= 0, m + n >= 2; "
                           "got m = " +
                           std::to_string(m) + ", n = " + std::to_string(n));
    }
    require_nonzero(La, "a");
    require_nonzero(Lb, "b");
    const double ma = m - 1;
    const double na = n - 1;
    FracPoly b = convention == MultitreeConvention::recursion
                     ? na * La + ma * Lb
                     : ma * La + na * Lb;
    return {static_cast<double>(n + m - 1), std::move(b), -(La * Lb)};
}

QuadraticImplicitOp derive_ladder(const FracPoly& La, const FracPoly& Lb) {
    require_nonzero(La, "a");
    require_nonzero(Lb, "b");
    return {1.0, -La, -(La * Lb)};
}

QuadraticImplicitOp derive_equation(const NetworkSpec& spec,
                                    MultitreeConvention convention) {
    const FracPoly La = component_operator(spec.component_a);
    const FracPoly Lb = component_operator(spec.component_b);
    switch (spec.topology) {
        case Topology::tree:
            return derive_tree(La, Lb);
        case Topology::multitree:
            return derive_multitree(La, Lb, spec.m, spec.n, convention);
        case Topology::ladder:
            return derive_ladder(La, Lb);
    }
    throw DerivationError("unknown topology");
}

}  // namespace frnet
