#include "frnet/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frnet {
namespace {

constexpr double kBlowupLimit = 1e300;

using cd = std::complex<double>;

// True when x is the preferred root of a pair: larger real part, ties
// toward larger imaginary part.
bool prefer(cd x, cd y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
}

cd checked(cd z) {
    if (!(std::abs(z) <= kBlowupLimit)) {
        throw NumericBlowup("truncated-network iterate exceeded 1e300");
    }
    return z;
}

// One-generation map of the truncated network, with components already
// evaluated at s.
struct GenerationMap {
    Topology topology;
    cd la;
    cd lb;
    double m = 1.0;
    double n = 1.0;

    explicit GenerationMap(const NetworkSpec& spec, cd s)
        : topology(spec.topology),
          la(component_operator(spec.component_a).eval(s)),
          lb(component_operator(spec.component_b).eval(s)),
          m(spec.m),
          n(spec.n) {}

    cd step(cd z) const {
        switch (topology) {
            case Topology::tree:
                return (la + z) * (lb + z) / (la + lb + 2.0 * z);
            case Topology::multitree: {
                cd admittance = m / (la + z);
                if (n > 0.0) admittance += n / (lb + z);
                return 1.0 / admittance;
            }
            case Topology::ladder:
                return la + lb * z / (lb + z);
        }
        throw DerivationError("unknown topology");
    }

    // First generation with nothing attached beyond it.
    cd open_step() const {
        switch (topology) {
            case Topology::tree:
                return la * lb / (la + lb);
            case Topology::multitree: {
                cd admittance = m / la;
                if (n > 0.0) admittance += n / lb;
                return 1.0 / admittance;
            }
            case Topology::ladder:
                return la + lb;
        }
        throw DerivationError("unknown topology");
    }
};

}  // namespace

QuadRoot quad_root(const QuadraticImplicitOp& eq, cd s) {
    if (eq.a2 == 0.0) {
        throw DegenerateEquation("leading coefficient a2 = 0");
    }
    const cd b = eq.b.eval(s);
    const cd c = eq.c.eval(s);
    cd r1, r2;
    if (c == cd{0.0, 0.0}) {
        r1 = {0.0, 0.0};
        r2 = -b / eq.a2;
    } else {
        cd sq = std::sqrt(b * b - 4.0 * eq.a2 * c);
        if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
        const cd q = -0.5 * (b + sq);
        r1 = q / eq.a2;
        r2 = c / q;
    }
    const bool ok1 = r1.real() >= 0.0;
    const bool ok2 = r2.real() >= 0.0;
    if (ok1 != ok2) return {ok1 ? r1 : r2, true};
    return {prefer(r1, r2) ? r1 : r2, ok1 && ok2};
}

std::complex<double> truncated_response(const NetworkSpec& spec, cd s,
                                        int depth, Termination termination) {
    if (depth < 0) {
        throw std::invalid_argument("truncation depth must be >= 0");
    }
    const GenerationMap map(spec, s);
    cd z;
    int generation = 0;
    if (termination.is_open) {
        if (depth == 0) {
            return {std::numeric_limits<double>::infinity(), 0.0};
        }
        z = checked(map.open_step());
        generation = 1;
    } else {
        z = termination.z;
    }
    for (; generation < depth; ++generation) {
        z = checked(map.step(z));
    }
    return z;
}

FixedPoint fixed_point(const NetworkSpec& spec, cd s, double tol,
                       int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    const GenerationMap map(spec, s);
    cd z{1.0, 0.0};
    for (int k = 1; k <= max_iter; ++k) {
        const cd next = checked(map.step(z));
        if (std::abs(next - z) <= tol * std::max(1.0, std::abs(next))) {
            return {next, k};
        }
        z = next;
    }
    throw NoConvergence(z, max_iter);
}

FrequencyResponse bode(const QuadraticImplicitOp& eq, double wmin,
                       double wmax, int points) {
    if (!(wmin > 0.0) || !(wmin < wmax)) {
        throw std::invalid_argument("bode requires 0 < wmin < wmax");
    }
    if (points < 2) {
        throw std::invalid_argument("bode requires points >= 2");
    }
    FrequencyResponse fr;
    fr.equation = eq;
    fr.samples.reserve(points);
    // pow keeps round ratios exact (a [1, 100] grid hits 10, not 10-ulp),
    // unlike exp(i * dlog).
    const double ratio = wmax / wmin;
    for (int i = 0; i < points; ++i) {
        double w =
            wmin * std::pow(ratio, static_cast<double>(i) / (points - 1));
        if (i == 0) w = wmin;
        if (i == points - 1) w = wmax;
        const QuadRoot root = quad_root(eq, {0.0, w});
        fr.samples.push_back({w, root.value, root.branch_ok});
    }
    return fr;
}

double fit_order(const FrequencyResponse& fr, double wlo, double whi) {
    std::vector<double> xs, ys;
    for (const auto& sample : fr.samples) {
        if (sample.omega < wlo || sample.omega > whi) continue;
        if (!sample.branch_ok) {
            throw BranchFailure("flagged sample at omega = " +
                                format_g17(sample.omega));
        }
        xs.push_back(std::log(sample.omega));
        ys.push_back(std::log(std::abs(sample.value)));
    }
    if (xs.size() < 5) {
        throw InsufficientSamples("order fit needs >= 5 samples in window, "
                                  "got " +
                                  std::to_string(xs.size()));
    }
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= xs.size();
    ybar /= ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    return sxy / sxx;
}

double equation_residual(const QuadraticImplicitOp& eq, cd s, cd z) {
    const cd quad = eq.a2 * z * z;
    const cd lin = eq.b.eval(s) * z;
    const cd con = eq.c.eval(s);
    const double scale = std::abs(quad) + std::abs(lin) + std::abs(con);
    const double residual = std::abs(quad + lin + con);
    return scale == 0.0 ? residual : residual / scale;
}

}  // namespace frnet
