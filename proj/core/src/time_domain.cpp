#include "frnet/time_domain.hpp"

#include <cmath>
#include <stdexcept>

namespace frnet {
namespace {

using cd = std::complex<double>;

void validate(const TimeSeries& ts) {
    if (!(ts.h > 0.0)) throw std::invalid_argument("time step must be > 0");
    if (ts.values.empty()) {
        throw std::invalid_argument("time series must be non-empty");
    }
}

}  // namespace

std::vector<double> gl_weights(double alpha, int count) {
    if (count < 1) throw std::invalid_argument("weight count must be >= 1");
    std::vector<double> w(count);
    w[0] = 1.0;
    for (int j = 1; j < count; ++j) {
        w[j] = w[j - 1] * (1.0 - (alpha + 1.0) / j);
    }
    return w;
}

TimeSeries gl_apply(const TimeSeries& ts, double alpha) {
    validate(ts);
    const int n = static_cast<int>(ts.values.size());
    const std::vector<double> w = gl_weights(alpha, n);
    const double scale = std::pow(ts.h, -alpha);
    TimeSeries out{ts.h, std::vector<double>(n)};
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) {
            acc += w[j] * ts.values[k - j];
        }
        out.values[k] = scale * acc;
    }
    return out;
}

TimeSeries caputo_derivative(const TimeSeries& ts, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw InvalidOrder("Caputo order must lie in (0, 1), got " +
                           format_g17(alpha));
    }
    validate(ts);
    const int n = static_cast<int>(ts.values.size());
    const double scale =
        std::pow(ts.h, -alpha) / std::tgamma(2.0 - alpha);
    // kernel[i] = i^(1-alpha) - (i-1)^(1-alpha): the integrated power-law
    // weight of the difference u[j+1]-u[j] at lag i = k-j.
    std::vector<double> kernel(n);
    for (int i = 1; i < n; ++i) {
        kernel[i] = std::pow(i, 1.0 - alpha) - std::pow(i - 1, 1.0 - alpha);
    }
    TimeSeries out{ts.h, std::vector<double>(n)};
    for (int k = 1; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j < k; ++j) {
            acc += (ts.values[j + 1] - ts.values[j]) * kernel[k - j];
        }
        out.values[k] = scale * acc;
    }
    return out;
}

TimeSeries simulate_explicit(const FracPoly& Lop, const TimeSeries& forcing) {
    validate(forcing);
    const int n = static_cast<int>(forcing.values.size());
    const double h = forcing.h;
    // Combined weights: W[j] = sum_i c_i * h^-alpha_i * w_j(alpha_i), so the
    // scheme reads sum_{j<=k} W[j] * u[k-j] = forcing[k].
    std::vector<double> W(n, 0.0);
    for (const auto& term : Lop.terms()) {
        const std::vector<double> w = gl_weights(term.exponent, n);
        const double scale = term.coeff * std::pow(h, -term.exponent);
        for (int j = 0; j < n; ++j) W[j] += scale * w[j];
    }
    if (W.empty() || W[0] == 0.0) {
        throw SingularStep("instantaneous coefficient sum_i c_i*h^-alpha_i "
                           "is zero");
    }
    TimeSeries out{h, std::vector<double>(n)};
    for (int k = 0; k < n; ++k) {
        double history = 0.0;
        for (int j = 1; j <= k; ++j) {
            history += W[j] * out.values[k - j];
        }
        out.values[k] = (forcing.values[k] - history) / W[0];
    }
    return out;
}

double ilt_point(const std::function<cd(cd)>& F, double t, int nodes) {
    if (!(t > 0.0)) throw std::invalid_argument("ilt_point requires t > 0");
    if (nodes < 16) throw std::invalid_argument("ilt_point needs >= 16 nodes");
    // Fixed Talbot contour s(theta) = r*theta*(cot(theta) + i) with
    // r = 2*nodes/(5*t), trapezoidal in theta.
    const double r = 2.0 * nodes / (5.0 * t);
    double acc = 0.5 * std::exp(r * t) * F(cd{r, 0.0}).real();
    for (int k = 1; k < nodes; ++k) {
        const double theta = k * M_PI / nodes;
        const double cot = std::cos(theta) / std::sin(theta);
        const cd s{r * theta * cot, r * theta};
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const cd weight{1.0, sigma};
        acc += (std::exp(s * t) * F(s) * weight).real();
    }
    return acc * r / nodes;
}

TimeSeries step_response_implicit(const QuadraticImplicitOp& eq, double tmax,
                                  int points, int nodes) {
    if (!(tmax > 0.0)) throw std::invalid_argument("tmax must be > 0");
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    const auto F = [&eq](cd s) {
        const QuadRoot root = quad_root(eq, s);
        if (!root.branch_ok) {
            throw BranchFailure("no passive branch at contour node s = " +
                                format_g17(s.real()) + " + " +
                                format_g17(s.imag()) + "i");
        }
        return 1.0 / (s * root.value);
    };
    const double h = tmax / (points - 1);
    TimeSeries out{h, std::vector<double>(points)};
    out.values[0] = 0.0;
    for (int k = 1; k < points; ++k) {
        out.values[k] = ilt_point(F, k * h, nodes);
    }
    return out;
}

}  // namespace frnet
