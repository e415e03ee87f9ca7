#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "frnet/frequency.hpp"

namespace frnet {

/// caputo_derivative order outside (0, 1).
struct InvalidOrder : Error {
    using Error::Error;
};

/// The instantaneous coefficient of the time-stepping scheme vanished; no
/// sample can be solved for.
struct SingularStep : NumericError {
    using NumericError::NumericError;
};

/// Uniformly sampled real signal starting at t = 0: values[k] is u(k*h).
struct TimeSeries {
    double h = 0.0;
    std::vector<double> values;
};

/// Grünwald-Letnikov weights w_0 = 1, w_j = w_{j-1} * (1 - (alpha+1)/j):
/// the signed binomial coefficients (-1)^j * C(alpha, j). count >= 1.
std::vector<double> gl_weights(double alpha, int count);

/// Discrete fractional derivative of order alpha (integral for alpha < 0):
/// output[k] = h^-alpha * sum_{j<=k} w_j * u[k-j]. The signal is taken as 0
/// before t = 0. alpha = 0 returns the input exactly.
TimeSeries gl_apply(const TimeSeries& ts, double alpha);

/// Caputo derivative of order alpha in (0, 1) by piecewise-linear product
/// integration of the kernel against first differences:
/// output[k] = h^-alpha / Gamma(2-alpha) *
///             sum_{j<k} (u[j+1]-u[j]) * ((k-j)^(1-alpha) - (k-j-1)^(1-alpha)).
/// Exact for linear signals; coincides with gl_apply for signals at rest
/// before t = 0. Throws InvalidOrder outside (0, 1).
TimeSeries caputo_derivative(const TimeSeries& ts, double alpha);

/// Marches L(u) = forcing with every term of L discretized by its GL
/// weights, solving each u[k] from the instantaneous coefficient
/// A = sum_i c_i * h^-alpha_i (the signal is at rest before t = 0).
/// Throws SingularStep when A = 0.
TimeSeries simulate_explicit(const FracPoly& Lop, const TimeSeries& forcing);

/// Inverse Laplace transform of F at time t > 0 on the fixed Talbot contour
/// with the given node count (>= 16; 32 is accurate to ~1e-10 for the
/// transforms arising here, and counts past ~64 lose accuracy to rounding).
/// Deterministic for fixed inputs; exceptions from F propagate.
double ilt_point(const std::function<std::complex<double>(
                     std::complex<double>)>& F,
                 double t, int nodes = 32);

/// Unit-step response of the implicit operator: u(t) = ILT[1/(s*Z(s))](t)
/// with Z(s) the passive quad_root branch, sampled on a uniform grid over
/// [0, tmax] with `points` samples. u(0) = 0 (rest). Throws BranchFailure
/// if the branch rule fails at any contour node.
TimeSeries step_response_implicit(const QuadraticImplicitOp& eq, double tmax,
                                  int points, int nodes = 32);

}  // namespace frnet
