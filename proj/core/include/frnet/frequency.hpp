#pragma once

#include <complex>
#include <string>
#include <vector>

#include "frnet/network.hpp"

namespace frnet {

/// A truncated-network iterate exceeded 1e300 in magnitude (or left the
/// representable range entirely).
struct NumericBlowup : NumericError {
    using NumericError::NumericError;
};

/// Fixed-point iteration exhausted max_iter; carries the last iterate.
struct NoConvergence : NumericError {
    NoConvergence(std::complex<double> last_, int iterations_)
        : NumericError("fixed-point iteration did not converge within " +
                       std::to_string(iterations_) + " iterations"),
          last(last_),
          iterations(iterations_) {}
    std::complex<double> last;
    int iterations;
};

/// Fewer than 5 response samples inside the requested fit window.
struct InsufficientSamples : Error {
    using Error::Error;
};

/// A sample required by the operation has branch_ok = false.
struct BranchFailure : NumericError {
    using NumericError::NumericError;
};

/// quad_root output: branch_ok is false only when both roots have negative
/// real part (no passive branch exists at this s).
struct QuadRoot {
    std::complex<double> value;
    bool branch_ok = true;
};

/// Solves a2*z^2 + b(s)*z + c(s) = 0 with the cancellation-safe formulation
/// (q = -(b + sign-matched sqrt(b^2 - 4*a2*c))/2; roots q/a2 and c/q) and
/// returns the passive branch: the root of maximal real part among roots
/// with Re >= 0, ties resolved toward larger imaginary part (a tie is the
/// norm for lossless networks, whose roots are +-i*x). If both roots have
/// Re < 0 the larger-Re root is returned with branch_ok = false.
/// Throws DegenerateEquation when a2 = 0.
QuadRoot quad_root(const QuadraticImplicitOp& eq, std::complex<double> s);

/// Boundary condition closing the deepest generation of a truncated
/// network: a finite impedance value, or `open` (no continuation at all).
struct Termination {
    static Termination open() { return {true, {}}; }
    static Termination value(std::complex<double> z) { return {false, z}; }
    bool is_open = false;
    std::complex<double> z;
};

/// Impedance of the network truncated to `depth` generations, evaluated at
/// s. Iterates Z_0 = termination, then per generation —
///   tree:      Z <- (La + Z)(Lb + Z) / (La + Lb + 2Z)
///   multitree: Z <- [ m/(La + Z) + n/(Lb + Z) ]^-1
///   ladder:    Z <- La + Lb*Z / (Lb + Z)
/// where La, Lb are the component operators at s. An open termination
/// replaces the first step by its no-continuation limit (tree:
/// La*Lb/(La+Lb); multitree: [m/La + n/Lb]^-1; ladder: La + Lb); open at
/// depth 0 is an unterminated port and returns infinity. Throws
/// NumericBlowup past 1e300.
std::complex<double> truncated_response(const NetworkSpec& spec,
                                        std::complex<double> s, int depth,
                                        Termination termination =
                                            Termination::value(0.0));

struct FixedPoint {
    std::complex<double> value;
    int iterations = 0;
};

/// Runs the truncated_response generation map from Z_0 = 1 until
/// |Z_next - Z| <= tol * max(1, |Z_next|), returning the limit and the
/// number of applications. The limit independently validates the branch
/// selected by quad_root. Throws NoConvergence after max_iter steps.
FixedPoint fixed_point(const NetworkSpec& spec, std::complex<double> s,
                       double tol, int max_iter);

struct FrequencySample {
    double omega = 0.0;
    std::complex<double> value;
    bool branch_ok = true;
};

/// Samples over a log-spaced grid; omegas strictly increasing and > 0.
/// `topology` is a caller-supplied tag ("" when the source is unknown);
/// `equation` snapshots the equation the samples solve.
struct FrequencyResponse {
    std::vector<FrequencySample> samples;
    std::string topology;
    QuadraticImplicitOp equation;
};

/// quad_root swept over `points` log-spaced frequencies with both endpoints
/// exact. Branch failures land in the per-sample branch_ok flag rather than
/// throwing. Requires 0 < wmin < wmax and points >= 2.
FrequencyResponse bode(const QuadraticImplicitOp& eq, double wmin,
                       double wmax, int points);

/// Least-squares slope of log|value| against log(omega) over samples with
/// wlo <= omega <= whi: the apparent operator order in that band. Throws
/// InsufficientSamples when the window holds fewer than 5 samples and
/// BranchFailure when any window sample is flagged.
double fit_order(const FrequencyResponse& fr, double wlo, double whi);

/// |a2*z^2 + b(s)*z + c(s)| relative to |a2*z^2| + |b(s)*z| + |c(s)|;
/// the residual test used by the oracle suite.
double equation_residual(const QuadraticImplicitOp& eq,
                         std::complex<double> s, std::complex<double> z);

}  // namespace frnet
