#pragma once

#include <complex>
#include <random>
#include <vector>

#include "frnet/frac_poly.hpp"

namespace frnet_test {

// One deterministic stream per test binary; every property run is
// reproducible.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1e55);
    return gen;
}

// Coefficients k/16 with |k| <= 32 and half-integer exponents keep every
// sum and product in the algebra tests exactly representable, so equality
// assertions can be exact rather than tolerance-based.
inline frnet::FracPoly random_dyadic_poly(int max_terms = 4) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> coeff(-32, 32);
    std::uniform_int_distribution<int> expo(-4, 8);
    std::vector<frnet::FracPoly::Term> terms;
    const int n = term_count(rng());
    for (int i = 0; i < n; ++i) {
        terms.push_back({coeff(rng()) / 16.0, expo(rng()) / 2.0});
    }
    return frnet::FracPoly::from_terms(std::move(terms));
}

inline frnet::FracPoly random_nonzero_dyadic_poly(int max_terms = 4) {
    for (;;) {
        frnet::FracPoly f = random_dyadic_poly(max_terms);
        if (!f.is_zero()) return f;
    }
}

// Per-coefficient comparison over matching exponent sets.
inline bool coeffs_close(const frnet::FracPoly& f, const frnet::FracPoly& g,
                         double rel_tol) {
    if (f.size() != g.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& a = f.terms()[i];
        const auto& b = g.terms()[i];
        if (a.exponent != b.exponent) return false;
        const double scale = std::max(std::abs(a.coeff), std::abs(b.coeff));
        if (std::abs(a.coeff - b.coeff) > rel_tol * scale) return false;
    }
    return true;
}

inline bool close(std::complex<double> a, std::complex<double> b,
                  double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace frnet_test
