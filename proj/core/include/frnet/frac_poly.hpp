#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "frnet/errors.hpp"

namespace frnet {

/// Evaluation point is invalid for the exponents present (zero, or on the
/// branch cut along the negative real axis).
struct DomainError : NumericError {
    using NumericError::NumericError;
};

/// sqrt_monomial called on an operator that is not a single term.
struct NotMonomial : DerivationError {
    using DerivationError::DerivationError;
};

/// sqrt_monomial called on a term with coefficient <= 0.
struct NegativeCoefficient : DerivationError {
    using DerivationError::DerivationError;
};

/// Text did not match the operator grammar; `offset` is the byte position
/// of the failing token in the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset_)
        : Error(msg), offset(offset_) {}
    std::size_t offset;
};

/// A finite linear combination of fractional-derivative powers,
/// sum_i coeff_i * D^exponent_i, with real coefficients and real exponents.
///
/// Terms are kept in strictly decreasing exponent order, duplicate exponents
/// are merged, and zero-coefficient terms are dropped; the zero operator is
/// the empty term list. Values are immutable once built, so they can be
/// shared freely across threads.
class FracPoly {
public:
    struct Term {
        double coeff = 0.0;
        double exponent = 0.0;
        bool operator==(const Term&) const = default;
    };

    /// The zero operator.
    FracPoly() = default;

    /// Builds from arbitrary terms; merges, sorts, and drops zeros.
    FracPoly(std::initializer_list<Term> terms);

    static FracPoly from_terms(std::vector<Term> terms);

    /// coeff * D^exponent (the zero operator when coeff == 0).
    static FracPoly monomial(double coeff, double exponent);

    /// value * D^0.
    static FracPoly constant(double value);

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Largest exponent present. Pre: not the zero operator.
    [[nodiscard]] double max_exponent() const;

    /// Pointwise image sum_i coeff_i * s^exponent_i under the principal
    /// branch of the complex power. Throws DomainError when s == 0 and any
    /// exponent is negative or non-integer, or when s lies on the closed
    /// negative real axis and any exponent is non-integer.
    [[nodiscard]] std::complex<double> eval(std::complex<double> s) const;

    bool operator==(const FracPoly&) const = default;

private:
    std::vector<Term> terms_;
};

FracPoly operator+(const FracPoly& f, const FracPoly& g);
FracPoly operator-(const FracPoly& f);
FracPoly operator-(const FracPoly& f, const FracPoly& g);

/// Product via the law of indices D^a * D^b = D^(a+b); commutative.
FracPoly operator*(const FracPoly& f, const FracPoly& g);
FracPoly operator*(double scalar, const FracPoly& f);

/// Square root of a single positive term: sqrt(c) * D^(a/2).
/// Throws NotMonomial unless the operator has exactly one term,
/// NegativeCoefficient when that term's coefficient is <= 0.
FracPoly sqrt_monomial(const FracPoly& f);

/// Parses `term ( '+' term )*` where term is `float '*' 'D^' float` or a
/// bare float (taken as float * D^0). `D^` is a single token; whitespace is
/// ignored around tokens. Throws ParseError with a byte offset.
FracPoly parse_frac_poly(std::string_view text);

/// Canonical rendering: decreasing exponents, `<coeff>*D^<exponent>` joined
/// by " + ", numbers formatted with 17 significant digits ("0" for the zero
/// operator). parse_frac_poly(to_string(f)) == f exactly.
std::string to_string(const FracPoly& f);

/// printf "%.17g": shortest 17-significant-digit form that round-trips.
std::string format_g17(double value);

}  // namespace frnet
