#include "frnet/frac_poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace frnet {
namespace {

// Sorts by decreasing exponent, merges equal exponents, and removes terms
// whose (merged) coefficient is zero. Exponents of -0.0 are normalized to
// +0.0 so D^0 compares and renders consistently.
std::vector<FracPoly::Term> normalize(std::vector<FracPoly::Term> terms) {
    for (auto& t : terms) {
        if (t.exponent == 0.0) t.exponent = 0.0;
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.exponent > b.exponent;
    });
    std::vector<FracPoly::Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [](const auto& t) { return t.coeff == 0.0; });
    return out;
}

bool is_integer(double x) { return x == std::floor(x); }

// s^n by repeated squaring for integer n, |n| <= 1024. Keeps integer-power
// results exact where the plain exp(n*log(s)) path would round (for example
// (10i)^2 must be exactly -100).
std::complex<double> int_pow(std::complex<double> s, long n) {
    if (n < 0) return 1.0 / int_pow(s, -n);
    std::complex<double> acc{1.0, 0.0};
    std::complex<double> base = s;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::complex<double> principal_pow(std::complex<double> s, double alpha) {
    if (alpha == 0.0) return {1.0, 0.0};
    if (is_integer(alpha) && std::abs(alpha) <= 1024.0) {
        return int_pow(s, static_cast<long>(alpha));
    }
    // exp(alpha * Log s) with Log the principal branch, Im in (-pi, pi].
    return std::exp(alpha * std::log(s));
}

}  // namespace

FracPoly::FracPoly(std::initializer_list<Term> terms)
    : terms_(normalize(std::vector<Term>(terms))) {}

FracPoly FracPoly::from_terms(std::vector<Term> terms) {
    FracPoly f;
    f.terms_ = normalize(std::move(terms));
    return f;
}

FracPoly FracPoly::monomial(double coeff, double exponent) {
    return from_terms({{coeff, exponent}});
}

FracPoly FracPoly::constant(double value) { return monomial(value, 0.0); }

double FracPoly::max_exponent() const { return terms_.front().exponent; }

std::complex<double> FracPoly::eval(std::complex<double> s) const {
    const bool at_origin = s == std::complex<double>{0.0, 0.0};
    const bool on_cut = s.imag() == 0.0 && s.real() < 0.0;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms_) {
        if (at_origin && (t.exponent < 0.0 || !is_integer(t.exponent))) {
            throw DomainError("operator evaluation at s = 0 with exponent " +
                              format_g17(t.exponent));
        }
        if (on_cut && !is_integer(t.exponent)) {
            throw DomainError(
                "operator evaluation on the negative real axis with "
                "non-integer exponent " +
                format_g17(t.exponent));
        }
        acc += t.coeff * principal_pow(s, t.exponent);
    }
    return acc;
}

FracPoly operator+(const FracPoly& f, const FracPoly& g) {
    std::vector<FracPoly::Term> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return FracPoly::from_terms(std::move(terms));
}

FracPoly operator-(const FracPoly& f) { return -1.0 * f; }

FracPoly operator-(const FracPoly& f, const FracPoly& g) { return f + -g; }

FracPoly operator*(const FracPoly& f, const FracPoly& g) {
    std::vector<FracPoly::Term> terms;
    terms.reserve(f.size() * g.size());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            terms.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
        }
    }
    return FracPoly::from_terms(std::move(terms));
}

FracPoly operator*(double scalar, const FracPoly& f) {
    std::vector<FracPoly::Term> terms = f.terms();
    for (auto& t : terms) t.coeff *= scalar;
    return FracPoly::from_terms(std::move(terms));
}

FracPoly sqrt_monomial(const FracPoly& f) {
    if (f.size() != 1) {
        throw NotMonomial("square root requires a single-term operator, got " +
                          to_string(f));
    }
    const auto& t = f.terms().front();
    if (t.coeff <= 0.0) {
        throw NegativeCoefficient(
            "square root requires a positive coefficient, got " +
            format_g17(t.coeff));
    }
    return FracPoly::monomial(std::sqrt(t.coeff), t.exponent / 2.0);
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    double parse_float(const char* what) {
        skip_ws();
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            throw ParseError(std::string("expected ") + what, pos);
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect_token(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) != token) {
            throw ParseError("expected '" + std::string(token) + "'", pos);
        }
        pos += token.size();
    }
};

}  // namespace

FracPoly parse_frac_poly(std::string_view text) {
    Cursor cur{text};
    if (cur.at_end()) throw ParseError("empty operator text", cur.pos);
    std::vector<FracPoly::Term> terms;
    while (true) {
        FracPoly::Term t;
        t.coeff = cur.parse_float("coefficient");
        if (cur.consume('*')) {
            cur.expect_token("D^");
            t.exponent = cur.parse_float("exponent");
        } else {
            t.exponent = 0.0;
        }
        terms.push_back(t);
        if (cur.at_end()) break;
        if (!cur.consume('+')) {
            throw ParseError("expected '+' between terms", cur.pos);
        }
    }
    return FracPoly::from_terms(std::move(terms));
}

std::string format_g17(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string to_string(const FracPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out += " + ";
        first = false;
        out += format_g17(t.coeff);
        out += "*D^";
        out += format_g17(t.exponent);
    }
    return out;
}

}  // namespace frnet
