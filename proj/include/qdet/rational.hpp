#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace qdet {

// Exact rational scalar. GMP keeps every result of mpq arithmetic in
// canonical form (reduced, positive denominator), so == is mathematical equality.
using Rational = mpq_class;

// Parses "7", "-3/4", "+12", "0.125", "-.5". Throws ParseError (line 1,
// column of the offending character) on anything else, including zero denominators.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p" text.
std::string to_string(const Rational& r);

// Shortest round-trippable decimal for the float backend (17 significant digits).
std::string to_string(double x);

// Arithmetic facts that differ between the exact and the float backend.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    // Exact backend: tolerant comparisons are exact comparisons.
    static bool near_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational from_rational(const Rational& r) { return r; }
    static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    // Componentwise tolerance for Hermitian checks and singularity tests.
    static constexpr double tolerance = 1e-9;
    static bool is_zero(double x) { return x == 0.0; }
    static bool near_zero(double x) { return std::fabs(x) <= tolerance; }
    static double from_rational(const Rational& r) { return r.get_d(); }
    static double magnitude(double x) { return std::fabs(x); }
};

}  // namespace qdet
