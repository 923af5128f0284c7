#include "qdet/quaternion.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <optional>

namespace qdet {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Reads an unsigned coefficient "12", "3/4", "0.25", ".5" starting at pos.
// Returns nullopt (pos untouched) when no digit starts there.
std::optional<Rational> read_coefficient(std::string_view s, std::size_t& pos) {
    const std::size_t start = pos;
    std::size_t p = pos;
    while (p < s.size() && is_digit(s[p])) ++p;
    const bool has_int = p > start;

    if (p < s.size() && s[p] == '.') {
        std::size_t q = p + 1;
        while (q < s.size() && is_digit(s[q])) ++q;
        if (q == p + 1 && !has_int) return std::nullopt;
        if (q == p + 1) throw ParseError("expected digits after '.'", 1, static_cast<int>(q) + 1);
        const std::string int_part = has_int ? std::string(s.substr(start, p - start)) : "0";
        const std::string frac_part(s.substr(p + 1, q - p - 1));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational r(mpz_class(int_part + frac_part, 10), scale);
        r.canonicalize();
        pos = q;
        return r;
    }
    if (!has_int) return std::nullopt;

    mpz_class num(std::string(s.substr(start, p - start)), 10);
    if (p < s.size() && s[p] == '/') {
        std::size_t q = p + 1;
        while (q < s.size() && is_digit(s[q])) ++q;
        if (q == p + 1) throw ParseError("expected denominator after '/'", 1, static_cast<int>(q) + 1);
        mpz_class den(std::string(s.substr(p + 1, q - p - 1)), 10);
        if (den == 0) throw ParseError("zero denominator", 1, static_cast<int>(p) + 2);
        Rational r(num, den);
        r.canonicalize();
        pos = q;
        return r;
    }
    pos = p;
    return Rational(num);
}

void skip_spaces(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

template <class Coef, class Format>
std::string format_terms(const std::array<Coef, 4>& c, Format&& fmt, const Coef& one) {
    static constexpr std::array<const char*, 4> units = {"", "i", "j", "k"};
    std::string out;
    for (std::size_t u = 0; u < 4; ++u) {
        if (c[u] == 0) continue;
        const bool negative = c[u] < 0;
        Coef mag = negative ? Coef(-c[u]) : c[u];
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (u == 0 || mag != one) out += fmt(mag);
        out += units[u];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto value = read_coefficient(text, pos);
    if (!value) throw ParseError("expected a rational number", 1, static_cast<int>(pos) + 1);
    skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational", 1, static_cast<int>(pos) + 1);
    return negative ? Rational(-*value) : *value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(double x) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return buf.data();
}

ExactQuaternion parse_quaternion(std::string_view text) {
    std::array<Rational, 4> parts;
    std::array<bool, 4> seen{};
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos == text.size()) throw ParseError("empty quaternion literal", 1, 1);

    bool first = true;
    while (true) {
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        const std::size_t term_start = pos;

        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip_spaces(text, pos);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", 1, static_cast<int>(pos) + 1);
        }

        auto coef = read_coefficient(text, pos);
        std::size_t unit = 0;
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            unit = static_cast<std::size_t>(text[pos] - 'i') + 1;
            ++pos;
        } else if (!coef) {
            throw ParseError("expected a coefficient or one of i, j, k", 1, static_cast<int>(pos) + 1);
        }

        if (seen[unit]) {
            static constexpr std::array<const char*, 4> names = {"real", "i", "j", "k"};
            throw ParseError(std::string("duplicate ") + names[unit] + " term", 1,
                             static_cast<int>(term_start) + 1);
        }
        seen[unit] = true;
        Rational value = coef ? *coef : Rational(1);
        parts[unit] = negative ? Rational(-value) : value;
        first = false;
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

std::string to_literal(const ExactQuaternion& q) {
    return format_terms<Rational>({q.w(), q.x(), q.y(), q.z()},
                                  [](const Rational& r) { return to_string(r); }, Rational(1));
}

std::string to_literal(const FloatQuaternion& q) {
    return format_terms<double>({q.w(), q.x(), q.y(), q.z()},
                                [](double d) { return to_string(d); }, 1.0);
}

}  // namespace qdet
