// Scalar backends.
//
// Every algorithm in this library is templated over a scalar field S with
// two supported backends:
//
//   double        -- binary64; comparisons carry a tolerance
//                    |a - b| <= tol * max(1, |a|, |b|)
//   wtg::rational -- arbitrary-precision rational (boost::multiprecision),
//                    always kept in canonical reduced form; comparisons are
//                    exact and ignore the tolerance argument
//
// Token rendering is round-trip safe: doubles print with 17 significant
// digits, rationals as "p" or "p/q".

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wtg {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline constexpr double default_tol = 1e-9;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;

    static bool eq(double a, double b, double tol) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tol * scale;
    }

    static double from_int(long long k) { return static_cast<double>(k); }
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::abs(x); }
};

template <>
struct scalar_traits<rational> {
    static constexpr bool is_exact = true;

    static bool eq(const rational& a, const rational& b, double /*tol*/) {
        return a == b;
    }

    static rational from_int(long long k) { return rational(k); }
    static double to_double(const rational& x) { return x.convert_to<double>(); }
    static rational abs(const rational& x) { return x < 0 ? rational(-x) : x; }
};

template <class S>
concept scalar = requires(const S& a, const S& b) {
    { scalar_traits<S>::eq(a, b, 1e-9) } -> std::convertible_to<bool>;
    { scalar_traits<S>::from_int(0) } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
};

template <scalar S>
bool scalar_eq(const S& a, const S& b, double tol = default_tol) {
    return scalar_traits<S>::eq(a, b, tol);
}

// ── Token rendering ─────────────────────────────────────────────────────

inline std::string to_token(double x) {
    if (x == 0.0) return "0"; // fold -0.0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string to_token(const rational& q) {
    const bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// ── Token parsing ───────────────────────────────────────────────────────
//
// Accepted forms, both backends: integers, decimal literals (with optional
// exponent), and fractions "p/q".  The rational backend parses decimal
// literals exactly in base 10; the double backend evaluates p/q in binary64.

namespace detail {

inline bigint pow10(unsigned k) {
    bigint r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

// Exact base-10 parse of a decimal literal such as "-12.25e-3".
inline rational parse_decimal_exact(std::string_view tok) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
        neg = tok[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < tok.size(); ++pos) {
        char c = tok[pos];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    long exp10 = 0;
    if (pos < tok.size() && (tok[pos] == 'e' || tok[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
            eneg = tok[pos] == '-';
            ++pos;
        }
        if (pos == tok.size()) throw std::invalid_argument("bad scalar token");
        long e = 0;
        for (; pos < tok.size(); ++pos) {
            char c = tok[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("bad scalar token");
            e = e * 10 + (c - '0');
            if (e > 100000) throw std::invalid_argument("scalar exponent out of range");
        }
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || pos != tok.size())
        throw std::invalid_argument("bad scalar token: '" + std::string(tok) + "'");

    // strip leading zeros: cpp_int's string constructor reads "0..." as octal
    const auto nonzero = digits.find_first_not_of('0');
    digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);

    bigint mantissa(digits);
    if (neg) mantissa = -mantissa;
    long net = exp10 - frac_digits;
    rational value(mantissa);
    if (net > 0) value *= rational(pow10(static_cast<unsigned>(net)));
    else if (net < 0) value /= rational(pow10(static_cast<unsigned>(-net)));
    return value;
}

} // namespace detail

template <scalar S>
S parse_token(std::string_view tok);

template <>
inline double parse_token<double>(std::string_view tok) {
    std::string s(tok);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        double p = parse_token<double>(s.substr(0, slash));
        double q = parse_token<double>(s.substr(slash + 1));
        if (q == 0.0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return p / q;
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("bad scalar token: '" + s + "'");
    return v;
}

template <>
inline rational parse_token<rational>(std::string_view tok) {
    std::string s(tok);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        rational p = parse_token<rational>(s.substr(0, slash));
        rational q = parse_token<rational>(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return p / q;
    }
    return detail::parse_decimal_exact(s);
}

} // namespace wtg
