#pragma once

#include "ripsmorse/errors.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace ripsmorse {

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) = 1). Comparisons cross-multiply in 128 bits,
// so no overflow for desk-scale inputs.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw EngineError("ZeroDenominator", "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den, b.den);
        return {a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den, b.den);
        return {a.num * (b.den / g) - b.num * (a.den / g), (a.den / g) * b.den};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational{(a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw EngineError("DivisionByZero", "rational division by zero");
        return a * Rational{b.den, b.num};
    }
    Rational operator-() const { return {-num, den}; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational abs(const Rational& r) { return r.num < 0 ? -r : r; }

// Parses "p", "-p" or "p/q". Throws SchemaError on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { return schema_error("cannot parse rational '" + s + "'"); };
    if (s.empty()) throw bad();
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw bad();
            return {n};
        }
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw bad();
        long long d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw bad();
        if (d <= 0) throw bad();
        return {n, d};
    } catch (const EngineError&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

// Scale threshold: a rational or +infinity ("inf" in the JSON schema).
using Scale = std::optional<Rational>;

inline bool scale_le(const Rational& value, const Scale& t) {
    return !t.has_value() || value <= *t;
}

inline std::string scale_str(const Scale& t) { return t ? t->str() : "inf"; }

} // namespace ripsmorse
