// Exact rational arithmetic over 64-bit integers with overflow-checked
// 128-bit intermediates.  Coordinates and matrix entries in this project
// stay small; any overflow is a logic error and throws.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pmb {

using i64 = long long;
using i128 = __int128;

inline i64 narrow128(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error("rational overflow");
    return static_cast<i64>(v);
}

struct Rat {
    i64 num = 0;
    i64 den = 1;  // always > 0

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rat make128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num = narrow128(n);
        r.den = narrow128(d);
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make128(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make128(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return make128(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool is_integer() const { return den == 1; }
    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_abs(const Rat& a) { return a.num < 0 ? -a : a; }

}  // namespace pmb
