#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.  Intermediate
// products use 128-bit integers; results that do not reduce back into 64
// bits throw instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latdirac {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}

    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        assign(nn, dd);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    using i128 = __int128;

    static Rational from128(i128 n, i128 d) {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        r.assign(n, d);
        return r;
    }

    void assign(i128 n, i128 d) {
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflows 64 bits after reduction");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::string to_string(const Rational& r) {
    return r.den() == 1 ? std::to_string(r.num())
                        : std::to_string(r.num()) + "/" + std::to_string(r.den());
}

}  // namespace latdirac
