#pragma once

#include <string>

#include "empress/errors.hpp"
#include "empress/integer.hpp"

namespace empress {

// Exact rational over checked 128-bit integers, always reduced with a
// positive denominator. Equality and comparison are exact; overflow throws
// rather than losing precision.
class Rational {
public:
    Rational() = default;
    Rational(int128 numerator, int128 denominator) : num_(numerator), den_(denominator) {
        if (den_ == 0) throw ParameterError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }
    // NOLINTNEXTLINE(google-explicit-constructor): integers are rationals.
    Rational(std::int64_t value) : num_(value), den_(1) {}

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const int128 g = gcd(a.den_, b.den_);
        const int128 lhs = checked_mul(a.num_, b.den_ / g);
        const int128 rhs = checked_mul(b.num_, a.den_ / g);
        return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num_, b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const int128 g1 = gcd(abs128(a.num_), b.den_);
        const int128 g2 = gcd(a.den_, abs128(b.num_));
        return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                        checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    std::string str() const {
        if (den_ == 1) return to_string_i128(num_);
        return to_string_i128(num_) + "/" + to_string_i128(den_);
    }

private:
    static int128 abs128(int128 v) { return v < 0 ? -v : v; }

    static int128 gcd(int128 a, int128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            const int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void reduce() {
        const int128 g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_ = 0;
    int128 den_ = 1;
};

} // namespace empress
