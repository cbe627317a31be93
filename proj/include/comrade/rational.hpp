#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace comrade {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses "p/q" or "p" (optional leading '-', ASCII digits only).
    static Rational parse(std::string_view text);
    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Rational abs() const;
    const mpq_class& raw() const { return q_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class q_;
};

std::string to_string(const Rational& r);

} // namespace comrade
