#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comrade/rational.hpp"

namespace comrade {

/// Univariate polynomial in t over the rationals. coefficients()[k] is the
/// coefficient of t^k; there are no trailing zeros, so the zero polynomial
/// has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}

    /// The polynomial t.
    static Polynomial indeterminate();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& leading() const;

    Rational evaluate(const Rational& at) const;
    Rational at_zero() const { return is_zero() ? Rational() : coeffs_.front(); }

    /// Scales to leading coefficient 1. Zero stays zero.
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& s);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, e.g. "7*t - 6".
    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
/// Throws DomainError when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. Throws DomainError when both are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

} // namespace comrade
