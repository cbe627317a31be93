#pragma once

#include <string>

#include "comrade/polynomial.hpp"
#include "comrade/rational.hpp"

namespace comrade {

/// Element of Q(t) kept in canonical form: num and den coprime, den monic,
/// and zero stored as 0/1. Two values are equal iff their fields are equal.
///
/// Every constructor and operator re-establishes the canonical form, so
/// substituting t = 0 (eval_at_zero) always acts on the reduced fraction.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(Polynomial num, Polynomial den);

    /// The indeterminate t.
    static RationalFunction t();

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// "num" when den = 1, otherwise "(num)/(den)".
    std::string str() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// num(0)/den(0). Throws PoleAtZeroError when den(0) = 0.
Rational eval_at_zero(const RationalFunction& f);

std::string to_string(const RationalFunction& f);

} // namespace comrade
