#include "comrade/rational_function.hpp"

#include "comrade/errors.hpp"

namespace comrade {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::t() {
    return RationalFunction(Polynomial::indeterminate(), Polynomial(1));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        const Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) {
        throw DomainError("division by the zero rational function");
    }
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial(1)) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational eval_at_zero(const RationalFunction& f) {
    const Rational d = f.den().at_zero();
    if (d.is_zero()) {
        throw PoleAtZeroError(f.str());
    }
    return f.num().at_zero() / d;
}

std::string to_string(const RationalFunction& f) {
    return f.str();
}

} // namespace comrade
