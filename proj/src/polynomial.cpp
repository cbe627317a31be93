#include "comrade/polynomial.hpp"

#include <algorithm>

#include "comrade/errors.hpp"

namespace comrade {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

Polynomial Polynomial::indeterminate() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw DomainError("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading() == Rational(1)) {
        return *this;
    }
    const Rational inv = Rational(1) / leading();
    return *this * inv;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
    const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
    std::vector<Rational> out = longer;
    for (std::size_t k = 0; k < shorter.size(); ++k) {
        out[k] += shorter[k];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
    if (s.is_zero()) {
        return {};
    }
    Polynomial r = a;
    for (auto& c : r.coeffs_) {
        c *= s;
    }
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) {
            out += mag.str() + "*";
        }
        out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Polynomial(), a};
    }
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto bc = b.coefficients();
    const Rational inv_lead = Rational(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + b.degree());
        if (rem[top].is_zero()) {
            continue;
        }
        const Rational factor = rem[top] * inv_lead;
        quot[static_cast<std::size_t>(k)] = factor;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            rem[static_cast<std::size_t>(k) + j] -= factor * bc[j];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) {
        throw DomainError("gcd of two zero polynomials");
    }
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace comrade
