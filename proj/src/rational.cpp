#include "comrade/rational.hpp"

#include <cmath>

#include "comrade/errors.hpp"

namespace comrade {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, 1);
    q_ /= den;
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw DomainError("cannot represent a non-finite double as a rational");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str(10);
    }
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace comrade
