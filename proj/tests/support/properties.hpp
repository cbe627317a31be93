#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "comrade/errors.hpp"
#include "comrade/rational_function.hpp"
#include "test_support.hpp"

namespace comrade::testing {

inline bool is_canonical(const RationalFunction& f) {
    if (f.den().is_zero() || f.den().leading() != Rational(1)) {
        return false;
    }
    if (f.is_zero()) {
        return f.den() == Polynomial(1);
    }
    if (!poly_gcd(f.num(), f.den()).is_constant()) {
        return false;
    }
    return RationalFunction(f.num(), f.den()) == f;
}

struct PropertyReport {
    int cases = 0;
    std::vector<std::string> failures;
};

/// Field laws, canonical-form closure and the t = 0 evaluation homomorphism
/// on random elements of Q(t).
inline PropertyReport check_rational_function_laws(std::uint64_t seed, int cases) {
    PropertyReport report;
    Gen gen(seed);
    auto fail = [&](int k, const std::string& what) {
        report.failures.push_back("case " + std::to_string(k) + ": " + what);
    };
    auto defined_at_zero = [](const RationalFunction& f) { return !f.den().at_zero().is_zero(); };

    for (int k = 0; k < cases; ++k) {
        ++report.cases;
        const RationalFunction a = gen.function();
        const RationalFunction b = gen.function();
        const RationalFunction c = gen.function();

        const RationalFunction sum = a + b;
        const RationalFunction diff = a - b;
        const RationalFunction prod = a * b;
        for (const auto* r : {&sum, &diff, &prod}) {
            if (!is_canonical(*r)) {
                fail(k, "non-canonical result " + r->str());
            }
        }
        if ((a + b) + c != a + (b + c)) {
            fail(k, "addition not associative");
        }
        if (a * (b + c) != a * b + a * c) {
            fail(k, "multiplication does not distribute");
        }
        if (a + b != b + a || a * b != b * a) {
            fail(k, "not commutative");
        }
        if (a - a != RationalFunction()) {
            fail(k, "a - a is not zero");
        }
        if (!a.is_zero()) {
            const RationalFunction inv = RationalFunction(1) / a;
            if (!is_canonical(inv) || a * inv != RationalFunction(1)) {
                fail(k, "a * a^-1 != 1 for a = " + a.str());
            }
        }
        if (!b.is_zero()) {
            const RationalFunction quot = a / b;
            if (!is_canonical(quot) || quot * b != a) {
                fail(k, "(a / b) * b != a");
            }
        }
        if (defined_at_zero(a) && defined_at_zero(b)) {
            const Rational a0 = eval_at_zero(a);
            const Rational b0 = eval_at_zero(b);
            if (defined_at_zero(sum) && eval_at_zero(sum) != a0 + b0) {
                fail(k, "evaluation does not commute with +");
            }
            if (defined_at_zero(prod) && eval_at_zero(prod) != a0 * b0) {
                fail(k, "evaluation does not commute with *");
            }
            if (!b0.is_zero()) {
                const RationalFunction quot = a / b;
                if (defined_at_zero(quot) && eval_at_zero(quot) != a0 / b0) {
                    fail(k, "evaluation does not commute with /");
                }
            }
        }
    }
    return report;
}

} // namespace comrade::testing
