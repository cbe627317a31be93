#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "comrade/rational.hpp"
#include "comrade/rational_function.hpp"

namespace comrade {

/// Arithmetic used for one computation: exact rationals, rational functions
/// in the substitution symbol t, or binary64.
enum class ScalarMode { exact, symbolic, floating };

std::string_view to_string(ScalarMode mode);
/// Accepts "exact", "symbolic", "float". Throws ParseError otherwise.
ScalarMode parse_mode(std::string_view text);

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr ScalarMode mode = ScalarMode::exact;
    static constexpr bool symbolic = false;
    static Rational lift(const Rational& r) { return r; }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
};

template <>
struct field_traits<RationalFunction> {
    static constexpr ScalarMode mode = ScalarMode::symbolic;
    static constexpr bool symbolic = true;
    static RationalFunction lift(const Rational& r) { return RationalFunction(r); }
    /// Identically zero in Q(t); a nonzero function with a root at 0 is not zero.
    static bool is_zero(const RationalFunction& v) { return v.is_zero(); }
    static RationalFunction indeterminate() { return RationalFunction::t(); }
};

/// Zero means exactly 0.0. There is no epsilon.
template <>
struct field_traits<double> {
    static constexpr ScalarMode mode = ScalarMode::floating;
    static constexpr bool symbolic = false;
    static double lift(const Rational& r) { return r.to_double(); }
    static bool is_zero(double v) { return v == 0.0; }
};

template <class F>
concept Field = requires(const F& a, const F& b, const Rational& r) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { field_traits<F>::lift(r) } -> std::convertible_to<F>;
    { field_traits<F>::is_zero(a) } -> std::convertible_to<bool>;
};

/// Tally of scalar field operations (add, sub, mul, div).
class OpCounter {
public:
    void tick(std::uint64_t ops = 1) noexcept { count_ += ops; }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t count_ = 0;
};

inline void tick(OpCounter* counter, std::uint64_t ops) noexcept {
    if (counter != nullptr) {
        counter->tick(ops);
    }
}

/// Final numeric value of a computation: exact for the exact and symbolic
/// modes (symbolic results are evaluated at t = 0), double for float mode.
using Number = std::variant<Rational, double>;

/// Shortest round-trip decimal form.
std::string to_string(double value);
std::string to_string(const Number& value);
double to_double(const Number& value);

} // namespace comrade
