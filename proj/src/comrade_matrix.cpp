#include "comrade/comrade_matrix.hpp"

#include <random>

namespace comrade {

ComradeMatrix example33(int n) {
    if (n < 3) {
        throw OrderError("comrade matrix order must be at least 3, got " + std::to_string(n));
    }
    const Rational half(1, 2);
    std::vector<Rational> beta(static_cast<std::size_t>(n), Rational(-3, 2));
    beta.back() = Rational(-2);
    std::vector<Rational> alpha(static_cast<std::size_t>(n - 1), half);
    std::vector<Rational> gamma(static_cast<std::size_t>(n - 1), half);
    gamma.back() = Rational(0);
    std::vector<Rational> tail(static_cast<std::size_t>(n - 2), -half);
    return make_comrade(n, std::move(beta), std::move(alpha), std::move(gamma), std::move(tail));
}

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not,
// so the mapping to entries is done by hand for reproducibility.
class EntrySource {
public:
    explicit EntrySource(std::uint64_t seed) : engine_(seed) {}

    Rational small_int() { return Rational(static_cast<long>(engine_() % 19) - 9); }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }

private:
    std::mt19937_64 engine_;
};

} // namespace

ComradeMatrix random_comrade(int n, std::uint64_t seed, double zero_pivot_bias) {
    if (n < 3) {
        throw OrderError("comrade matrix order must be at least 3, got " + std::to_string(n));
    }
    EntrySource src(seed);
    auto draw = [&](int count) {
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            v.push_back(src.small_int());
        }
        return v;
    };
    auto beta = draw(n);
    auto alpha = draw(n - 1);
    auto gamma = draw(n - 1);
    auto tail = draw(n - 2);
    if (src.unit() < zero_pivot_bias) {
        beta.front() = Rational(0);
    }
    if (src.unit() < zero_pivot_bias) {
        alpha.at(static_cast<std::size_t>(src.below(n - 2))) = Rational(0);
    }
    return make_comrade(n, std::move(beta), std::move(alpha), std::move(gamma), std::move(tail));
}

} // namespace comrade
