#include "comrade/scalar.hpp"

#include <array>
#include <charconv>

#include "comrade/errors.hpp"

namespace comrade {

std::string_view to_string(ScalarMode mode) {
    switch (mode) {
    case ScalarMode::exact:
        return "exact";
    case ScalarMode::symbolic:
        return "symbolic";
    case ScalarMode::floating:
        return "float";
    }
    return "unknown";
}

ScalarMode parse_mode(std::string_view text) {
    if (text == "exact") {
        return ScalarMode::exact;
    }
    if (text == "symbolic") {
        return ScalarMode::symbolic;
    }
    if (text == "float") {
        return ScalarMode::floating;
    }
    throw ParseError("unknown mode \"" + std::string(text) + "\" (expected exact, symbolic or float)");
}

std::string to_string(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string to_string(const Number& value) {
    return std::visit([](const auto& v) { return comrade::to_string(v); }, value);
}

double to_double(const Number& value) {
    if (const auto* r = std::get_if<Rational>(&value)) {
        return r->to_double();
    }
    return std::get<double>(value);
}

} // namespace comrade
