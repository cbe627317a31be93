#include "comrade/lu.hpp"

namespace comrade {

std::string to_string(const Substitution& s) {
    return std::string(s.kind == SubstitutionKind::pivot ? "mu_" : "alpha_") + std::to_string(s.index) + " := t";
}

Number determinant(const ComradeMatrix& c, ScalarMode mode, OpCounter* ops) {
    switch (mode) {
    case ScalarMode::exact:
        return determinant_in(lift<Rational>(c), ops);
    case ScalarMode::symbolic:
        return eval_at_zero(determinant_in(lift<RationalFunction>(c), ops));
    case ScalarMode::floating:
        return determinant_in(lift<double>(c), ops);
    }
    throw Error("unknown scalar mode");
}

} // namespace comrade
