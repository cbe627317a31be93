#pragma once

#include <stdexcept>
#include <string>

namespace comrade {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or file content. The message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Field-level failure: division by zero, gcd of two zero polynomials.
class DomainError : public Error {
public:
    using Error::Error;
};

class OrderError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError() : Error("matrix is singular") {}
};

/// A reduced rational function has a vanishing denominator at t = 0.
class PoleAtZeroError : public DomainError {
public:
    explicit PoleAtZeroError(const std::string& where)
        : DomainError("pole at t=0" + (where.empty() ? std::string() : " in " + where)) {}
};

enum class SubstitutionKind { pivot, alpha };

/// Raised by the exact and float paths when a divisor (a pivot mu_i or a
/// superdiagonal alpha_j) is zero. Index is the 1-based subscript.
class ZeroPivotError : public Error {
public:
    ZeroPivotError(SubstitutionKind kind, int index)
        : Error(std::string(kind == SubstitutionKind::pivot ? "zero pivot" : "zero alpha") +
                " at index " + std::to_string(index) + "; retry in symbolic mode"),
          kind_(kind), index_(index) {}

    SubstitutionKind kind() const noexcept { return kind_; }
    int index() const noexcept { return index_; }

private:
    SubstitutionKind kind_;
    int index_;
};

} // namespace comrade
