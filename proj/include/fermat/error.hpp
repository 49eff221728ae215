#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

class PoleAtSamplePoint : public Error {
public:
    PoleAtSamplePoint() : Error("sample point is a pole") {}
};

class OverflowAtSamplePoint : public Error {
public:
    OverflowAtSamplePoint() : Error("exponent too large at sample point") {}
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Raised when Q - R1^m vanishes identically and the degree balance has no
/// right-hand side to compare against.
class DegenerateDifference : public Error {
public:
    DegenerateDifference() : Error("Q - R1^m vanishes identically") {}
};

class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class AllPointsRejected : public Error {
public:
    AllPointsRejected() : Error("every drawn sample point was rejected") {}
};

class NotMonomialPair : public Error {
public:
    NotMonomialPair() : Error("R*f^(k) +/- i*f is not a pair of single exponential terms") {}
};

class ZeroBase : public Error {
public:
    ZeroBase() : Error("k-th roots of zero requested") {}
};

class ParseError : public Error {
public:
    enum class Kind { Lex, Syntax, NonPolynomialExponent, DivisionByZero, NotInvertible, ExponentTooLarge };

    ParseError(Kind kind, std::size_t offset, const std::string& message)
        : Error(message + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset), detail_(message) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::string detail_;
};

/// Failures reported by the solution-family constructors.
class FamilyError : public Error {
public:
    enum class Kind { NoSolutionInFamily, FamilyDegenerate, EmptyFamily, SideConditionFailed, VerificationFailed };

    FamilyError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

    /// True for the outcomes where the family simply has no member.
    bool is_empty_family() const noexcept {
        return kind_ == Kind::NoSolutionInFamily || kind_ == Kind::FamilyDegenerate || kind_ == Kind::EmptyFamily;
    }

private:
    Kind kind_;
};

}  // namespace fermat
