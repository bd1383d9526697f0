#pragma once

#include <stdexcept>
#include <string>

namespace stpow {

enum class ErrorKind {
    DenominatorVanishes,
    DivisionByZero,
    NotPrime,
    RingMismatch,
    SubstitutionIncomplete,
    DerivationDegreeError,
    ExponentOverflow,
    ParseError,
    NotSymmetric,
    IndexOutOfRange,
    BasisError,
    NonTriangular,
    IdealMismatch,
    UnknownName,
    UnknownCheck,
    FactBaseError,
};

const char* to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace stpow
