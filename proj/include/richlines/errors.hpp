#pragma once

#include <stdexcept>
#include <string>

namespace richlines {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { using Error::Error; };
class DegenerateLine : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class ZeroPolynomial : public Error { using Error::Error; };
class EndpointRoot : public Error { using Error::Error; };
class CutNotFound : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class OracleTooLarge : public Error { using Error::Error; };
class AllJoints : public Error { using Error::Error; };

// Raised when a proof invariant fails on a concrete input. `witness` names the
// offending line, point or cell in text form.
class InvariantBreach : public Error {
public:
    InvariantBreach(const std::string& what, std::string witness)
        : Error(what + ": " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

}  // namespace richlines
