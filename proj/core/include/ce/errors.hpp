#ifndef CE_ERRORS_HPP
#define CE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ce {

// Error classes map onto CLI exit codes; see tools/ce_cli.
enum class ErrorClass {
    InvalidInput = 2,   // bad arguments, malformed descriptors, domain violations
    Precondition = 3,   // operation preconditions not met
    Numeric = 4,        // quadrature/solver non-convergence, uncertifiable tails
    Refused = 5,        // improvement operator declined (expected for optimal inputs)
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(ErrorClass::InvalidInput, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorClass::Precondition, what) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(ErrorClass::Numeric, what) {}
};

// Carries the best estimate when adaptive quadrature runs out of budget.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& what, double estimate, double error_bound)
        : NumericError(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

class RefusedError : public Error {
public:
    explicit RefusedError(const std::string& what) : Error(ErrorClass::Refused, what) {}
};

} // namespace ce

#endif
