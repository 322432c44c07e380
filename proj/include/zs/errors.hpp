#ifndef ZS_ERRORS_HPP
#define ZS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step-size underflow or hard failure of the transfer-matrix integrator;
// carries the offending spectral parameter in the message.
struct IntegratorError : Error {
    using Error::Error;
};

// Argument-principle counting could not be certified (near-zero on contour,
// non-integer residual after node doubling, count mismatch).
struct CountingError : Error {
    using Error::Error;
};

// Quadrature node doubling hit its cap without stabilizing.
struct QuadratureError : Error {
    using Error::Error;
};

// Truncated linear system could not be solved/certified.
struct SolveError : Error {
    using Error::Error;
};

// Bad input file or parameters.
struct InputError : Error {
    using Error::Error;
};

}  // namespace zs

#endif
