#ifndef ZS_TRANSFER_ODE_HPP
#define ZS_TRANSFER_ODE_HPP

#include <span>
#include <vector>

#include "zs/potential.hpp"
#include "zs/types.hpp"

namespace zs {

// Fundamental 2x2 solution of M' = [[-i*lambda, i*phi1], [-i*phi2, i*lambda]] M,
// M(0) = Id, together with its first and second lambda-derivatives obtained
// from the variational equations integrated alongside.
struct TransferState {
    Mat2 m;        // M(x, lambda)
    Mat2 m_d;      // d/dlambda M
    Mat2 m_dd;     // d^2/dlambda^2 M
    double x = 0;  // endpoint
    cplx lambda{};
};

// Values of the discriminant and its lambda-derivatives at period 1.
struct DiscriminantValues {
    cplx delta{};       // tr M(1, lambda)
    cplx delta_d{};     // d/dlambda
    cplx delta_dd{};    // d^2/dlambda^2
    cplx char_fn() const { return delta * delta - 4.0; }
    cplx char_fn_d() const { return 2.0 * delta * delta_d; }
};

inline constexpr double kDefaultOdeTol = 1e-12;

// deriv_order in {0, 1, 2}: how many lambda-derivatives to carry.
TransferState integrate_transfer(const Potential& phi, cplx lambda, double x,
                                 double tol, int deriv_order);

DiscriminantValues eval_discriminant(const Potential& phi, cplx lambda,
                                     double tol = kDefaultOdeTol,
                                     int deriv_order = 2);

// Batch evaluation at many spectral points. The parallel kernel computes
// each element independently and writes into its own slot, so results are
// identical to the serial reference bit for bit.
std::vector<DiscriminantValues> batch_eval_discriminant(
    const Potential& phi, std::span<const cplx> lambdas,
    double tol = kDefaultOdeTol, int deriv_order = 2);
std::vector<DiscriminantValues> batch_eval_discriminant_serial(
    const Potential& phi, std::span<const cplx> lambdas,
    double tol = kDefaultOdeTol, int deriv_order = 2);

}  // namespace zs

#endif
