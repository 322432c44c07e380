#include "zs/transfer_ode.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <cmath>
#include <mutex>
#include <sstream>

#include "zs/errors.hpp"
#include "zs/parallel.hpp"

namespace zs {

namespace {

struct OdeParams {
    const Potential* phi;
    cplx lambda;
    int order;  // 0: M, 1: +M_d, 2: +M_dd
};

// State layout: blocks of 8 doubles per matrix (re/im of a,b,c,d),
// ordered M, M_d, M_dd.
inline void unpack(const double* y, Mat2& m, int block) {
    const double* p = y + 8 * block;
    m.a = {p[0], p[1]};
    m.b = {p[2], p[3]};
    m.c = {p[4], p[5]};
    m.d = {p[6], p[7]};
}

inline void pack(double* y, const Mat2& m, int block) {
    double* p = y + 8 * block;
    p[0] = m.a.real(); p[1] = m.a.imag();
    p[2] = m.b.real(); p[3] = m.b.imag();
    p[4] = m.c.real(); p[5] = m.c.imag();
    p[6] = m.d.real(); p[7] = m.d.imag();
}

// A(x) M with A = [[-i*lam, i*p1], [-i*p2, i*lam]]
inline Mat2 coeff_apply(cplx lam, cplx p1, cplx p2, const Mat2& m) {
    const cplx il(0.0, 1.0);
    const cplx a11 = -il * lam, a12 = il * p1, a21 = -il * p2, a22 = il * lam;
    return {a11 * m.a + a12 * m.c, a11 * m.b + a12 * m.d,
            a21 * m.a + a22 * m.c, a21 * m.b + a22 * m.d};
}

// dA/dlambda M = diag(-i, i) M
inline Mat2 coeff_d_apply(const Mat2& m) {
    const cplx il(0.0, 1.0);
    return {-il * m.a, -il * m.b, il * m.c, il * m.d};
}

int rhs(double x, const double* y, double* dy, void* params) {
    const auto* p = static_cast<const OdeParams*>(params);
    cplx p1, p2;
    p->phi->eval(x, p1, p2);

    Mat2 m;
    unpack(y, m, 0);
    pack(dy, coeff_apply(p->lambda, p1, p2, m), 0);
    if (p->order >= 1) {
        Mat2 md;
        unpack(y, md, 1);
        pack(dy, coeff_apply(p->lambda, p1, p2, md) + coeff_d_apply(m), 1);
        if (p->order >= 2) {
            Mat2 mdd;
            unpack(y, mdd, 2);
            pack(dy, coeff_apply(p->lambda, p1, p2, mdd) + 2.0 * coeff_d_apply(md), 2);
        }
    }
    return GSL_SUCCESS;
}

void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

}  // namespace

TransferState integrate_transfer(const Potential& phi, cplx lambda, double x,
                                 double tol, int deriv_order) {
    if (!(tol > 0)) throw InputError("integrate_transfer: tol must be positive");
    if (x < 0.0 || x > 1.0) throw InputError("integrate_transfer: x must be in [0,1]");
    if (deriv_order < 0 || deriv_order > 2)
        throw InputError("integrate_transfer: deriv_order must be 0, 1 or 2");
    disable_gsl_abort();

    OdeParams params{&phi, lambda, deriv_order};
    const size_t dim = 8 * (deriv_order + 1);
    gsl_odeiv2_system sys{rhs, nullptr, dim, &params};

    const double h0 = std::min(1e-2, 0.1 / (1.0 + std::abs(lambda)));
    gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
        &sys, gsl_odeiv2_step_rk8pd, h0, tol, tol);
    if (!drv) throw IntegratorError("integrate_transfer: driver allocation failed");
    gsl_odeiv2_driver_set_hmin(drv, 1e-14);

    double y[24] = {0};
    pack(y, Mat2::identity(), 0);
    if (deriv_order >= 1) pack(y, Mat2{}, 1);
    if (deriv_order >= 2) pack(y, Mat2{}, 2);

    double t = 0.0;
    int status = (x > 0.0) ? gsl_odeiv2_driver_apply(drv, &t, x, y) : GSL_SUCCESS;
    gsl_odeiv2_driver_free(drv);
    if (status != GSL_SUCCESS) {
        std::ostringstream os;
        os << "integrate_transfer: step control failed (status " << status
           << ") at lambda = " << lambda.real() << (lambda.imag() < 0 ? " - " : " + ")
           << std::abs(lambda.imag()) << "i";
        throw IntegratorError(os.str());
    }

    TransferState st;
    st.x = x;
    st.lambda = lambda;
    unpack(y, st.m, 0);
    if (deriv_order >= 1) unpack(y, st.m_d, 1);
    if (deriv_order >= 2) unpack(y, st.m_dd, 2);
    return st;
}

DiscriminantValues eval_discriminant(const Potential& phi, cplx lambda,
                                     double tol, int deriv_order) {
    TransferState st = integrate_transfer(phi, lambda, 1.0, tol, deriv_order);
    DiscriminantValues v;
    v.delta = st.m.trace();
    if (deriv_order >= 1) v.delta_d = st.m_d.trace();
    if (deriv_order >= 2) v.delta_dd = st.m_dd.trace();
    return v;
}

std::vector<DiscriminantValues> batch_eval_discriminant(
    const Potential& phi, std::span<const cplx> lambdas, double tol,
    int deriv_order) {
    std::vector<DiscriminantValues> out(lambdas.size());
    parallel_map(lambdas.size(), [&](std::size_t i) {
        out[i] = eval_discriminant(phi, lambdas[i], tol, deriv_order);
    });
    return out;
}

std::vector<DiscriminantValues> batch_eval_discriminant_serial(
    const Potential& phi, std::span<const cplx> lambdas, double tol,
    int deriv_order) {
    std::vector<DiscriminantValues> out(lambdas.size());
    serial_map(lambdas.size(), [&](std::size_t i) {
        out[i] = eval_discriminant(phi, lambdas[i], tol, deriv_order);
    });
    return out;
}

}  // namespace zs
