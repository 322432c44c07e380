#ifndef ZS_TYPES_HPP
#define ZS_TYPES_HPP

#include <complex>
#include <cmath>
#include <numbers>

namespace zs {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// 2x2 complex matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator*(cplx s, const Mat2& x) {
        return {s * x.a, s * x.b, s * x.c, s * x.d};
    }
};

// Order on C by real part, then imaginary part.
inline bool lex_less(const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}
inline bool lex_leq(const cplx& x, const cplx& y) {
    return !lex_less(y, x);
}

// pi_k: the normalizer k*pi for k != 0 and 1 for k = 0.
inline double pi_k(int k) { return k == 0 ? 1.0 : k * pi; }

// sin(z)/z, stable at z = 0.
inline cplx sinc(const cplx& z) {
    if (std::abs(z) < 1e-4) {
        cplx z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
    }
    return std::sin(z) / z;
}

}  // namespace zs

#endif
