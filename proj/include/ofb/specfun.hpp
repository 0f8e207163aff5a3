/// @file specfun.hpp
/// @brief Bessel J0/J1 on a bounded range and Jacobi elliptic functions for
///        modulus k = 1/sqrt(2) (parameter m = 1/2).
///
/// cn with m = 1/2 is the solution of cn'' + cn^3 = 0, cn(0) = 1, cn'(0) = 0.
/// Its quarter period alpha = K(1/2) is its first positive zero.
#pragma once

namespace ofb::specfun {

struct SpectralConstants {
    double mu0;    ///< first positive zero of J0
    double alpha;  ///< first positive zero of cn(. | m = 1/2)
};

/// J0 by its power series (long double accumulation). Valid for |x| <= 12;
/// throws DomainError outside.
double bessel_j0(double x);
/// J1 by its power series, same range as bessel_j0.
double bessel_j1(double x);

/// First positive zero of J0: bisection on (2, 3) followed by Newton polish.
double bessel_j0_first_zero();

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// sn, cn, dn for parameter m in [0, 1) by the descending Landen / AGM scheme.
JacobiTriple jacobi_sncndn(double u, double m);

/// cn(t | m = 1/2).
double jacobi_cn(double t);
/// d/dt cn(t | m = 1/2) = -sn dn.
double jacobi_cn_prime(double t);

/// alpha = sqrt(2) * int_0^{pi/2} dt / sqrt(2 - sin^2 t), by composite Gauss-Legendre.
double cn_first_zero();

/// K(m) = pi / (2 AGM(1, sqrt(1 - m))).
double complete_elliptic_k(double m);

/// Both constants, computed once and cached.
const SpectralConstants& spectral_constants();

}  // namespace ofb::specfun
