#pragma once

namespace zg {

struct ValueAndDerivative {
  double value = 0.0;
  double derivative = 0.0;  // d/ds at the evaluation point
};

/// Hurwitz zeta zeta_H(s, a) = sum_{k>=0} (k+a)^{-s} and its s-derivative, by Euler-Maclaurin
/// summation. Requires a > 0 and s != 1.
ValueAndDerivative hurwitz_zeta(double s, double a);

/// Riemann zeta and its derivative. s != 1.
ValueAndDerivative riemann_zeta(double s);

/// ln Gamma(a) for a > 0.
double log_gamma(double a);

double digamma(double x);

/// 1/Gamma(s), exactly zero at the non-positive integers.
double reciprocal_gamma(double s);

/// d/ds [1/Gamma(s)].
double reciprocal_gamma_derivative(double s);

/// Upper incomplete gamma Gamma(a, x) for real a and x > 0.
double upper_gamma(double a, double x);

/// Lower incomplete gamma gamma(a, x) for a > 0, x >= 0.
double lower_gamma(double a, double x);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

}  // namespace zg
