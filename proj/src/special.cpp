#include "zetaglue/special.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "zetaglue/error.hpp"
#include "zetaglue/numeric.hpp"

namespace zg {
namespace {

// B_{2j} / (2j)! for j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = [] {
  constexpr std::array<double, 15> bern = {
      1.0 / 6.0,           -1.0 / 30.0,          1.0 / 42.0,
      -1.0 / 30.0,         5.0 / 66.0,           -691.0 / 2730.0,
      7.0 / 6.0,           -3617.0 / 510.0,      43867.0 / 798.0,
      -174611.0 / 330.0,   854513.0 / 138.0,     -236364091.0 / 2730.0,
      8553103.0 / 6.0,     -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};
  std::array<double, 15> out{};
  double fact = 1.0;
  for (int j = 1; j <= 15; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    out[j - 1] = bern[j - 1] / fact;
  }
  return out;
}();

// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers.
double sin_pi(double x) {
  const double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (std::abs(r) == 0.5) return r > 0 ? 1.0 : -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

bool is_nonpositive_integer(double s) { return s <= 0.0 && s == std::floor(s); }

}  // namespace

ValueAndDerivative hurwitz_zeta(double s, double a) {
  require(a > 0.0 && std::isfinite(a), ErrorKind::Domain, "hurwitz_zeta requires a > 0");
  require(s != 1.0, ErrorKind::Domain, "hurwitz_zeta has a pole at s = 1");

  // Smaller shift for s < 0 keeps the x^{1-s} cancellation in check; 15 correction terms still suffice.
  const double want = (s < 0.0 ? 12.0 : 20.0) + std::abs(s);
  const int n_direct = a >= want ? 0 : static_cast<int>(std::ceil(want - a));

  CompensatedSum val, der;
  for (int k = 0; k < n_direct; ++k) {
    const double base = k + a;
    const double p = std::pow(base, -s);
    val.add(p);
    der.add(-std::log(base) * p);
  }

  const double x = n_direct + a;
  const double lx = std::log(x);
  const double x1s = std::pow(x, 1.0 - s);
  val.add(x1s / (s - 1.0));
  der.add(x1s * (-lx / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0))));
  const double xs = std::pow(x, -s);
  val.add(0.5 * xs);
  der.add(-0.5 * lx * xs);

  // Rising product P_j(s) = s (s+1) ... (s+2j-2) and its derivative.
  double poly = s, dpoly = 1.0;
  double xpow = xs / x;  // x^{-s-1}
  for (int j = 1; j <= 15; ++j) {
    if (j > 1) {
      for (int i = 2 * j - 3; i <= 2 * j - 2; ++i) {
        dpoly = dpoly * (s + i) + poly;
        poly *= (s + i);
      }
      xpow /= x * x;
    }
    const double c = kBernoulliOverFactorial[j - 1];
    val.add(c * poly * xpow);
    der.add(c * xpow * (dpoly - poly * lx));
  }
  return {val.value(), der.value()};
}

ValueAndDerivative riemann_zeta(double s) {
  require(s != 1.0, ErrorKind::Domain, "riemann_zeta has a pole at s = 1");
  if (s >= 0.0) return hurwitz_zeta(s, 1.0);

  // Functional equation: zeta(s) = Q(s) sin(pi s / 2) zeta(1 - s),
  // Q(s) = 2^s pi^{s-1} Gamma(1 - s).
  const double q = std::exp(s * kLn2 + (s - 1.0) * std::log(kPi) + log_gamma(1.0 - s));
  const double dq = q * (kLn2 + std::log(kPi) - digamma(1.0 - s));
  const ValueAndDerivative z = hurwitz_zeta(1.0 - s, 1.0);
  const double sn = sin_pi(s / 2.0);
  const double cs = cos_pi(s / 2.0);
  const double p = q * z.value;
  const double dp = dq * z.value - q * z.derivative;
  return {p * sn, dp * sn + p * (kPi / 2.0) * cs};
}

double log_gamma(double a) {
  require(a > 0.0 && std::isfinite(a), ErrorKind::Domain, "log_gamma requires a > 0");
  return boost::math::lgamma(a);
}

double digamma(double x) {
  require(!is_nonpositive_integer(x), ErrorKind::Domain, "digamma pole at a non-positive integer");
  return boost::math::digamma(x);
}

double reciprocal_gamma(double s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s > 170.0) return std::exp(-log_gamma(s));
  return 1.0 / boost::math::tgamma(s);
}

double reciprocal_gamma_derivative(double s) {
  if (is_nonpositive_integer(s)) {
    // Near -n, 1/Gamma(s) = (-1)^n n! (s + n) + O((s+n)^2).
    const int n = static_cast<int>(-s);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    return (n % 2 == 0 ? 1.0 : -1.0) * fact;
  }
  return -digamma(s) * reciprocal_gamma(s);
}

double upper_gamma(double a, double x) {
  require(x > 0.0, ErrorKind::Domain, "upper_gamma requires x > 0");
  if (a > 0.0) return boost::math::tgamma(a, x);
  if (a == 0.0) return boost::math::expint(1, x);
  if (x >= 1.0) {
    // Continued fraction (modified Lentz); the downward recurrence below amplifies
    // rounding by x/|a| per step, which is ruinous once x is large.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
      const double an = -i * (i - a);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const double del = d * c;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(a * std::log(x) - x) * h;
  }
  // Downward recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a from a start in [0, 1).
  const int steps = static_cast<int>(std::ceil(-a));
  double b = a + steps;
  double g = b == 0.0 ? static_cast<double>(boost::math::expint(1, x)) : boost::math::tgamma(b, x);
  const double lx = std::log(x);
  for (int i = 0; i < steps; ++i) {
    b -= 1.0;
    g = (g - std::exp(b * lx - x)) / b;
  }
  return g;
}

double lower_gamma(double a, double x) {
  require(a > 0.0 && x >= 0.0, ErrorKind::Domain, "lower_gamma requires a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  return boost::math::tgamma_lower(a, x);
}

}  // namespace zg
