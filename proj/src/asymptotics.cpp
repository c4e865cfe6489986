#include "zetaglue/asymptotics.hpp"

#include <cmath>

#include "zetaglue/error.hpp"
#include "zetaglue/numeric.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double c_k(int k) {
  require(k >= 1, ErrorKind::Domain, "c_k requires k >= 1");
  if (k % 2 == 0) return harmonic(k / 2 - 1);
  CompensatedSum acc;
  acc.add(-2.0 * kLn2);
  for (int p = 1; p <= k / 2; ++p) acc.add(2.0 / (2.0 * p - 1.0));
  return acc.value();
}

double s_alpha(const HeatExpansion& heat, double alpha) {
  const int d = heat.cross_dim;
  CompensatedSum acc;
  for (int k = 1; k <= d; ++k) {
    if ((d - k) % 2 != 0) continue;
    const int j = (d - k) / 2;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double inv_gamma = std::exp(-log_gamma(0.5 * k));
    acc.add(-sign * heat.coeff(j) * std::pow(alpha, k) / k * inv_gamma * (2.0 * harmonic(k - 1) - c_k(k)));
  }
  return acc.value();
}

double s_alpha_pair(const HeatExpansion& heat, double alpha) {
  const int d = heat.cross_dim;
  if (d % 2 != 0) return 0.0;
  CompensatedSum acc;
  for (int k = 1; k <= d / 2; ++k)
    acc.add(-heat.coeff(d / 2 - k) * std::pow(alpha, 2 * k) / factorial(k) *
            (2.0 * harmonic(2 * k - 1) - harmonic(k - 1)));
  return acc.value();
}

std::pair<double, double> w0_w1(const HeatExpansion& heat, double alpha) {
  const int d = heat.cross_dim;
  if (d % 2 != 0) return {0.0, 0.0};
  CompensatedSum w0, w1;
  w0.add(heat.coeff(d / 2));
  for (int k = 1; k <= d / 2; ++k) {
    const double t = heat.coeff(d / 2 - k) * std::pow(alpha, 2 * k) / factorial(k);
    w0.add(2.0 * t);
    if (k >= 2) w1.add(-t * harmonic(k - 1));
  }
  return {w0.value(), w1.value()};
}

AsymConstants asym_constants(const HeatExpansion& heat, double alpha) {
  AsymConstants c;
  c.s_alpha = s_alpha(heat, alpha);
  c.s_minus_alpha = s_alpha(heat, -alpha);
  std::tie(c.w0, c.w1) = w0_w1(heat, alpha);
  c.a0 = heat.cross_dim % 2 == 0 ? -kLn2 * c.w0 + c.w1 : 0.0;
  return c;
}

double a0_constant(const Components& components, int m) {
  CompensatedSum acc;
  for (const auto& [heat, alpha] : components) {
    require(heat.cross_dim + 1 == m, ErrorKind::Validation, "boundary components disagree with dim M");
    if ((m - 1) % 2 != 0) continue;
    const auto [w0, w1] = w0_w1(heat, alpha);
    acc.add(-kLn2 * w0 + w1);
  }
  return acc.value();
}

double b0_constant(const Components& components) {
  CompensatedSum acc;
  for (const auto& [heat, alpha] : components) acc.add(-s_alpha(heat, alpha));
  return acc.value();
}

}  // namespace zg
