#include "zetaglue/numeric.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "zetaglue/error.hpp"

namespace zg {

double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

SignedLog signed_log(double x) {
  require(x != 0.0 && std::isfinite(x), ErrorKind::Domain, "logarithm of zero or non-finite value");
  return {std::log(std::abs(x)), x < 0.0 ? 1 : 0};
}

SignedLog signed_log1p(double d) {
  if (d > -1.0) return {std::log1p(d), 0};
  return signed_log(1.0 + d);
}

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ZETAGLUE_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return hw;
}

double harmonic(int n) {
  require(n >= 0, ErrorKind::Domain, "harmonic number of negative index");
  // Exact rational accumulation num/den; falls back to floating point once the
  // denominator would overflow (n beyond ~40, far past any index used here).
  std::int64_t num = 0, den = 1;
  for (int p = 1; p <= n; ++p) {
    const std::int64_t g = std::gcd(den, static_cast<std::int64_t>(p));
    std::int64_t new_den, a, b;
    if (__builtin_mul_overflow(den / g, static_cast<std::int64_t>(p), &new_den) ||
        __builtin_mul_overflow(num, static_cast<std::int64_t>(p) / g, &a) ||
        __builtin_add_overflow(a, den / g, &b)) {
      CompensatedSum acc;
      acc.add(static_cast<double>(num) / static_cast<double>(den));
      for (int q = p; q <= n; ++q) acc.add(1.0 / q);
      return acc.value();
    }
    num = b;
    den = new_den;
    const std::int64_t r = std::gcd(num, den);
    num /= r;
    den /= r;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace zg
