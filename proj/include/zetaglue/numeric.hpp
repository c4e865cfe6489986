#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace zg {

/// Tolerances and cutoff controls shared by every regularized computation.
struct NumericOptions {
  /// Absolute target for regularized quantities.
  double target = 1e-10;
  /// Required tail bound for convergent spectral series.
  double series_tol = 1e-14;
  /// Multiplier applied to every automatically chosen spectral cutoff.
  double cutoff_scale = 1.0;
  /// Mellin split point for the explicit-spectrum zeta backend; 0 picks one from the cutoff.
  double mellin_split = 0.0;
};

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

/// Natural log of a nonzero real number, with the sign carried as a phase count (multiples of pi).
struct SignedLog {
  double log_modulus = 0.0;
  int phase = 0;
};

SignedLog signed_log(double x);

/// ln(1 + d) for d > -1 computed without cancellation, with the phase convention of signed_log otherwise.
SignedLog signed_log1p(double d);

/// Number of worker threads; capped by ZETAGLUE_THREADS when set.
unsigned thread_count();

/// Evaluates f(i) for i in [0, n) on up to thread_count() threads.  Output order is by index,
/// so any reduction done afterwards is independent of the thread count.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f);

/// Harmonic number H_n = sum_{p=1}^n 1/p computed exactly as a rational and rounded once.
double harmonic(int n);

}  // namespace zg

#include "zetaglue/detail/parallel_map.hpp"
