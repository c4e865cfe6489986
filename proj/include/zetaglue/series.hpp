#pragma once

#include <string>

#include "zetaglue/numeric.hpp"
#include "zetaglue/spectra.hpp"

namespace zg {

/// The convergent sums over mu_j > 0 that appear in the cylinder, interface and gluing formulas.
/// Each is sum_j m_j ln f(sqrt(mu_j)) with f -> 1 exponentially fast.
struct SeriesForm {
  enum class Kind {
    Log1mExp,         // ln(1 - e^{-2Lr})
    Log1pExp,         // ln(1 + e^{-2Lr})
    RobinBoth,        // ln(1 - (r-a)^2 / ((r+a)^2 e^{2Lr}))
    RobinEnd,         // ln(1 - (r-a) / ((r+a) e^{2Lr}))
    RobinPair,        // ln[(1 - e^{-2Lr}) / ((1 - (r-a)/((r+a) e^{2 c r})) (1 - (r+a)/((r-a) e^{2(L-c) r})))]
    NeumannPair,      // ln[(1 - e^{-2Lr}) / ((1 - e^{-2cr}) (1 - e^{-2(L-c)r}))]
    BothEndsShift,    // ln(1 + 4 a r / ((r+a)^2 (e^{2Lr} - 1)))
    NeumannEndShift,  // ln(1 + 2 / (e^{2Lr} - 1))
    RobinEndShift,    // ln(1 - 2r / ((r+a)(e^{2Lr} + 1)))
  };
  Kind kind;
  double length = 1.0;  // L
  double alpha = 0.0;   // a in the comments above
  double cut = 0.0;     // c in the comments above

  static SeriesForm log1m_exp(double L) { return {Kind::Log1mExp, L}; }
  static SeriesForm log1p_exp(double L) { return {Kind::Log1pExp, L}; }
  static SeriesForm robin_both(double L, double alpha) { return {Kind::RobinBoth, L, alpha}; }
  static SeriesForm robin_end(double L, double alpha) { return {Kind::RobinEnd, L, alpha}; }
  static SeriesForm robin_pair(double L, double cut, double alpha) { return {Kind::RobinPair, L, alpha, cut}; }
  static SeriesForm neumann_pair(double L, double cut) { return {Kind::NeumannPair, L, 0.0, cut}; }
  static SeriesForm both_ends_shift(double L, double alpha) { return {Kind::BothEndsShift, L, alpha}; }
  static SeriesForm neumann_end_shift(double L) { return {Kind::NeumannEndShift, L}; }
  static SeriesForm robin_end_shift(double L, double alpha) { return {Kind::RobinEndShift, L, alpha}; }

  /// ln f(r) with the sign of f carried as a phase.
  SignedLog term(double r) const;
  std::string label() const;
};

struct SeriesResult {
  double value = 0.0;
  int phase_multiple = 0;
  double tail_bound = 0.0;  // certified bound on the omitted terms
  double cutoff = 0.0;      // eigenvalue cutoff actually used
  long long terms = 0;      // number of distinct eigenvalues summed
};

/// Sums the form over the positive spectrum.  The cutoff grows until the tail bound from the
/// counting function is below opts.series_tol (scaled by opts.cutoff_scale).
SeriesResult bose_series(const CrossSection& cs, const SeriesForm& form, const NumericOptions& opts = {});

}  // namespace zg
