#pragma once

#include <string>
#include <vector>

#include "zetaglue/numeric.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

/// One named contribution to a log-determinant.  phase counts multiples of pi.
struct Term {
  std::string label;
  double value = 0.0;
  int phase = 0;
  std::string formula;
};

/// A log-determinant together with the terms that produced it.
struct DetReport {
  double log_det = 0.0;
  int phase_multiple = 0;
  long long kernel_dim = 0;
  std::vector<Term> terms;
  double truncation = 0.0;  // sum of the tail bounds and error estimates of the pieces
  std::string formula;      // the assembled formula in words

  DetReport& add(std::string label, double value, std::string formula, int phase = 0);
  DetReport& add(std::string label, const SignedLog& l, std::string formula, double scale = 1.0);
  DetReport& add(std::string label, const RegularizedDet& d, std::string formula, double scale = 1.0);

  /// log_det and phase_multiple as the plain left-to-right sum of the terms, so that re-summing a
  /// serialized report reproduces the headline bit for bit.
  void finish();

  /// Value of the term with this label (0 when absent).
  double term(const std::string& label) const;
};

}  // namespace zg
