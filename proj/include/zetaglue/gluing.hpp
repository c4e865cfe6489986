#pragma once

#include <string>
#include <vector>

#include "zetaglue/numeric.hpp"
#include "zetaglue/spectra.hpp"
#include "zetaglue/terms.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

/// [0, L] x Y with Neumann ends, cut at u = a.  alpha = 0 selects the Neumann gluing.
struct GluingConfig {
  CrossSection cross_section;
  double length;
  double cut;
  double alpha = 0.0;
};

struct CorrectionMatrices {
  double log_det_C = 0.0;
  double log_det_AAt = 0.0;  // Robin gluing only
  double log_det_S1 = 0.0;   // Neumann gluing only
  double log_det_S2 = 0.0;   // Neumann gluing only
  long long q0 = 0;
};

enum class GluingKind { Robin, Neumann };

/// Product-case values of the kernel correction matrices, each a scalar multiple of the q0 x q0 identity.
CorrectionMatrices correction_matrices(const GluingConfig& cfg, GluingKind kind);

struct GluingReport {
  GluingKind kind;
  std::vector<Term> lhs_terms, rhs_terms;
  double lhs = 0.0, rhs = 0.0;
  int lhs_phase = 0, rhs_phase = 0;
  double residual = 0.0;
  bool phase_match = false;
  double truncation = 0.0;
  double tolerance = 0.0;  // max(1e-8, 10 truncation)
  bool passed() const { return residual < tolerance && phase_match; }
};

/// ln Det* on [0, L] minus the Neumann/Robin(alpha) and Robin(-alpha)/Neumann pieces, against the interface side
/// a_0 + ln(-1)^{q0} - ln det C + ln det A conj(A)^T + ln Det* R_S(0).
GluingReport glue_robin_check(const GluingConfig& cfg, const NumericOptions& opts = {},
                              ZetaBackend backend = ZetaBackend::Auto);

/// ln Det* on [0, L] minus the two Neumann pieces, against a_0 - ln det C + ln det S1 + ln det S2 + ln Det* R_Neu(0).
GluingReport glue_neumann_check(const GluingConfig& cfg, const NumericOptions& opts = {},
                                ZetaBackend backend = ZetaBackend::Auto);

}  // namespace zg
