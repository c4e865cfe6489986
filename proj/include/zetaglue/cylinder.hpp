#pragma once

#include <string>

#include "zetaglue/numeric.hpp"
#include "zetaglue/series.hpp"
#include "zetaglue/spectra.hpp"
#include "zetaglue/terms.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

/// Boundary condition on one end, with the outward-normal Robin convention d_nu u + alpha u = 0.
class BoundaryCondition {
 public:
  enum class Kind { Dirichlet, Neumann, Robin };

  static BoundaryCondition dirichlet() { return BoundaryCondition(Kind::Dirichlet, 0.0); }
  static BoundaryCondition neumann() { return BoundaryCondition(Kind::Neumann, 0.0); }
  /// robin(0) is neumann().
  static BoundaryCondition robin(double alpha);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  bool is_robin() const { return kind_ == Kind::Robin; }
  /// "D", "N" or "R(alpha)".
  std::string describe() const;

  friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;

 private:
  BoundaryCondition(Kind k, double a) : kind_(k), alpha_(a) {}
  Kind kind_;
  double alpha_;
};

struct CylinderSpec {
  CrossSection cross_section;
  double length;
  BoundaryCondition left;   // at u = 0
  BoundaryCondition right;  // at u = L
};

/// Parses a pair code: dd, nn, nd, dn, rr, nr, rn, dr, rd (r takes alpha).
std::pair<BoundaryCondition, BoundaryCondition> parse_bc_pair(const std::string& code, double alpha);

/// ln Det of -d^2/du^2 on [0, L] (ln Det* for N/N), any pair of conditions.
DetReport log_det_segment(double L, const BoundaryCondition& left, const BoundaryCondition& right);

/// ln Det of -d_u^2 + Delta_Y on [0, L] x Y.  Supported pairs: D/D, N/N, N/D, D/N, R/R (equal alpha), N/R, R/N.
/// The point cross-section goes to log_det_segment and accepts every pair.
DetReport log_det_cylinder(const CylinderSpec& spec, const NumericOptions& opts = {},
                           ZetaBackend backend = ZetaBackend::Auto);

}  // namespace zg
