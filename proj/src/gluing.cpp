#include "zetaglue/gluing.hpp"

#include <algorithm>
#include <cmath>

#include "zetaglue/asymptotics.hpp"
#include "zetaglue/cylinder.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

void validate(const GluingConfig& cfg) {
  require(cfg.length > 0.0 && std::isfinite(cfg.length), ErrorKind::Domain, "L must be positive");
  require(cfg.cut > 0.0 && cfg.cut < cfg.length, ErrorKind::Domain, "cut must satisfy 0 < a < L");
  require(std::isfinite(cfg.alpha), ErrorKind::Domain, "alpha must be finite");
}

void add_side(std::vector<Term>& side, std::string label, const DetReport& r, double sign, double& trunc) {
  side.push_back({std::move(label), sign * r.log_det, static_cast<int>(sign) * r.phase_multiple, r.formula});
  trunc += r.truncation;
}

void close(GluingReport& g) {
  g.lhs = g.rhs = 0.0;
  g.lhs_phase = g.rhs_phase = 0;
  for (const auto& t : g.lhs_terms) g.lhs += t.value, g.lhs_phase += t.phase;
  for (const auto& t : g.rhs_terms) g.rhs += t.value, g.rhs_phase += t.phase;
  g.residual = std::abs(g.lhs - g.rhs);
  g.phase_match = (g.lhs_phase - g.rhs_phase) % 2 == 0;
  g.tolerance = std::max(1e-8, 10.0 * g.truncation);
}

}  // namespace

CorrectionMatrices correction_matrices(const GluingConfig& cfg, GluingKind kind) {
  validate(cfg);
  CorrectionMatrices m;
  m.q0 = kernel_dim(cfg.cross_section);
  const double q0 = double(m.q0);
  m.log_det_C = -q0 * std::log(cfg.length);
  if (kind == GluingKind::Robin) {
    require(cfg.alpha != 0.0, ErrorKind::Validation, "Robin correction matrices need alpha != 0");
    m.log_det_AAt = -q0 * std::log(cfg.alpha * cfg.alpha);
  } else {
    m.log_det_S1 = -q0 * std::log(cfg.cut);
    m.log_det_S2 = -q0 * std::log(cfg.length - cfg.cut);
  }
  return m;
}

GluingReport glue_robin_check(const GluingConfig& cfg, const NumericOptions& opts, ZetaBackend backend) {
  validate(cfg);
  require(cfg.alpha != 0.0, ErrorKind::Validation, "Robin gluing needs alpha != 0; use the Neumann check");
  const CrossSection& cs = cfg.cross_section;
  const double L = cfg.length, a = cfg.cut, al = cfg.alpha;
  check_shift_admissible(cs, al, true);
  check_shift_admissible(cs, -al, true);

  GluingReport g;
  g.kind = GluingKind::Robin;
  const auto N = BoundaryCondition::neumann();
  add_side(g.lhs_terms, "ln Det* N/N on [0, L]", log_det_cylinder({cs, L, N, N}, opts, backend),
           1.0, g.truncation);
  add_side(g.lhs_terms, "-ln Det N/R(alpha) on [0, a]",
           log_det_cylinder({cs, a, N, BoundaryCondition::robin(al)}, opts, backend), -1.0, g.truncation);
  add_side(g.lhs_terms, "-ln Det R(-alpha)/N on [a, L]",
           log_det_cylinder({cs, L - a, BoundaryCondition::robin(-al), N}, opts, backend), -1.0, g.truncation);

  const CorrectionMatrices m = correction_matrices(cfg, GluingKind::Robin);
  const int dim = cs.cross_dim() + 1;
  g.rhs_terms.push_back({"a0", a0_constant({{heat_coefficients(cs, cs.cross_dim()), al}}, dim), 0,
                         "a_0 = -ln 2 w0 + w1 (0 for odd dim Y)"});
  g.rhs_terms.push_back({"ln(-1)^{q0}", 0.0, int(m.q0), "ln(-1)^{q0}"});
  g.rhs_terms.push_back({"-ln det C", -m.log_det_C, 0, "-ln det C = q0 ln L"});
  g.rhs_terms.push_back({"ln det A conj(A)^T", m.log_det_AAt, 0, "ln det A conj(A)^T = -q0 ln alpha^2"});
  add_side(g.rhs_terms, "ln Det* R_S(0)", log_det_star_RS0(cs, L, a, al, opts, backend), 1.0,
           g.truncation);
  close(g);
  return g;
}

GluingReport glue_neumann_check(const GluingConfig& cfg, const NumericOptions& opts, ZetaBackend backend) {
  validate(cfg);
  require(cfg.alpha == 0.0, ErrorKind::Validation, "Neumann gluing takes alpha = 0");
  const CrossSection& cs = cfg.cross_section;
  const double L = cfg.length, a = cfg.cut;

  GluingReport g;
  g.kind = GluingKind::Neumann;
  const auto N = BoundaryCondition::neumann();
  add_side(g.lhs_terms, "ln Det* N/N on [0, L]", log_det_cylinder({cs, L, N, N}, opts, backend),
           1.0, g.truncation);
  add_side(g.lhs_terms, "-ln Det* N/N on [0, a]", log_det_cylinder({cs, a, N, N}, opts, backend),
           -1.0, g.truncation);
  add_side(g.lhs_terms, "-ln Det* N/N on [a, L]",
           log_det_cylinder({cs, L - a, N, N}, opts, backend), -1.0, g.truncation);

  const CorrectionMatrices m = correction_matrices(cfg, GluingKind::Neumann);
  const double zeta0 = zeta_point(cs, 0.0, false, opts, backend).value;
  g.rhs_terms.push_back({"a0", -kLn2 * (zeta0 + double(m.q0)), 0, "a_0 = -ln 2 (zeta_{Delta_Y}(0) + q0)"});
  g.rhs_terms.push_back({"-ln det C", -m.log_det_C, 0, "-ln det C = q0 ln L"});
  g.rhs_terms.push_back({"ln det S1", m.log_det_S1, 0, "ln det S1 = -q0 ln a"});
  g.rhs_terms.push_back({"ln det S2", m.log_det_S2, 0, "ln det S2 = -q0 ln(L - a)"});
  add_side(g.rhs_terms, "ln Det* R_Neu(0)", log_det_star_RS0(cs, L, a, 0.0, opts, backend), 1.0,
           g.truncation);
  close(g);
  return g;
}

}  // namespace zg
