#include "zetaglue/cylinder.hpp"

#include <cmath>
#include <cstdio>

#include "zetaglue/asymptotics.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/special.hpp"

namespace zg {

using BKind = BoundaryCondition::Kind;

BoundaryCondition BoundaryCondition::robin(double alpha) {
  require(std::isfinite(alpha), ErrorKind::Domain, "Robin parameter must be finite");
  if (alpha == 0.0) return neumann();
  return BoundaryCondition(Kind::Robin, alpha);
}

std::string BoundaryCondition::describe() const {
  switch (kind_) {
    case Kind::Dirichlet:
      return "D";
    case Kind::Neumann:
      return "N";
    case Kind::Robin: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "R(%.17g)", alpha_);
      return buf;
    }
  }
  return "";
}

std::pair<BoundaryCondition, BoundaryCondition> parse_bc_pair(const std::string& code, double alpha) {
  require(code.size() == 2, ErrorKind::Validation, "boundary pair must be two letters from d, n, r");
  auto one = [&](char c) {
    switch (c) {
      case 'd':
      case 'D':
        return BoundaryCondition::dirichlet();
      case 'n':
      case 'N':
        return BoundaryCondition::neumann();
      case 'r':
      case 'R':
        return BoundaryCondition::robin(alpha);
    }
    fail(ErrorKind::Validation, std::string("unknown boundary condition '") + c + "'");
  };
  return {one(code[0]), one(code[1])};
}

DetReport log_det_segment(double L, const BoundaryCondition& left, const BoundaryCondition& right) {
  require(L > 0.0 && std::isfinite(L), ErrorKind::Domain, "length must be positive");
  DetReport rep;
  if (left.kind() == BKind::Neumann && right.kind() == BKind::Neumann) {
    rep.kernel_dim = 1;
    rep.add("ln 2L", std::log(2.0 * L), "ln 2L");
    rep.formula = "ln Det* on [0, L], N/N: ln 2L";
    rep.finish();
    return rep;
  }
  // Solution of -y'' = 0 meeting the left condition: y(0) = p, y'(0) = q.  Det = 2 B(y) with B the right
  // boundary form.
  double p = 0.0, q = 1.0;
  if (left.kind() == BKind::Neumann) p = 1.0, q = 0.0;
  if (left.kind() == BKind::Robin) p = 1.0, q = left.alpha();
  const double yL = p + q * L, dyL = q;
  double w = yL;
  if (right.kind() == BKind::Neumann) w = dyL;
  if (right.kind() == BKind::Robin) w = dyL + right.alpha() * yL;
  if (std::abs(w) <= kCollisionTol * (1.0 + std::abs(p) + std::abs(q) * (1.0 + L)))
    fail(ErrorKind::SingularParameter,
         "singular Robin parameter: " + left.describe() + "/" + right.describe() + " has a zero eigenvalue on [0, L]");
  rep.add("ln 2 B(y)", signed_log(2.0 * w), "ln 2 B(y), y the affine solution fitting the left end");
  rep.formula = "ln Det on [0, L], " + left.describe() + "/" + right.describe();
  rep.finish();
  return rep;
}

namespace {

enum class Pair { DD, NN, ND, RR, NR };

Pair classify(const BoundaryCondition& l, const BoundaryCondition& r, bool& mirrored) {
  mirrored = false;
  const BKind a = l.kind(), b = r.kind();
  if (a == BKind::Dirichlet && b == BKind::Dirichlet) return Pair::DD;
  if (a == BKind::Neumann && b == BKind::Neumann) return Pair::NN;
  if (a == BKind::Neumann && b == BKind::Dirichlet) return Pair::ND;
  if (a == BKind::Dirichlet && b == BKind::Neumann) return mirrored = true, Pair::ND;
  if (a == BKind::Robin && b == BKind::Robin && l.alpha() == r.alpha()) return Pair::RR;
  if (a == BKind::Neumann && b == BKind::Robin) return Pair::NR;
  if (a == BKind::Robin && b == BKind::Neumann) return mirrored = true, Pair::NR;
  fail(ErrorKind::Validation, "boundary pair " + l.describe() + "/" + r.describe() +
                                  " is not supported on cylinders (supported: D/D, N/N, N/D, D/N, R/R with equal "
                                  "alpha, N/R, R/N)");
}

}  // namespace

DetReport log_det_cylinder(const CylinderSpec& spec, const NumericOptions& opts, ZetaBackend backend) {
  const CrossSection& cs = spec.cross_section;
  const double L = spec.length;
  require(L > 0.0 && std::isfinite(L), ErrorKind::Domain, "cylinder length must be positive");
  if (cs.is_point()) return log_det_segment(L, spec.left, spec.right);

  bool mirrored = false;
  const Pair pair = classify(spec.left, spec.right, mirrored);
  const double alpha = spec.left.is_robin() ? spec.left.alpha() : spec.right.alpha();
  if (pair == Pair::RR || pair == Pair::NR) {
    check_shift_admissible(cs, alpha, true);
    check_interface_invertible(
        cs, pair == Pair::RR ? InterfaceGeometry::both_ends(L) : InterfaceGeometry::neumann_robin_end(L), alpha);
  }

  const long long q0 = kernel_dim(cs);
  const double dq0 = double(q0);
  const ZetaPoint z = zeta_point(cs, -0.5, false, opts, backend);
  DetReport rep;
  auto res_fp = [&] {
    rep.add("Res term", -2.0 * L * (kLn2 - 1.0) * z.residue, "-2L (ln 2 - 1) Res_{s=-1/2} zeta_{Delta_Y}(s)");
    rep.add("Fp term", L * z.value, "L Fp_{s=-1/2} zeta_{Delta_Y}(s)");
  };
  auto series = [&](const SeriesForm& f) {
    const SeriesResult s = bose_series(cs, f, opts);
    rep.add("series", s.value, f.label(), s.phase_multiple);
    rep.truncation += s.tail_bound;
  };
  auto s_alpha_of = [&] { return s_alpha(heat_coefficients(cs, cs.cross_dim()), alpha); };

  switch (pair) {
    case Pair::DD:
    case Pair::NN: {
      const bool nn = pair == Pair::NN;
      rep.add("q0 ln 2L", dq0 * std::log(2.0 * L), "q0 ln 2L");
      res_fp();
      rep.add("half ln Det* Delta_Y", log_det_star(cs, opts, backend),
              nn ? "+1/2 ln Det* Delta_Y" : "-1/2 ln Det* Delta_Y", nn ? 0.5 : -0.5);
      series(SeriesForm::log1m_exp(L));
      if (nn) rep.kernel_dim = q0;
      rep.formula = nn ? "ln Det* on [0, L] x Y, N/N" : "ln Det on [0, L] x Y, D/D";
      break;
    }
    case Pair::ND:
      rep.add("q0 ln 2", dq0 * kLn2, "q0 ln 2");
      res_fp();
      series(SeriesForm::log1p_exp(L));
      rep.formula = "ln Det on [0, L] x Y, N/D";
      break;
    case Pair::RR:
      rep.add("-2 s_alpha", -2.0 * s_alpha_of(), "-2 s_alpha");
      if (q0 > 0) rep.add("q0 ln 2(L + 2/alpha)", signed_log(2.0 * (L + 2.0 / alpha)), "q0 ln 2(L + 2/alpha)", dq0);
      res_fp();
      rep.add("2 ln Det(sqrt(Delta_Y) + alpha)", log_det_shifted(cs, alpha, opts, backend),
              "2 ln Det(sqrt(Delta_Y) + alpha)", 2.0);
      rep.add("half ln Det* Delta_Y", log_det_star(cs, opts, backend), "-1/2 ln Det* Delta_Y", -0.5);
      series(SeriesForm::robin_both(L, alpha));
      rep.formula = "ln Det on [0, L] x Y, Robin/Robin";
      break;
    case Pair::NR:
      rep.add("-s_alpha", -s_alpha_of(), "-s_alpha");
      rep.add("q0 ln 2", dq0 * kLn2, "q0 ln 2");
      rep.add("ln Det(sqrt(Delta_Y) + alpha)", log_det_shifted(cs, alpha, opts, backend),
              "ln Det(sqrt(Delta_Y) + alpha)");
      res_fp();
      series(SeriesForm::robin_end(L, alpha));
      rep.formula = "ln Det on [0, L] x Y, Neumann/Robin";
      break;
  }
  if (mirrored) rep.formula += " (mirrored u -> L - u)";
  rep.finish();
  return rep;
}

}  // namespace zg
