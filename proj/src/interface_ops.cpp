#include "zetaglue/interface_ops.hpp"

#include <algorithm>
#include <cmath>

#include "zetaglue/error.hpp"
#include "zetaglue/series.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

using cplx = std::complex<double>;
using GKind = InterfaceGeometry::Kind;

// e^w - 1 without cancellation for small |w|.
cplx expm1(cplx w) {
  const double x = w.real(), y = w.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

void check_segment_args(cplx lambda, double alpha, double L) {
  require(L > 0.0 && std::isfinite(L), ErrorKind::Domain, "segment length must be positive");
  require(std::isfinite(alpha), ErrorKind::Domain, "alpha must be finite");
  require(lambda != cplx(0.0), ErrorKind::Domain, "lambda = 0: use the qd0 limit instead");
  require(lambda.real() >= 0.0, ErrorKind::Domain, "qd matrix requires Re lambda >= 0");
}

double length_of(const InterfaceGeometry& g) {
  require(g.length > 0.0 && std::isfinite(g.length), ErrorKind::Domain, "interface length must be positive");
  return g.length;
}

long long q0_of(const CrossSection& cs) { return kernel_dim(cs); }

// a_{d/2 - k} alpha^{2k} / k! summed against weights(k), k = 1..d/2; zero when d is odd.
template <class W>
double heat_alpha_sum(const CrossSection& cs, double alpha, W&& weight) {
  const int d = cs.cross_dim();
  if (d % 2 != 0) return 0.0;
  const HeatExpansion h = heat_coefficients(cs, d / 2);
  CompensatedSum acc;
  double fact = 1.0;
  for (int k = 1; k <= d / 2; ++k) {
    fact *= k;
    acc.add(h.coeff(d / 2 - k) * std::pow(alpha, 2 * k) / fact * weight(k));
  }
  return acc.value();
}

}  // namespace

QdMatrix qd_matrix_segment(cplx lambda, double alpha, double L) {
  check_segment_args(lambda, alpha, L);
  const cplx r = std::sqrt(lambda);
  const cplx z = r * L;
  const cplx one_minus = -expm1(-2.0 * z);  // 1 - e^{-2z}
  const cplx diag = r * (1.0 + std::exp(-2.0 * z)) / one_minus + alpha;
  const cplx off = -2.0 * r * std::exp(-z) / one_minus;
  QdMatrix q;
  q.m = {diag, off, off, diag};
  q.det = diag * diag - off * off;
  return q;
}

cplx qd_det_closed(cplx lambda, double alpha, double L) {
  check_segment_args(lambda, alpha, L);
  const cplx r = std::sqrt(lambda);
  return lambda + alpha * alpha + 2.0 * alpha * r + 4.0 * alpha * r / expm1(2.0 * r * L);
}

double qd0_det_segment(double alpha, double L) {
  require(L > 0.0, ErrorKind::Domain, "segment length must be positive");
  return 2.0 * alpha / L + alpha * alpha;
}

double qd_det_segment_remainder(double lambda, double alpha, double L) {
  require(lambda > 0.0, ErrorKind::Domain, "lambda must be positive");
  const double r = std::sqrt(lambda);
  return std::log(std::abs(qd_matrix_segment(lambda, alpha, L).det)) -
         std::log(std::abs(lambda + alpha * alpha + 2.0 * alpha * r));
}

InterfaceGeometry InterfaceGeometry::parse(const std::string& name, double length) {
  if (name == "both_ends") return both_ends(length);
  if (name == "left_neumann_cut") return left_neumann_cut(length);
  if (name == "neumann_robin_end") return neumann_robin_end(length);
  if (name == "cut_left") return cut_left(length);
  if (name == "cut_right") return cut_right(length);
  fail(ErrorKind::Validation, "unknown interface geometry '" + name + "'");
}

std::string InterfaceGeometry::name() const {
  switch (kind) {
    case GKind::BothEnds:
      return "both_ends";
    case GKind::LeftNeumannCut:
      return "left_neumann_cut";
    case GKind::NeumannRobinEnd:
      return "neumann_robin_end";
    case GKind::CutLeft:
      return "cut_left";
    case GKind::CutRight:
      return "cut_right";
  }
  return "";
}

std::vector<double> interface_values(const InterfaceGeometry& g, double alpha, double mu) {
  const double L = length_of(g);
  const double r = std::sqrt(mu);
  switch (g.kind) {
    case GKind::BothEnds:
      if (mu == 0.0) return {alpha, 2.0 / L + alpha};
      return {r * std::tanh(0.5 * L * r) + alpha, r / std::tanh(0.5 * L * r) + alpha};
    case GKind::LeftNeumannCut:
      if (mu == 0.0) return {1.0 / L};
      return {r / std::tanh(L * r)};
    case GKind::NeumannRobinEnd:
    case GKind::CutLeft:
      return {r * std::tanh(L * r) + alpha};
    case GKind::CutRight:
      return {r * std::tanh(L * r) - alpha};
  }
  return {};
}

namespace {

std::string provenance(const InterfaceGeometry& g) {
  switch (g.kind) {
    case GKind::BothEnds:
      return "Q_D(0) + alpha on both ends: {alpha, 2/L + alpha} (q0 each), sqrt(mu) tanh(L sqrt(mu)/2) + alpha, "
             "sqrt(mu) coth(L sqrt(mu)/2) + alpha";
    case GKind::LeftNeumannCut:
      return "Q_D(0) at u = 0 with Dirichlet at u = L: {1/L} (q0), sqrt(mu) coth(L sqrt(mu))";
    case GKind::NeumannRobinEnd:
      return "Q_D(0) + alpha at u = L with Neumann at u = 0: sqrt(mu) tanh(L sqrt(mu)) + alpha";
    case GKind::CutLeft:
      return "Q_1(0) + alpha at the cut: sqrt(mu) tanh(a sqrt(mu)) + alpha";
    case GKind::CutRight:
      return "Q_2(0) - alpha at the cut: sqrt(mu) tanh((L-a) sqrt(mu)) - alpha";
  }
  return "";
}

void check_alpha_use(const InterfaceGeometry& g, double alpha) {
  require(std::isfinite(alpha), ErrorKind::Domain, "alpha must be finite");
  if (g.kind == GKind::LeftNeumannCut)
    require(alpha == 0.0, ErrorKind::Validation, "left_neumann_cut carries no Robin parameter; alpha must be 0");
}

}  // namespace

InterfaceSpectrum spec_interface(const CrossSection& cs, const InterfaceGeometry& g, double alpha, double cutoff) {
  check_alpha_use(g, alpha);
  length_of(g);
  require(cutoff > 0.0, ErrorKind::Domain, "cutoff must be positive");
  InterfaceSpectrum out;
  out.provenance = provenance(g);
  out.cutoff = cutoff;
  for (const auto& e : enumerate_spectrum(cs, cutoff)) {
    for (double v : interface_values(g, alpha, e.eigenvalue)) {
      if (v == 0.0)
        out.zero_modes += e.multiplicity;
      else
        out.entries.push_back({v, e.multiplicity});
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const InterfaceEntry& x, const InterfaceEntry& y) { return x.eigenvalue < y.eigenvalue; });
  return out;
}

void check_interface_invertible(const CrossSection& cs, const InterfaceGeometry& g, double alpha) {
  check_alpha_use(g, alpha);
  const double L = length_of(g);
  // Every value is alpha (or -alpha) plus a term >= r tanh(l r) that grows with r = sqrt(mu), so only
  // finitely many modes can reach zero.
  const double ell = g.kind == GKind::BothEnds ? 0.5 * L : L;
  const double need = 2.0 * std::abs(alpha) + 1.0;
  double r = 1.0;
  while (r * std::tanh(ell * r) <= need) r *= 2.0;
  const double tol = kCollisionTol * std::max(1.0, std::abs(alpha));
  for (const auto& e : enumerate_spectrum(cs, r * r)) {
    for (double v : interface_values(g, alpha, e.eigenvalue)) {
      if (v == 0.0 && alpha == 0.0 && e.eigenvalue == 0.0) continue;
      if (std::abs(v) <= tol) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "singular Robin parameter: alpha = %.17g makes the %s operator vanish on mu = %.17g "
                      "(eigenvalue %.3g)",
                      alpha, g.name().c_str(), e.eigenvalue, v);
        fail(ErrorKind::SingularParameter, buf);
      }
    }
  }
}

DetReport log_det_interface(const CrossSection& cs, const InterfaceGeometry& g, double alpha,
                            const NumericOptions& opts, ZetaBackend backend) {
  check_interface_invertible(cs, g, alpha);
  const double L = length_of(g);
  const long long q0 = q0_of(cs);
  DetReport rep;
  auto add_series = [&](const SeriesForm& f) {
    const SeriesResult s = bose_series(cs, f, opts);
    rep.add("series", s.value, f.label(), s.phase_multiple);
    rep.truncation += s.tail_bound;
  };

  switch (g.kind) {
    case GKind::BothEnds:
      if (alpha != 0.0) {
        rep.add("2 ln Det(sqrt(Delta_Y) + alpha)", log_det_shifted(cs, alpha, opts, backend),
                "2 ln Det(sqrt(Delta_Y) + alpha)", 2.0);
        if (q0 > 0) rep.add("q0 ln(1 + 2/(L alpha))", signed_log(1.0 + 2.0 / (L * alpha)), "q0 ln(1 + 2/(L alpha))",
                            double(q0));
        add_series(SeriesForm::both_ends_shift(L, alpha));
      } else {
        rep.kernel_dim = q0;
        rep.add("q0 ln(2/L)", double(q0) * std::log(2.0 / L), "q0 ln(2/L)");
        rep.add("ln Det* Delta_Y", log_det_star(cs, opts, backend), "ln Det* Delta_Y");
      }
      rep.formula = "ln Det(Q_D(0) + alpha) on both ends of [0, L] x Y";
      break;
    case GKind::LeftNeumannCut:
      rep.add("-q0 ln L", -double(q0) * std::log(L), "-q0 ln L");
      rep.add("1/2 ln Det* Delta_Y", log_det_star(cs, opts, backend), "1/2 ln Det* Delta_Y", 0.5);
      add_series(SeriesForm::neumann_end_shift(L));
      rep.formula = "ln Det Q_D(0) at u = 0, Dirichlet at u = L";
      break;
    case GKind::NeumannRobinEnd:
    case GKind::CutLeft:
    case GKind::CutRight: {
      const double a = g.kind == GKind::CutRight ? -alpha : alpha;
      if (a != 0.0) {
        rep.add("ln Det(sqrt(Delta_Y) + alpha)", log_det_shifted(cs, a, opts, backend),
                g.kind == GKind::CutRight ? "ln Det(sqrt(Delta_Y) - alpha)" : "ln Det(sqrt(Delta_Y) + alpha)");
      } else {
        rep.kernel_dim = q0;
        rep.add("1/2 ln Det* Delta_Y", log_det_star(cs, opts, backend), "1/2 ln Det* Delta_Y", 0.5);
      }
      add_series(SeriesForm::robin_end_shift(L, a));
      rep.formula = provenance(g);
      break;
    }
  }
  rep.finish();
  return rep;
}

InterfaceSpectrum spec_RS0(const CrossSection& cs, double L, double a, double alpha, double cutoff) {
  require(L > 0.0 && a > 0.0 && a < L, ErrorKind::Domain, "cut must satisfy 0 < a < L");
  require(cutoff > 0.0, ErrorKind::Domain, "cutoff must be positive");
  if (alpha != 0.0) {
    check_shift_admissible(cs, alpha, false);
    check_shift_admissible(cs, -alpha, false);
  }
  InterfaceSpectrum out;
  out.provenance =
      "R_S(0): 2 sqrt(mu)/(mu - alpha^2) (1 - e^{-2L sqrt(mu)}) / (Robin factors at the cut); mu = 0 gives zero modes";
  out.cutoff = cutoff;
  for (const auto& e : enumerate_spectrum(cs, cutoff)) {
    if (e.eigenvalue == 0.0) {
      out.zero_modes += e.multiplicity;
      continue;
    }
    const double r = std::sqrt(e.eigenvalue);
    const double num = -std::expm1(-2.0 * L * r);
    const double d1 = 1.0 - (r - alpha) / (r + alpha) * std::exp(-2.0 * a * r);
    const double d2 = 1.0 - (r + alpha) / (r - alpha) * std::exp(-2.0 * (L - a) * r);
    out.entries.push_back({2.0 * r / (e.eigenvalue - alpha * alpha) * num / (d1 * d2), e.multiplicity});
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const InterfaceEntry& x, const InterfaceEntry& y) { return x.eigenvalue < y.eigenvalue; });
  return out;
}

double rs0_value_from_pieces(double mu, double L, double a, double alpha) {
  require(mu > 0.0, ErrorKind::Domain, "mu must be positive");
  const double e1 = interface_values(InterfaceGeometry::cut_left(a), alpha, mu)[0];
  const double e2 = interface_values(InterfaceGeometry::cut_right(L - a), alpha, mu)[0];
  return 1.0 / e1 + 1.0 / e2;
}

double zeta0_rs0_factor(const CrossSection& cs, double alpha, const NumericOptions&) {
  const int d = cs.cross_dim();
  const double q0 = double(kernel_dim(cs));
  if (d % 2 != 0) return -q0;
  const HeatExpansion h = heat_coefficients(cs, d / 2);
  return (h.coeff(d / 2) - q0) + 2.0 * heat_alpha_sum(cs, alpha, [](int) { return 1.0; });
}

DetReport log_det_star_RS0(const CrossSection& cs, double L, double a, double alpha, const NumericOptions& opts,
                           ZetaBackend backend) {
  require(L > 0.0 && a > 0.0 && a < L, ErrorKind::Domain, "cut must satisfy 0 < a < L");
  const long long q0 = kernel_dim(cs);
  DetReport rep;
  rep.kernel_dim = q0;
  auto add_series = [&](const SeriesForm& f) {
    const SeriesResult s = bose_series(cs, f, opts);
    rep.add("cut series", s.value, f.label(), s.phase_multiple);
    rep.truncation += s.tail_bound;
  };

  if (alpha == 0.0) {
    rep.add("ln 2 zeta_{Delta_Y}(0)", kLn2 * zeta_point(cs, 0.0, false, opts, backend).value,
            "ln 2 zeta_{Delta_Y}(0)");
    rep.add("-1/2 ln Det* Delta_Y", log_det_star(cs, opts, backend), "-1/2 ln Det* Delta_Y", -0.5);
    add_series(SeriesForm::neumann_pair(L, a));
    rep.formula = "ln Det* R_Neu(0)";
    rep.finish();
    return rep;
  }

  check_shift_admissible(cs, alpha, false);
  check_shift_admissible(cs, -alpha, false);
  check_interface_invertible(cs, InterfaceGeometry::cut_left(a), alpha);
  check_interface_invertible(cs, InterfaceGeometry::cut_right(L - a), alpha);

  rep.add("ln 2 zeta(0)", kLn2 * zeta0_rs0_factor(cs, alpha, opts),
          "ln 2 zeta_{sqrt(Delta_Y) - alpha^2 / sqrt(Delta_Y)}(0)");
  rep.add("-ln Det(sqrt(Delta_Y) + alpha)", log_det_shifted(cs, alpha, opts, backend),
          "-ln Det(sqrt(Delta_Y) + alpha)", -1.0);
  rep.add("-ln Det(sqrt(Delta_Y) - alpha)", log_det_shifted(cs, -alpha, opts, backend),
          "-ln Det(sqrt(Delta_Y) - alpha)", -1.0);
  if (q0 > 0) rep.add("q0 ln(-alpha^2)", double(q0) * std::log(alpha * alpha), "q0 ln(-alpha^2)", int(q0));
  rep.add("1/2 ln Det* Delta_Y", log_det_star(cs, opts, backend), "1/2 ln Det* Delta_Y", 0.5);
  const double harm =
      heat_alpha_sum(cs, alpha, [](int k) { return harmonic(2 * k - 1) - harmonic(k - 1); });
  if (cs.cross_dim() % 2 == 0)
    rep.add("harmonic correction", -2.0 * harm,
            "-2 sum_k a_{(m-1)/2-k} alpha^{2k} / k! (H_{2k-1} - H_{k-1})");
  add_series(SeriesForm::robin_pair(L, a, alpha));
  rep.formula = "ln Det* R_S(0)";
  rep.finish();
  return rep;
}

}  // namespace zg
