// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zetaglue/asymptotics.hpp"
#include "zetaglue/cylinder.hpp"
#include "zetaglue/gluing.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/oracle.hpp"
#include "zetaglue/special.hpp"
#include "zetaglue/zreg.hpp"

using namespace zg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome segment_dd() {
  Outcome o;
  double worst = 0.0, slowest = 0.0;
  for (double L : {0.5, 1.0, 2.0, kPi}) {
    const auto t0 = Clock::now();
    const auto r = log_det_cylinder({CrossSection::point(), L, BoundaryCondition::dirichlet(),
                                     BoundaryCondition::dirichlet()});
    const double dt = seconds_since(t0);
    const double err = std::abs(r.log_det - std::log(2 * L));
    worst = std::max(worst, err);
    slowest = std::max(slowest, dt);
    o.check(err < 1e-12, fmt("L = %g: error %.3g", L, err));
    o.check(dt < 0.01, fmt("L = %g: %.3g s", L, dt));
  }
  if (o.ok) o.detail = fmt("max error %.3g, slowest %.3g ms", worst, slowest * 1e3);
  return o;
}

Outcome segment_rr() {
  Outcome o;
  double worst = 0.0, worst_oracle = 0.0, slowest = 0.0;
  for (auto [L, a] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
    const auto R = BoundaryCondition::robin(a);
    const auto D = BoundaryCondition::dirichlet();
    const double closed = std::log(2 * a * (L * a + 2));
    const double err = std::abs(log_det_cylinder({CrossSection::point(), L, R, R}).log_det - closed);
    worst = std::max(worst, err);
    o.check(err < 1e-12, fmt("L = %g, alpha = %g: error %.3g", L, a, err));

    const auto t0 = Clock::now();
    const auto rel = relative_log_det({L, R, R}, {L, D, D}, 10000);
    const double dt = seconds_since(t0);
    const double oerr = std::abs(rel.value + std::log(2 * L) - closed);
    worst_oracle = std::max(worst_oracle, oerr);
    slowest = std::max(slowest, dt);
    o.check(oerr < 1e-6, fmt("oracle L = %g, alpha = %g: error %.3g", L, a, oerr));
    o.check(dt < 2.0, fmt("oracle L = %g: %.3g s", L, dt));
  }
  if (o.ok)
    o.detail = fmt("closed-form error %.3g, oracle error %.3g, oracle %.3g s", worst, worst_oracle, slowest);
  return o;
}

Outcome qd_matrix() {
  Outcome o;
  double worst = 0.0, worst_lim = 0.0;
  for (double lam : {0.1, 1.0, 10.0, 100.0})
    for (double a : {0.5, 1.0, 2.0})
      for (double L : {0.5, 1.0, 2.0}) {
        const auto c = qd_det_closed(lam, a, L);
        const double rel = std::abs(qd_matrix_segment(lam, a, L).det - c) / std::abs(c);
        worst = std::max(worst, rel);
        o.check(rel < 1e-12, fmt("lambda = %g, alpha = %g, L = %g", lam, a, L));
      }
  for (double a : {0.5, 1.0, 2.0})
    for (double L : {0.5, 1.0, 2.0}) {
      const double lim = qd_matrix_segment(1e-14, a, L).det.real();
      const double err = std::abs(lim - (2 * a / L + a * a));
      worst_lim = std::max(worst_lim, err);
      o.check(err < 1e-10, fmt("limit alpha = %g, L = %g: %.3g", a, L, err));
    }
  if (o.ok) o.detail = fmt("max relative error %.3g, limit error %.3g", worst, worst_lim);
  return o;
}

std::vector<std::pair<double, double>> gluing_sweep() {
  std::vector<std::pair<double, double>> out{{2.0, 0.7}};
  for (double L : {1.0, 2.0, 4.0})
    for (double f : {0.2, 0.5, 0.8}) out.emplace_back(L, f * L);
  return out;
}

Outcome gluing(double alpha_filter) {
  Outcome o;
  const auto cs = CrossSection::circle(2 * kPi);
  double worst = 0.0, slowest = 0.0;
  const std::vector<double> alphas = alpha_filter == 0.0 ? std::vector<double>{0.0} : std::vector<double>{0.1, 0.3, 0.9};
  for (double alpha : alphas)
    for (auto [L, a] : gluing_sweep()) {
      const auto t0 = Clock::now();
      const GluingConfig cfg{cs, L, a, alpha};
      const auto g = alpha == 0.0 ? glue_neumann_check(cfg) : glue_robin_check(cfg);
      const double dt = seconds_since(t0);
      worst = std::max(worst, g.residual);
      slowest = std::max(slowest, dt);
      o.check(g.residual < 1e-8, fmt("L = %g, a = %g: residual %.3g", L, a, g.residual));
      o.check(g.phase_match, fmt("L = %g, a = %g, alpha = %g: phase mismatch", L, a, alpha));
      o.check(dt < 1.0, fmt("L = %g, a = %g: %.3g s", L, a, dt));
    }
  if (o.ok) o.detail = fmt("max residual %.3g, slowest %.3g s", worst, slowest);
  return o;
}

Outcome circle_closed_forms() {
  Outcome o;
  double worst = 0.0;
  for (double ell : {1.0, 3.0, 2 * kPi}) {
    const auto c = CrossSection::circle(ell);
    const double closed = 2 * std::log(ell);
    const double num = log_det_star(c, {}, ZetaBackend::Numeric).log_modulus;
    const double cf = log_det_star(c, {}, ZetaBackend::ClosedForm).log_modulus;
    o.check(std::abs(cf - closed) < 1e-12, fmt("ell = %g: closed-form Det*", ell));
    o.check(std::abs(num - closed) < 1e-8, fmt("ell = %g: numeric Det* off by %.3g", ell, num - closed));
    worst = std::max(worst, std::abs(num - closed));
    for (auto be : {ZetaBackend::ClosedForm, ZetaBackend::Numeric}) {
      const auto z = zeta_point(c, -0.5, false, {}, be);
      const double err = std::abs(z.value + kPi / (3 * ell));
      worst = std::max({worst, err, std::abs(z.residue)});
      o.check(err < 1e-8, fmt("ell = %g: Fp zeta(-1/2) off by %.3g", ell, err));
      o.check(std::abs(z.residue) < 1e-8, fmt("ell = %g: residue %.3g", ell, z.residue));
    }
  }
  if (o.ok) o.detail = fmt("max deviation %.3g", worst);
  return o;
}

Outcome asymptotic_constants() {
  Outcome o;
  double worst = 0.0;
  const auto torus = heat_coefficients(CrossSection::torus(2 * kPi, 3.0), 2);
  for (double a : {0.1, 0.5, 1.3, 2.0}) {
    const double err = std::abs(s_alpha_pair(torus, a) - s_alpha(torus, a) - s_alpha(torus, -a));
    worst = std::max(worst, err);
    o.check(err < 1e-12, fmt("torus alpha = %g: %.3g", a, err));
  }
  const auto circle = heat_coefficients(CrossSection::circle(2 * kPi), 2);
  for (double a : {0.1, 0.3, 0.9})
    o.check(a0_constant({{circle, a}, {circle, -a}}, 2) == 0.0, fmt("circle a0 at alpha = %g", a));
  double worst_b0 = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const double r = std::abs(qd_det_segment_remainder(1e6, a, 1.0));
    worst_b0 = std::max(worst_b0, r);
    o.check(r < 1e-4, fmt("b0 extraction alpha = %g: %.3g", a, r));
  }
  if (o.ok) o.detail = fmt("pair identity %.3g, b0 remainder %.3g", worst, worst_b0);
  return o;
}

Outcome lerch() {
  Outcome o;
  double worst = 0.0;
  for (double a : {0.3, 1.0, 2.5}) {
    const double err = std::abs(hurwitz_zeta(0.0, a).derivative - (log_gamma(a) - 0.5 * std::log(2 * kPi)));
    worst = std::max(worst, err);
    o.check(err < 1e-12, fmt("a = %g: %.3g", a, err));
  }
  if (o.ok) o.detail = fmt("max error %.3g", worst);
  return o;
}

Outcome truncation() {
  Outcome o;
  NumericOptions base, twice;
  twice.cutoff_scale = 2.0;
  double worst = 0.0;
  auto compare = [&](const std::string& what, const std::function<double(const NumericOptions&)>& f) {
    const double d = std::abs(f(base) - f(twice));
    worst = std::max(worst, d);
    o.check(d < 1e-9, what + fmt(": %.3g", d));
  };
  for (const auto& cs : {CrossSection::circle(2 * kPi), CrossSection::torus(2 * kPi, 3.0)}) {
    const std::string name = cs.describe();
    for (const char* code : {"dd", "nn", "nd", "rr", "nr"})
      compare(name + " " + code, [&](const NumericOptions& opts) {
        const auto [l, r] = parse_bc_pair(code, 0.3);
        return log_det_cylinder({cs, 2.0, l, r}, opts).log_det;
      });
    for (auto backend : {ZetaBackend::Auto, ZetaBackend::Numeric})
      compare(name + " Det*", [&](const NumericOptions& opts) { return log_det_star(cs, opts, backend).log_modulus; });
    compare(name + " interface", [&](const NumericOptions& opts) {
      return log_det_interface(cs, InterfaceGeometry::both_ends(2.0), 0.3, opts).log_det;
    });
    compare(name + " R_S(0)", [&](const NumericOptions& opts) { return log_det_star_RS0(cs, 2.0, 0.7, 0.3, opts).log_det; });
    compare(name + " Neumann gluing lhs", [&](const NumericOptions& opts) {
      return glue_neumann_check({cs, 2.0, 0.7, 0.0}, opts).lhs;
    });
    compare(name + " Robin gluing rhs", [&](const NumericOptions& opts) {
      return glue_robin_check({cs, 2.0, 0.7, 0.3}, opts).rhs;
    });
  }
  if (o.ok) o.detail = fmt("max change %.3g", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"segment D/D closed form", segment_dd},
      {"segment Robin/Robin closed form and oracle", segment_rr},
      {"Q_D segment matrix determinant", qd_matrix},
      {"Neumann gluing on the circle", [] { return gluing(0.0); }},
      {"Robin gluing on the circle", [] { return gluing(1.0); }},
      {"circle closed forms", circle_closed_forms},
      {"asymptotic constants", asymptotic_constants},
      {"Hurwitz/Lerch identity", lerch},
      {"truncation robustness", truncation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    failures += o.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
