#include "zetaglue/series.hpp"

#include <algorithm>
#include <cmath>

#include "zetaglue/error.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

namespace {

using Kind = SeriesForm::Kind;

// ln(1 - q e^{-2 l r}) for q e^{-2 l r} < 1 computed without cancellation.
SignedLog log1m(double q, double l, double r) {
  const double x = q * std::exp(-2.0 * l * r);
  if (q == 1.0) return {std::log(-std::expm1(-2.0 * l * r)), 0};
  return signed_log1p(-x);
}

void check_not_singular(double r, double alpha) {
  if (std::abs(r - alpha) <= kCollisionTol * std::max(1.0, r)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "singular series term: sqrt(mu) = %.17g equals alpha", r);
    fail(ErrorKind::SingularParameter, buf);
  }
}

// Decay rate, and a constant K with |term(r)| <= K e^{-decay r} for every r >= rho.
struct TailModel {
  double decay, factor, rho;
};

TailModel tail_model(const SeriesForm& f) {
  const double L = f.length, a = std::abs(f.alpha);
  auto start = [&](double decay, double amp) {
    // From here on amp e^{-decay r} <= 1/2, so |ln(1 + d)| <= 2|d|.
    return std::max(3.0 * a, std::log(2.0 * amp) / decay);
  };
  switch (f.kind) {
    case Kind::Log1mExp:
      return {2.0 * L, 2.0, start(2.0 * L, 1.0)};
    case Kind::Log1pExp:
      return {2.0 * L, 1.0, 0.0};
    case Kind::RobinBoth:
      return {2.0 * L, 8.0, start(2.0 * L, 4.0)};
    case Kind::RobinEnd:
      return {2.0 * L, 4.0, start(2.0 * L, 2.0)};
    case Kind::RobinPair: {
      const double d = 2.0 * std::min(f.cut, L - f.cut);
      return {d, 10.0, start(d, 2.0)};
    }
    case Kind::NeumannPair: {
      const double d = 2.0 * std::min(f.cut, L - f.cut);
      return {d, 6.0, start(d, 1.0)};
    }
    case Kind::BothEndsShift:
      return {2.0 * L, 12.0, start(2.0 * L, 6.0)};
    case Kind::NeumannEndShift:
      return {2.0 * L, 4.0, start(2.0 * L, 2.0)};
    case Kind::RobinEndShift:
      return {2.0 * L, 6.0, start(2.0 * L, 3.0)};
  }
  return {2.0 * L, 1.0, 0.0};
}

}  // namespace

SignedLog SeriesForm::term(double r) const {
  const double L = length, a = alpha;
  switch (kind) {
    case Kind::Log1mExp:
      return log1m(1.0, L, r);
    case Kind::Log1pExp:
      return {std::log1p(std::exp(-2.0 * L * r)), 0};
    case Kind::RobinBoth: {
      check_not_singular(r, -a);
      const double q = (r - a) / (r + a);
      return log1m(q * q, L, r);
    }
    case Kind::RobinEnd:
      check_not_singular(r, -a);
      return log1m((r - a) / (r + a), L, r);
    case Kind::RobinPair: {
      check_not_singular(r, a);
      check_not_singular(r, -a);
      const SignedLog num = log1m(1.0, L, r);
      const SignedLog d1 = log1m((r - a) / (r + a), cut, r);
      const SignedLog d2 = log1m((r + a) / (r - a), L - cut, r);
      return {num.log_modulus - d1.log_modulus - d2.log_modulus, num.phase - d1.phase - d2.phase};
    }
    case Kind::NeumannPair: {
      const SignedLog num = log1m(1.0, L, r);
      const SignedLog d1 = log1m(1.0, cut, r);
      const SignedLog d2 = log1m(1.0, L - cut, r);
      return {num.log_modulus - d1.log_modulus - d2.log_modulus, 0};
    }
    case Kind::BothEndsShift: {
      check_not_singular(r, -a);
      const double denom = (r + a) * (r + a) * std::expm1(2.0 * L * r);
      return signed_log1p(4.0 * a * r / denom);
    }
    case Kind::NeumannEndShift:
      return {std::log1p(2.0 / std::expm1(2.0 * L * r)), 0};
    case Kind::RobinEndShift:
      check_not_singular(r, -a);
      return signed_log1p(-2.0 * r / ((r + a) * (std::exp(2.0 * L * r) + 1.0)));
  }
  return {};
}

std::string SeriesForm::label() const {
  switch (kind) {
    case Kind::Log1mExp:
      return "sum ln(1 - e^{-2L sqrt(mu)})";
    case Kind::Log1pExp:
      return "sum ln(1 + e^{-2L sqrt(mu)})";
    case Kind::RobinBoth:
      return "sum ln(1 - (sqrt(mu)-alpha)^2 / ((sqrt(mu)+alpha)^2 e^{2L sqrt(mu)}))";
    case Kind::RobinEnd:
      return "sum ln(1 - (sqrt(mu)-alpha) / ((sqrt(mu)+alpha) e^{2L sqrt(mu)}))";
    case Kind::RobinPair:
      return "sum ln((1 - e^{-2L sqrt(mu)}) / (Robin factors at the cut))";
    case Kind::NeumannPair:
      return "sum ln((1 - e^{-2L sqrt(mu)}) / ((1 - e^{-2a sqrt(mu)})(1 - e^{-2(L-a) sqrt(mu)})))";
    case Kind::BothEndsShift:
      return "sum ln(1 + 4 alpha sqrt(mu) / ((sqrt(mu)+alpha)^2 (e^{2L sqrt(mu)} - 1)))";
    case Kind::NeumannEndShift:
      return "sum ln(1 + 2 / (e^{2L sqrt(mu)} - 1))";
    case Kind::RobinEndShift:
      return "sum ln(1 - 2 sqrt(mu) / ((sqrt(mu)+alpha)(e^{2L sqrt(mu)} + 1)))";
  }
  return "";
}

SeriesResult bose_series(const CrossSection& cs, const SeriesForm& form, const NumericOptions& opts) {
  require(form.length > 0.0 && std::isfinite(form.length), ErrorKind::Domain, "series length must be positive");
  if (form.kind == Kind::RobinPair || form.kind == Kind::NeumannPair)
    require(form.cut > 0.0 && form.cut < form.length, ErrorKind::Domain, "cut must lie strictly inside (0, L)");
  SeriesResult out;
  if (cs.is_point()) return out;

  const TailModel tm = tail_model(form);
  double r_cut = std::max({40.0 / tm.decay, tm.rho, 4.0 * std::abs(form.alpha) + 1.0});
  double cutoff = r_cut * r_cut * opts.cutoff_scale;
  double bound = tm.factor * exp_tail_bound(cs, tm.decay, std::sqrt(cutoff));
  const double tol = opts.series_tol * std::min(1.0, opts.cutoff_scale);
  for (int it = 0; bound > tol; ++it) {
    if (it > 60) throw NonConvergenceError("series tail bound did not reach the requested tolerance", bound);
    cutoff *= 2.0;
    bound = tm.factor * exp_tail_bound(cs, tm.decay, std::sqrt(cutoff));
  }
  if (cutoff > trusted_cutoff(cs))
    throw InsufficientSpectrumError("series needs eigenvalues up to " + std::to_string(cutoff) +
                                        " but the spectrum is complete only up to " +
                                        std::to_string(trusted_cutoff(cs)),
                                    trusted_cutoff(cs));

  const auto spec = enumerate_spectrum(cs, cutoff);
  const auto logs = parallel_map<SignedLog>(spec.size(), [&](std::size_t i) {
    if (spec[i].eigenvalue == 0.0) return SignedLog{};
    return form.term(std::sqrt(spec[i].eigenvalue));
  });
  CompensatedSum acc;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].eigenvalue == 0.0) continue;
    acc.add(double(spec[i].multiplicity) * logs[i].log_modulus);
    out.phase_multiple += static_cast<int>(spec[i].multiplicity) * logs[i].phase;
    ++out.terms;
  }
  out.value = acc.value();
  out.tail_bound = bound;
  out.cutoff = cutoff;
  return out;
}

}  // namespace zg
