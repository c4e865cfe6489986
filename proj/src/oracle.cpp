#include "zetaglue/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zetaglue/error.hpp"
#include "zetaglue/numeric.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

using BKind = BoundaryCondition::Kind;

void validate(const SecularProblem& p) {
  require(p.length > 0.0 && std::isfinite(p.length), ErrorKind::Domain, "segment length must be positive");
  for (const auto* bc : {&p.left, &p.right})
    if (bc->is_robin())
      require(bc->alpha() > 0.0, ErrorKind::Validation,
              "oracle supports Robin parameters alpha > 0 only (negative eigenvalues are not bracketed)");
}

// y = sin(k u + theta_left) meets the left condition.
double theta_left(const BoundaryCondition& bc, double k) {
  switch (bc.kind()) {
    case BKind::Dirichlet:
      return 0.0;
    case BKind::Neumann:
      return 0.5 * kPi;
    case BKind::Robin:
      return 0.5 * kPi - std::atan(bc.alpha() / k);
  }
  return 0.0;
}

// The right condition holds when k L + theta_left = n pi + theta_right.
double theta_right(const BoundaryCondition& bc, double k) {
  switch (bc.kind()) {
    case BKind::Dirichlet:
      return 0.0;
    case BKind::Neumann:
      return 0.5 * kPi;
    case BKind::Robin:
      return 0.5 * kPi + std::atan(bc.alpha() / k);
  }
  return 0.0;
}

double limit_offset(const BoundaryCondition& bc) { return bc.kind() == BKind::Dirichlet ? 0.0 : 0.5 * kPi; }

double phase(const SecularProblem& p, double k) {
  return theta_left(p.left, k) + k * p.length - theta_right(p.right, k);
}

// phase at k -> 0+.
double phase_at_zero(const SecularProblem& p) {
  auto left0 = [](const BoundaryCondition& bc) { return bc.kind() == BKind::Neumann ? 0.5 * kPi : 0.0; };
  auto right0 = [](const BoundaryCondition& bc) {
    if (bc.kind() == BKind::Robin) return kPi;
    return bc.kind() == BKind::Neumann ? 0.5 * kPi : 0.0;
  };
  return left0(p.left) - right0(p.right);
}

bool has_zero_mode(const SecularProblem& p) {
  return p.left.kind() == BKind::Neumann && p.right.kind() == BKind::Neumann;
}

double root(const SecularProblem& p, long long n) {
  const double target = double(n) * kPi;
  // theta_left - theta_right lies in [-pi, pi/2]; the phase is increasing, so a widened bracket is safe.
  double lo = std::max(0.0, (target - 0.75 * kPi) / p.length);
  double hi = (target + 1.25 * kPi) / p.length;
  const double flo = lo > 0.0 ? phase(p, lo) - target : phase_at_zero(p) - target;
  const double fhi = phase(p, hi) - target;
  if (!(flo < 0.0 && fhi > 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "root bracketing failed on [%.17g, %.17g] for n = %lld", lo, hi, n);
    throw NonConvergenceError(buf, hi - lo);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (phase(p, mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

long long first_index(const SecularProblem& p) {
  // Smallest n with n pi > phase(0+).
  return static_cast<long long>(std::floor(phase_at_zero(p) / kPi)) + 1;
}

}  // namespace

std::vector<double> segment_eigenvalues(const SecularProblem& p, int n) {
  validate(p);
  require(n >= 1, ErrorKind::Domain, "eigenvalue count must be >= 1");
  const bool zero = has_zero_mode(p);
  const long long n0 = first_index(p);
  const int roots = zero ? n - 1 : n;
  auto ks = parallel_map<double>(std::size_t(roots), [&](std::size_t i) { return root(p, n0 + (long long)i); });
  std::vector<double> out;
  out.reserve(n);
  if (zero) out.push_back(0.0);
  for (double k : ks) out.push_back(k * k);
  return out;
}

OracleDet oracle_log_det(const SecularProblem& p, int n) {
  validate(p);
  require(n >= 64, ErrorKind::Domain, "oracle determinant needs at least 64 eigenvalues");
  const double L = p.length;
  // Large-k roots satisfy k L = (n + c) pi + O(1/k).
  const double c = (limit_offset(p.right) - limit_offset(p.left)) / kPi;
  const bool zero = has_zero_mode(p);
  const long long n_first = first_index(p);
  const auto mus = segment_eigenvalues(p, n);

  OracleDet out;
  out.zero_modes = zero ? 1 : 0;
  // Explicit modes: those whose model value (n + c) would be <= 0.
  std::vector<double> rest;
  CompensatedSum explicit_part;
  long long model_start = -1;
  const std::size_t skip = zero ? 1 : 0;
  for (std::size_t i = skip; i < mus.size(); ++i) {
    const long long idx = n_first + (long long)(i - skip);
    if (double(idx) + c <= 0.0) {
      explicit_part.add(std::log(mus[i]));
      continue;
    }
    if (model_start < 0) model_start = idx;
    const double model = std::pow((double(idx) + c) * kPi / L, 2);
    const double term = std::log(mus[i] / model);
    rest.push_back(term);
    const double kk = double(rest.size());
    if (rest.size() >= 10) out.pairing_constant = std::max(out.pairing_constant, kk * kk * std::abs(term));
  }
  const double a = double(model_start) + c;
  const ValueAndDerivative h = hurwitz_zeta(0.0, a);
  const double model_log_det = 2.0 * std::log(kPi / L) * h.value - 2.0 * h.derivative;

  // Partial sums at m/4, m/2, m; remainder ~ A/m + B/m^2.
  const std::size_t m = rest.size() - rest.size() % 4;
  auto partial = [&](std::size_t upto) {
    CompensatedSum s;
    for (std::size_t i = 0; i < upto; ++i) s.add(rest[i]);
    return s.value();
  };
  const double s1 = partial(m / 4), s2 = partial(m / 2), s3 = partial(m);
  const double r1a = 2.0 * s2 - s1, r1b = 2.0 * s3 - s2;
  const double r2 = (4.0 * r1b - r1a) / 3.0;
  out.value = explicit_part.value() + model_log_det + r2;
  out.error = std::abs(r2 - r1b);
  return out;
}

OracleRelative relative_log_det(const SecularProblem& p, const SecularProblem& reference, int n) {
  require(p.length == reference.length, ErrorKind::Validation, "relative determinant needs problems on the same interval");
  const OracleDet a = oracle_log_det(p, n);
  const OracleDet b = oracle_log_det(reference, n);
  OracleRelative out;
  out.value = a.value - b.value;
  out.error = a.error + b.error;
  out.zero_modes_p = a.zero_modes;
  out.zero_modes_ref = b.zero_modes;
  out.pairing_constant = std::max(a.pairing_constant, b.pairing_constant);
  return out;
}

}  // namespace zg
