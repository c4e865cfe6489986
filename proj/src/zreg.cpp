#include "zetaglue/zreg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaglue/error.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ZetaBackend resolve(const CrossSection& cs, ZetaBackend backend) {
  if (cs.as_explicit()) {
    require(backend != ZetaBackend::ClosedForm, ErrorKind::Validation,
            "no closed-form zeta backend for an explicit cross-section");
    return ZetaBackend::Numeric;
  }
  return backend == ZetaBackend::Auto ? ZetaBackend::ClosedForm : backend;
}

std::vector<SpectrumEntry> positive_part(std::vector<SpectrumEntry> spec) {
  spec.erase(std::remove_if(spec.begin(), spec.end(), [](const SpectrumEntry& e) { return e.eigenvalue == 0.0; }),
             spec.end());
  return spec;
}

}  // namespace

MellinModel::MellinModel(std::vector<SpectrumEntry> positive, double spectrum_cutoff, std::vector<Power> power,
                         std::vector<Dual> dual, double min_s, double split_cap)
    : positive_(std::move(positive)),
      cutoff_(spectrum_cutoff),
      power_(std::move(power)),
      dual_(std::move(dual)),
      min_s_(min_s),
      split_cap_(split_cap) {}

void MellinModel::exclude(std::vector<SpectrumEntry> modes) {
  for (const auto& m : modes) {
    auto it = std::find_if(positive_.begin(), positive_.end(),
                           [&](const SpectrumEntry& e) { return e.eigenvalue == m.eigenvalue; });
    require(it != positive_.end() && it->multiplicity == m.multiplicity, ErrorKind::Validation,
            "excluded mode is not part of the modelled spectrum");
    positive_.erase(it);
    excluded_.push_back(m);
  }
}

double MellinModel::split(double s, const NumericOptions& opts) const {
  if (opts.mellin_split > 0.0) return std::min(opts.mellin_split, split_cap_);
  if (positive_.empty() && excluded_.empty()) return split_cap_;
  return std::min(split_cap_, (40.0 + std::max(s, 0.0)) / cutoff_);
}

MellinModel::Laurent MellinModel::split_sum(double s, double T) const {
  require(T > 0.0, ErrorKind::Domain, "Mellin split point must be positive");
  require(s > min_s_, ErrorKind::Validation,
          "continuation unsupported: s = " + std::to_string(s) + " lies outside the heat-expansion strip");
  require(excluded_.empty() || s > 0.0, ErrorKind::Validation, "excluded modes need s > 0");
  if (!positive_.empty() && T * cutoff_ < 35.0 + std::max(s, 0.0))
    throw InsufficientSpectrumError("spectrum up to " + std::to_string(cutoff_) + " is too short for split point " +
                                        std::to_string(T),
                                    cutoff_);

  Laurent out;
  CompensatedSum reg;
  const double lnT = std::log(T);
  for (const auto& term : power_) {
    const double e = s + term.p;
    if (std::abs(e) < 1e-12) {
      out.pole += term.c;
      reg.add(term.c * lnT);
    } else {
      reg.add(term.c * std::exp(e * lnT) / e);
    }
  }

  const auto spectral = parallel_map<double>(positive_.size(), [&](std::size_t i) {
    const auto& en = positive_[i];
    const double x = en.eigenvalue * T;
    if (x > 745.0) return 0.0;
    return double(en.multiplicity) * std::pow(en.eigenvalue, -s) * upper_gamma(s, x);
  });
  for (double v : spectral) reg.add(v);

  for (const auto& en : excluded_)
    reg.add(-double(en.multiplicity) * std::pow(en.eigenvalue, -s) * lower_gamma(s, en.eigenvalue * T));

  const auto dual = parallel_map<double>(dual_.size(), [&](std::size_t i) {
    const auto& d = dual_[i];
    const double x = d.b / T;
    if (x > 745.0) return 0.0;
    return double(d.mult) * d.w * std::pow(d.b, s - d.h) * upper_gamma(d.h - s, x);
  });
  for (double v : dual) reg.add(v);

  out.regular = reg.value();
  return out;
}

ZetaPoint MellinModel::evaluate(double s, double T) const {
  const Laurent f = split_sum(s, T);
  const double r0 = reciprocal_gamma(s);
  const double r1 = reciprocal_gamma_derivative(s);
  return {s, f.pole * r1 + f.regular * r0, f.pole * r0};
}

std::pair<double, double> MellinModel::at_zero(double T) const {
  require(excluded_.empty(), ErrorKind::Validation, "zeta'(0) of a model with excluded modes");
  const Laurent f = split_sum(0.0, T);
  return {f.pole, f.regular + f.pole * kEulerGamma};
}

MellinModel make_mellin_model(const CrossSection& cs, ZetaBackend backend, const NumericOptions& opts,
                              double split_cap, double s_max) {
  backend = resolve(cs, backend);
  const long long q0 = kernel_dim(cs);
  if (cs.is_point()) return MellinModel({}, kInf, {}, {}, -kInf, split_cap);
  if (opts.mellin_split > 0.0) split_cap = std::min(split_cap, opts.mellin_split);
  // Smallest cutoff that keeps every evaluation up to s_max accurate at the smallest split point in use.
  const double needed = (45.0 + s_max) / split_cap;

  if (backend == ZetaBackend::ClosedForm) {
    // Poisson duality makes the small-time side exact: theta(t) = (vol / (4 pi t)^{d/2}) sum_R e^{-|R|^2/4t}.
    std::vector<MellinModel::Dual> dual;
    std::vector<MellinModel::Power> power;
    double t0;
    if (const auto* c = cs.as_circle()) {
      const double w = c->length / std::sqrt(4.0 * kPi);
      t0 = c->length * c->length / (4.0 * kPi);
      power = {{w, -0.5}, {-double(q0), 0.0}};
      const double bmax = 200.0 * t0 * opts.cutoff_scale;
      for (long long n = 1;; ++n) {
        const double b = double(n) * double(n) * c->length * c->length / 4.0;
        if (b > bmax) break;
        dual.push_back({w, 0.5, b, 2});
      }
    } else {
      const auto* t = cs.as_torus();
      const double w = t->length1 * t->length2 / (4.0 * kPi);
      t0 = w;
      power = {{w, -1.0}, {-double(q0), 0.0}};
      const double bmax = 200.0 * t0 * opts.cutoff_scale;
      const auto n1max = static_cast<long long>(std::sqrt(4.0 * bmax) / t->length1);
      const auto n2max = static_cast<long long>(std::sqrt(4.0 * bmax) / t->length2);
      for (long long i = -n1max; i <= n1max; ++i)
        for (long long j = -n2max; j <= n2max; ++j) {
          if (i == 0 && j == 0) continue;
          const double x = t->length1 * double(i), y = t->length2 * double(j);
          const double b = (x * x + y * y) / 4.0;
          if (b <= bmax) dual.push_back({w, 1.0, b, 1});
        }
      std::sort(dual.begin(), dual.end(), [](const auto& a, const auto& b) { return a.b < b.b; });
    }
    split_cap = std::min(split_cap, t0);
    const double cutoff = std::max(120.0 / t0, (45.0 + s_max) / split_cap) * opts.cutoff_scale;
    return MellinModel(positive_part(enumerate_spectrum(cs, cutoff)), cutoff, std::move(power), std::move(dual),
                       -kInf, split_cap);
  }

  const int d = cs.cross_dim();
  double cutoff;
  HeatExpansion heat;
  double min_s;
  if (const auto* e = cs.as_explicit()) {
    cutoff = e->complete_up_to * std::min(1.0, opts.cutoff_scale);
    heat = heat_coefficients(cs, static_cast<int>(e->heat ? e->heat->coeffs.size() : 1) - 1);
    min_s = 0.5 * d - double(heat.coeffs.size());
  } else {
    // Flat model manifolds: the expansion is a_0 t^{-d/2} up to exponentially small terms.
    double lmin = 0.0;
    if (const auto* c = cs.as_circle()) lmin = c->length;
    if (const auto* t = cs.as_torus()) lmin = std::min(t->length1, t->length2);
    cutoff = std::max({7200.0 / (lmin * lmin), 200.0, needed}) * opts.cutoff_scale;
    heat = heat_coefficients(cs, 0);
    min_s = -kInf;
  }
  std::vector<MellinModel::Power> power;
  double constant = -double(q0);
  for (std::size_t j = 0; j < heat.coeffs.size(); ++j) {
    const double p = double(j) - 0.5 * d;
    if (p == 0.0)
      constant += heat.coeffs[j];
    else if (heat.coeffs[j] != 0.0)
      power.push_back({heat.coeffs[j], p});
  }
  power.push_back({constant, 0.0});
  return MellinModel(positive_part(enumerate_spectrum(cs, cutoff)), cutoff, std::move(power), {}, min_s, split_cap);
}

ZetaPoint zeta_point(const CrossSection& cs, double s, bool include_zero, const NumericOptions& opts,
                     ZetaBackend backend) {
  ZetaPoint z{s, 0.0, 0.0};
  if (include_zero)
    require(s == 0.0, ErrorKind::Validation, "include_zero is only meaningful at s = 0");
  backend = resolve(cs, backend);

  if (cs.is_point()) {
    z = {s, 0.0, 0.0};
  } else if (const auto* c = cs.as_circle(); c && backend == ZetaBackend::ClosedForm) {
    // zeta(s) = 2 (l / 2 pi)^{2s} zeta_R(2s)
    const double r = c->length / (2.0 * kPi);
    if (s == 0.5) {
      z = {s, 2.0 * r * (kEulerGamma + std::log(r)), r};
    } else {
      z = {s, 2.0 * std::pow(r, 2.0 * s) * riemann_zeta(2.0 * s).value, 0.0};
    }
  } else {
    const MellinModel model = make_mellin_model(cs, backend, opts);
    z = model.evaluate(s, model.split(s, opts));
  }
  if (include_zero) z.value += double(kernel_dim(cs));
  return z;
}

RegularizedDet log_det_star(const CrossSection& cs, const NumericOptions& opts, ZetaBackend backend) {
  RegularizedDet out;
  out.excluded_zero_modes = kernel_dim(cs);
  backend = resolve(cs, backend);
  if (cs.is_point()) return out;
  if (const auto* c = cs.as_circle(); c && backend == ZetaBackend::ClosedForm) {
    const ValueAndDerivative z = riemann_zeta(0.0);
    out.log_modulus = -(4.0 * std::log(c->length / (2.0 * kPi)) * z.value + 4.0 * z.derivative);
    out.truncation = 1e-15 * (1.0 + std::abs(out.log_modulus));
    return out;
  }
  const MellinModel model = make_mellin_model(cs, backend, opts);
  const double T = model.split(0.0, opts);
  out.log_modulus = -model.at_zero(T).second;
  // Sensitivity to the split point is the honest error estimate of the heat-model side.
  if (backend == ZetaBackend::Numeric) {
    out.truncation = std::abs(out.log_modulus + model.at_zero(1.3 * T).second);
  } else {
    out.truncation = 1e-14 * (1.0 + std::abs(out.log_modulus));
  }
  return out;
}

void check_shift_admissible(const CrossSection& cs, double alpha, bool include_zero) {
  require(std::isfinite(alpha), ErrorKind::Domain, "shift must be finite");
  if (include_zero && alpha == 0.0 && kernel_dim(cs) > 0)
    fail(ErrorKind::SingularParameter, "singular shift: alpha = 0 meets the kernel of Delta_Y");
  if (alpha >= 0.0 || cs.is_point()) return;
  const double target = -alpha;
  const double reach = target * (1.0 + 2.0 * kCollisionTol) + kCollisionTol;
  for (const auto& e : enumerate_spectrum(cs, reach * reach)) {
    const double r = std::sqrt(e.eigenvalue);
    if (e.eigenvalue > 0.0 && std::abs(r - target) <= kCollisionTol * std::max(1.0, r)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "singular shift: -alpha = %.17g meets sqrt(mu) for mu = %.17g", target,
                    e.eigenvalue);
      fail(ErrorKind::SingularParameter, buf);
    }
  }
}

RegularizedDet log_det_shifted_positive(const CrossSection& cs, double alpha, const NumericOptions& opts,
                                        ZetaBackend backend) {
  check_shift_admissible(cs, alpha, false);
  backend = resolve(cs, backend);
  RegularizedDet out;
  out.excluded_zero_modes = kernel_dim(cs);
  if (cs.is_point()) return out;

  if (const auto* c = cs.as_circle(); c && backend == ZetaBackend::ClosedForm) {
    // Eigenvalues step (k + b), k >= 1, twice each; the first N0 - 1 are taken explicitly.
    const double step = 2.0 * kPi / c->length;
    const double b = alpha / step;
    const long long n0 = std::max(1LL, static_cast<long long>(std::floor(-b)) + 1);
    CompensatedSum acc;
    for (long long k = 1; k < n0; ++k) {
      const SignedLog l = signed_log(step * (double(k) + b));
      acc.add(2.0 * l.log_modulus);
      out.phase_multiple += 2 * l.phase;
    }
    const double a = double(n0) + b;
    const ValueAndDerivative h = hurwitz_zeta(0.0, a);
    acc.add(2.0 * (std::log(step) * (0.5 - a) - h.derivative));
    out.log_modulus = acc.value();
    out.truncation = 1e-14 * (1.0 + std::abs(out.log_modulus));
    return out;
  }

  const RegularizedDet star = log_det_star(cs, opts, backend);
  if (alpha == 0.0) {
    out.log_modulus = 0.5 * star.log_modulus;
    out.truncation = 0.5 * star.truncation;
    return out;
  }

  // Binomial expansion of (sqrt(mu) + alpha)^{-s} around sqrt(mu), valid once every retained sqrt(mu)
  // exceeds 3|alpha|; the finitely many modes below 4|alpha| are handled exactly.
  const double mu1 = smallest_positive_eigenvalue(cs);
  double rho = 0.0;
  std::vector<SpectrumEntry> low;
  if (3.0 * std::abs(alpha) >= std::sqrt(mu1)) {
    rho = 4.0 * std::abs(alpha);
    for (const auto& e : enumerate_spectrum(cs, rho * rho))
      if (e.eigenvalue > 0.0 && std::sqrt(e.eigenvalue) < rho) low.push_back(e);
  }
  const double cap = std::min(1.0, 1.0 / std::max(rho * rho, mu1));
  MellinModel model = make_mellin_model(cs, backend, opts, cap, 60.0);
  model.exclude(low);

  CompensatedSum acc;
  double log_det_reduced = star.log_modulus;
  for (const auto& e : low) {
    log_det_reduced -= double(e.multiplicity) * std::log(e.eigenvalue);
    const SignedLog l = signed_log(std::sqrt(e.eigenvalue) + alpha);
    acc.add(double(e.multiplicity) * l.log_modulus);
    out.phase_multiple += static_cast<int>(e.multiplicity) * l.phase;
  }
  acc.add(0.5 * log_det_reduced);

  int small_run = 0;
  double last = 0.0;
  int k = 1;
  for (; k <= 400; ++k) {
    const double s = 0.5 * k;
    const ZetaPoint z = model.evaluate(s, model.split(s, opts));
    const double coeff = std::pow(-alpha, k) / k;
    const double term = coeff * (z.value + 2.0 * z.residue * harmonic(k - 1));
    acc.add(-term);
    last = std::abs(term);
    if (k > 2 * cs.cross_dim() + 2 && last < 1e-17 * (1.0 + std::abs(acc.value()))) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  if (k > 400) throw NonConvergenceError("binomial series for ln Det(sqrt(Delta) + alpha) did not converge", last);
  out.log_modulus = acc.value();
  out.truncation = star.truncation + last;
  return out;
}

RegularizedDet log_det_shifted(const CrossSection& cs, double alpha, const NumericOptions& opts,
                               ZetaBackend backend) {
  check_shift_admissible(cs, alpha, true);
  RegularizedDet out = log_det_shifted_positive(cs, alpha, opts, backend);
  const long long q0 = kernel_dim(cs);
  if (q0 > 0) {
    const SignedLog l = signed_log(alpha);
    out.log_modulus += double(q0) * l.log_modulus;
    out.phase_multiple += static_cast<int>(q0) * l.phase;
  }
  out.excluded_zero_modes = 0;
  return out;
}

}  // namespace zg
