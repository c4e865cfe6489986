#pragma once

#include <vector>

#include "zetaglue/numeric.hpp"
#include "zetaglue/spectra.hpp"

namespace zg {

/// Value (finite part at a pole) and residue of a spectral zeta function at s.
struct ZetaPoint {
  double s = 0.0;
  double value = 0.0;
  double residue = 0.0;
};

/// log of a regularized determinant; the phase is an integer multiple of pi kept apart from the real part.
struct RegularizedDet {
  double log_modulus = 0.0;
  int phase_multiple = 0;
  long long excluded_zero_modes = 0;
  double truncation = 0.0;  // estimated absolute error
};

enum class ZetaBackend {
  Auto,        // closed form where one exists, otherwise numeric
  ClosedForm,  // Riemann/Hurwitz for the circle, Ewald split for the torus
  Numeric,     // Mellin split against the heat expansion, fed by the (enumerated or stored) spectrum
};

/// Mellin-split representation of Gamma(s) zeta(s) over the positive spectrum:
///   F(s) = sum_power c T^{s+p}/(s+p) + sum_{mu not excluded} m mu^{-s} Gamma(s, mu T)
///          - sum_{excluded} m mu^{-s} gamma(s, mu T) + sum_dual w b^{s-h} Gamma(h - s, b/T)
/// where the small-time heat trace (minus the kernel) is modelled by c t^p powers and, optionally,
/// exact Poisson-dual Gaussians w t^{-h} e^{-b/t}.
class MellinModel {
 public:
  struct Power {
    double c, p;
  };
  struct Dual {
    double w, h, b;
    long long mult;
  };

  MellinModel(std::vector<SpectrumEntry> positive, double spectrum_cutoff, std::vector<Power> power,
              std::vector<Dual> dual, double min_s, double split_cap);

  /// Removes a finite set of positive eigenvalues from the operator.  Only s > 0 may be evaluated afterwards.
  void exclude(std::vector<SpectrumEntry> modes);

  /// Split point: the user's choice if set, else min(cap, (40 + max(s, 0)) / spectrum cutoff), the smallest T
  /// for which the discarded Gamma(s, mu T) stay below e^{-40}.
  double split(double s, const NumericOptions& opts) const;

  ZetaPoint evaluate(double s, double T) const;

  /// zeta(0) and zeta'(0).
  std::pair<double, double> at_zero(double T) const;

  double spectrum_cutoff() const { return cutoff_; }

 private:
  struct Laurent {
    double pole = 0.0;  // coefficient of 1/(s - s0)
    double regular = 0.0;
  };
  Laurent split_sum(double s, double T) const;

  std::vector<SpectrumEntry> positive_;
  std::vector<SpectrumEntry> excluded_;
  double cutoff_;
  std::vector<Power> power_;
  std::vector<Dual> dual_;
  double min_s_;
  double split_cap_;
};

/// Builds the Mellin model of the positive spectrum of Delta_Y.  Numeric: heat-expansion powers;
/// ClosedForm/Auto on circle and torus: exact Poisson-dual terms.  The enumerated spectrum reaches far enough
/// for evaluations up to s_max with split points no larger than split_cap.
MellinModel make_mellin_model(const CrossSection& cs, ZetaBackend backend, const NumericOptions& opts,
                              double split_cap = 1.0, double s_max = 40.0);

/// zeta over the nonzero spectrum (plus q0 at s = 0 when include_zero is set).
ZetaPoint zeta_point(const CrossSection& cs, double s, bool include_zero = false, const NumericOptions& opts = {},
                     ZetaBackend backend = ZetaBackend::Auto);

/// ln Det* Delta_Y = -zeta'(0) over the nonzero spectrum.
RegularizedDet log_det_star(const CrossSection& cs, const NumericOptions& opts = {},
                            ZetaBackend backend = ZetaBackend::Auto);

/// ln Det(sqrt(Delta_Y) + alpha), zero modes contributing the eigenvalue alpha each.
RegularizedDet log_det_shifted(const CrossSection& cs, double alpha, const NumericOptions& opts = {},
                               ZetaBackend backend = ZetaBackend::Auto);

/// Same over the positive spectrum of Delta_Y only.  At alpha = 0 this is (1/2) ln Det* Delta_Y.
RegularizedDet log_det_shifted_positive(const CrossSection& cs, double alpha, const NumericOptions& opts = {},
                                        ZetaBackend backend = ZetaBackend::Auto);

/// Relative tolerance under which sqrt(mu) + alpha counts as a collision with the spectrum.
inline constexpr double kCollisionTol = 1e-7;

/// Throws SingularParameter if -alpha lies on sqrt(Spec Delta_Y) (including 0 when there are zero modes
/// and include_zero is set).
void check_shift_admissible(const CrossSection& cs, double alpha, bool include_zero);

}  // namespace zg
