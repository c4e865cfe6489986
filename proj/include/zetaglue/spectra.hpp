#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zg {

struct SpectrumEntry {
  double eigenvalue = 0.0;
  long long multiplicity = 1;
};

/// Coefficients of Tr e^{-t Delta_Y} ~ sum_j a_j t^{j - cross_dim/2} as t -> 0+.
struct HeatExpansion {
  int cross_dim = 0;
  std::vector<double> coeffs;

  /// a_j; throws naming the index when the expansion does not reach j.  Negative j gives 0.
  double coeff(int j) const;
};

struct Point {};
struct Circle {
  double length;
};
struct FlatTorus {
  double length1, length2;
};
struct ExplicitSpectrum {
  int dim = 0;
  std::vector<SpectrumEntry> entries;
  std::optional<HeatExpansion> heat;
  /// Every eigenvalue <= complete_up_to is present in entries.
  double complete_up_to = 0.0;
};

/// The closed manifold Y of a cylinder [0, L] x Y.  Immutable; cheap to copy.
class CrossSection {
 public:
  using Kind = std::variant<Point, Circle, FlatTorus, std::shared_ptr<const ExplicitSpectrum>>;

  static CrossSection point();
  static CrossSection circle(double length);
  static CrossSection torus(double length1, double length2);
  static CrossSection explicit_spectrum(ExplicitSpectrum spec);
  /// Parses {"dim", "entries": [[mu, mult], ...], "heat": {"coeffs": [...]}, "cutoff"?}.
  static CrossSection from_json(const std::string& text);
  static CrossSection load(const std::string& path);
  /// point | circle:L | torus:L1,L2 | explicit:path
  static CrossSection parse(const std::string& descriptor);

  const Kind& kind() const { return kind_; }
  int cross_dim() const;
  std::string describe() const;

  const ExplicitSpectrum* as_explicit() const;
  const Circle* as_circle() const { return std::get_if<Circle>(&kind_); }
  const FlatTorus* as_torus() const { return std::get_if<FlatTorus>(&kind_); }
  bool is_point() const { return std::holds_alternative<Point>(kind_); }

 private:
  explicit CrossSection(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// All eigenvalues <= cutoff with exact multiplicities, ascending.
std::vector<SpectrumEntry> enumerate_spectrum(const CrossSection& cs, double cutoff);

/// Largest cutoff for which enumerate_spectrum is exact (infinity for the model manifolds).
double trusted_cutoff(const CrossSection& cs);

HeatExpansion heat_coefficients(const CrossSection& cs, int order);

long long kernel_dim(const CrossSection& cs);

/// Tr e^{-t Delta_Y} with relative error <= 1e-12.
double heat_trace(const CrossSection& cs, double t);

/// Bound N(x) <= sum_n poly[n] x^n on the number of eigenvalues with sqrt(mu) <= x.
struct CountingBound {
  std::vector<double> poly;
};

CountingBound counting_bound(const CrossSection& cs);

/// Upper bound on sum over sqrt(mu) > rho of m e^{-r sqrt(mu)}.
double exp_tail_bound(const CrossSection& cs, double r, double rho);

/// Smallest positive eigenvalue (requires one to exist below the trusted cutoff for Explicit).
double smallest_positive_eigenvalue(const CrossSection& cs);

}  // namespace zg
