#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "zetaglue/numeric.hpp"
#include "zetaglue/spectra.hpp"
#include "zetaglue/terms.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

/// Q_D(lambda) + alpha on the two endpoints of [0, L], with its determinant.
struct QdMatrix {
  std::array<std::complex<double>, 4> m;  // row-major
  std::complex<double> det;
};

/// Entries use the principal sqrt(lambda).  Requires Re lambda >= 0 and lambda != 0.
QdMatrix qd_matrix_segment(std::complex<double> lambda, double alpha, double L);

/// lambda + alpha^2 + 2 alpha sqrt(lambda) + 4 alpha sqrt(lambda) / (e^{2 sqrt(lambda) L} - 1).
std::complex<double> qd_det_closed(std::complex<double> lambda, double alpha, double L);

/// lambda -> 0 limit of the determinant: 2 alpha / L + alpha^2.
double qd0_det_segment(double alpha, double L);

/// ln |det(Q_D(lambda) + alpha)| minus ln(lambda + alpha^2 + 2 alpha sqrt(lambda)) for real lambda > 0;
/// tends to the constant b_0 = 0 as lambda grows.
double qd_det_segment_remainder(double lambda, double alpha, double L);

/// Boundary pieces on which a Dirichlet-to-Neumann type operator at lambda = 0 is taken.
struct InterfaceGeometry {
  enum class Kind {
    BothEnds,         // Q_D(0) + alpha on {0} x Y and {L} x Y
    LeftNeumannCut,   // Q_D(0) on {0} x Y, Dirichlet at {L} x Y
    NeumannRobinEnd,  // Q_D(0) + alpha on {L} x Y, Neumann at {0} x Y
    CutLeft,          // Q_1(0) + alpha at the cut of [0, a], Neumann at 0
    CutRight,         // Q_2(0) - alpha at the cut of [a, L], Neumann at L; length is L - a
  };
  Kind kind;
  double length;

  static InterfaceGeometry both_ends(double L) { return {Kind::BothEnds, L}; }
  static InterfaceGeometry left_neumann_cut(double L) { return {Kind::LeftNeumannCut, L}; }
  static InterfaceGeometry neumann_robin_end(double L) { return {Kind::NeumannRobinEnd, L}; }
  static InterfaceGeometry cut_left(double a) { return {Kind::CutLeft, a}; }
  static InterfaceGeometry cut_right(double rest) { return {Kind::CutRight, rest}; }

  /// "both_ends", "left_neumann_cut", "neumann_robin_end", "cut_left", "cut_right".
  static InterfaceGeometry parse(const std::string& name, double length);
  std::string name() const;
};

struct InterfaceEntry {
  double eigenvalue;
  long long multiplicity;
};

struct InterfaceSpectrum {
  std::vector<InterfaceEntry> entries;  // ascending, exact zeros removed
  long long zero_modes = 0;
  std::string provenance;
  double cutoff = 0.0;  // entries come from mu_j <= cutoff
};

/// Eigenvalues of the interface operator built from the eigenvalues mu <= cutoff of Delta_Y.
InterfaceSpectrum spec_interface(const CrossSection& cs, const InterfaceGeometry& g, double alpha, double cutoff);

/// The value the operator takes on the mu-eigenspace (one value, or two for BothEnds).
std::vector<double> interface_values(const InterfaceGeometry& g, double alpha, double mu);

/// Throws SingularParameter when an eigenvalue of the interface operator is zero.  When alpha = 0 the
/// mu = 0 modes are zero modes of the operator, not collisions.
void check_interface_invertible(const CrossSection& cs, const InterfaceGeometry& g, double alpha);

/// ln Det of the interface operator (ln Det* when it has zero modes) through its factorization into
/// Det(sqrt(Delta_Y) +- alpha) and a convergent correction series.
DetReport log_det_interface(const CrossSection& cs, const InterfaceGeometry& g, double alpha,
                            const NumericOptions& opts = {}, ZetaBackend backend = ZetaBackend::Auto);

/// Spectrum of R_S(0) = (Q_1(0) + alpha)^{-1} + (Q_2(0) - alpha)^{-1} for the cut at a of [0, L].
InterfaceSpectrum spec_RS0(const CrossSection& cs, double L, double a, double alpha, double cutoff);

/// The same eigenvalue through the two one-sided operators, 1/(Q_1 + alpha) + 1/(Q_2 - alpha).
double rs0_value_from_pieces(double mu, double L, double a, double alpha);

/// zeta(0) of sqrt(Delta_Y) - alpha^2 / sqrt(Delta_Y) over the nonzero spectrum.
double zeta0_rs0_factor(const CrossSection& cs, double alpha, const NumericOptions& opts = {});

/// ln Det* R_S(0) (alpha != 0) or ln Det* R_Neu(0) (alpha = 0).
DetReport log_det_star_RS0(const CrossSection& cs, double L, double a, double alpha, const NumericOptions& opts = {},
                           ZetaBackend backend = ZetaBackend::Auto);

}  // namespace zg
