#pragma once

#include <vector>

#include "zetaglue/cylinder.hpp"

namespace zg {

/// -d^2/du^2 on [0, L] with the given end conditions (outward-normal Robin convention).
struct SecularProblem {
  double length;
  BoundaryCondition left;
  BoundaryCondition right;
};

/// First n eigenvalues, ascending, zero mode included.  Roots k of the phase condition
/// theta_left(k) + k L - theta_right(k) = n pi are bracketed and bisected; mu = k^2.
/// Robin parameters must be >= 0 so that every eigenvalue is non-negative.
std::vector<double> segment_eigenvalues(const SecularProblem& p, int n);

struct OracleDet {
  double value = 0.0;       // ln Det (ln Det* when zero modes were dropped)
  double error = 0.0;       // last Richardson delta
  long long zero_modes = 0; // eigenvalues equal to 0, excluded
  double pairing_constant = 0.0;  // max k^2 |ln(mu_k / model_k)| beyond the explicit modes
};

/// ln Det from n eigenvalues: a Hurwitz-zeta model ((k + c) pi / L)^2 with the same asymptotic offset is
/// regularized in closed form and the convergent sum of ln(mu_k / model_k) is Richardson-extrapolated.
OracleDet oracle_log_det(const SecularProblem& p, int n);

struct OracleRelative {
  double value = 0.0;
  double error = 0.0;
  long long zero_modes_p = 0, zero_modes_ref = 0;
  double pairing_constant = 0.0;
};

/// ln Det(p) - ln Det(reference) for problems on the same interval.
OracleRelative relative_log_det(const SecularProblem& p, const SecularProblem& reference, int n);

}  // namespace zg
