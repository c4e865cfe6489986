#pragma once

#include <utility>
#include <vector>

#include "zetaglue/spectra.hpp"

namespace zg {

/// Constant terms of the large-lambda expansions attached to sqrt(Delta_Y + lambda) +- alpha.
struct AsymConstants {
  double s_alpha = 0.0;
  double s_minus_alpha = 0.0;
  double w0 = 0.0;
  double w1 = 0.0;
  double a0 = 0.0;
};

/// c_k: H_{k/2-1} for even k, -2 ln 2 + 2 sum_{p<=[k/2]} 1/(2p-1) for odd k.
double c_k(int k);

/// Constant term of ln Det(sqrt(Delta_Y + lambda) + alpha) as lambda -> infinity.
double s_alpha(const HeatExpansion& heat, double alpha);

/// s_alpha + s_{-alpha} from its closed even-dimensional form (0 when cross_dim is odd).
double s_alpha_pair(const HeatExpansion& heat, double alpha);

/// (w0, w1); both vanish for odd cross_dim.
std::pair<double, double> w0_w1(const HeatExpansion& heat, double alpha);

AsymConstants asym_constants(const HeatExpansion& heat, double alpha);

/// One (heat data, alpha) pair per boundary component.
using Components = std::vector<std::pair<HeatExpansion, double>>;

/// a_0 = sum_i a_0^i with a_0^i = -ln 2 w0 + w1 (even cross_dim) or 0 (odd).  m is dim M.
double a0_constant(const Components& components, int m);

/// b_0 = -sum_i s_{alpha_i}.
double b0_constant(const Components& components);

}  // namespace zg
