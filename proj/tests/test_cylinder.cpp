#include <doctest.h>

#include <cmath>
#include <string>

#include "zetaglue/asymptotics.hpp"
#include "zetaglue/cylinder.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/special.hpp"

using namespace zg;

namespace {

const auto D = BoundaryCondition::dirichlet();
const auto N = BoundaryCondition::neumann();
BoundaryCondition R(double a) { return BoundaryCondition::robin(a); }

double circle_direct_log1m(double L) {
  double s = 0.0;
  for (int k = 1; k < 200; ++k) s += 2.0 * std::log1p(-std::exp(-2.0 * L * k));
  return s;
}

double sum_terms(const DetReport& r) {
  double s = 0.0;
  for (const auto& t : r.terms) s += t.value;
  return s;
}

}  // namespace

TEST_CASE("bose series on the circle") {
  const auto circle = CrossSection::circle(2 * kPi);
  const auto s = bose_series(circle, SeriesForm::log1m_exp(1.0));
  CHECK(std::abs(s.value - circle_direct_log1m(1.0)) < 1e-15);
  CHECK(s.tail_bound <= 1e-14);
  CHECK(s.phase_multiple == 0);
  CHECK(bose_series(CrossSection::point(), SeriesForm::log1m_exp(1.0)).value == 0.0);
  CHECK(std::abs(bose_series(circle, SeriesForm::log1m_exp(50.0)).value) < 1e-40);

  for (int k = 1; k < 40; ++k) {
    CHECK(SeriesForm::log1m_exp(0.3).term(k).log_modulus < 0.0);
    CHECK(SeriesForm::log1p_exp(0.3).term(k).log_modulus > 0.0);
  }
  double direct = 0.0;
  for (int k = 1; k < 200; ++k) direct += 2.0 * std::log1p(std::exp(-2.0 * 0.4 * k));
  CHECK(std::abs(bose_series(circle, SeriesForm::log1p_exp(0.4)).value - direct) < 1e-14);
}

TEST_CASE("series on stored spectra") {
  const auto mirror = CrossSection::load(ZG_TEST_DATA "/circle_2pi.json");
  const auto circle = CrossSection::circle(2 * kPi);
  const auto a = bose_series(mirror, SeriesForm::robin_pair(2.0, 0.7, 0.3));
  const auto b = bose_series(circle, SeriesForm::robin_pair(2.0, 0.7, 0.3));
  CHECK(std::abs(a.value - b.value) < 1e-14);
  // Decay 2 min(a, L - a) = 0.1 needs eigenvalues far beyond the stored list.
  CHECK_THROWS_AS(bose_series(mirror, SeriesForm::robin_pair(2.0, 0.05, 0.3)), InsufficientSpectrumError);
}

TEST_CASE("singular series term") {
  try {
    bose_series(CrossSection::circle(2 * kPi), SeriesForm::robin_pair(2.0, 0.7, 2.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
    CHECK(std::string(e.what()).find("singular series term") != std::string::npos);
  }
}

TEST_CASE("segment specials") {
  for (double L : {0.5, 1.0, 2.0, kPi}) {
    CHECK(std::abs(log_det_segment(L, D, D).log_det - std::log(2 * L)) < 1e-15);
    CHECK(log_det_segment(L, N, N).kernel_dim == 1);
    CHECK(std::abs(log_det_segment(L, N, D).log_det - kLn2) < 1e-15);
    CHECK(std::abs(log_det_segment(L, D, N).log_det - kLn2) < 1e-15);
  }
  CHECK(std::abs(log_det_segment(1.0, R(1), R(1)).log_det - std::log(6.0)) < 1e-15);
  CHECK(std::abs(log_det_segment(2.0, R(0.5), R(0.5)).log_det - std::log(2 * 0.5 * (2 * 0.5 + 2))) < 1e-15);
  CHECK(std::abs(log_det_segment(1.5, N, R(0.4)).log_det - std::log(0.8)) < 1e-15);
  CHECK(log_det_segment(1.5, N, R(0.4)).log_det == log_det_segment(1.5, R(0.4), N).log_det);
  // One negative eigenvalue for -2/L < alpha < 0.
  const auto neg = log_det_segment(1.0, R(-0.5), R(-0.5));
  CHECK(neg.phase_multiple == 1);
  CHECK(std::abs(neg.log_det - std::log(2 * 0.5 * 1.5)) < 1e-15);
  CHECK_THROWS_AS(log_det_segment(1.0, R(-2.0), R(-2.0)), Error);
  double prev = -1e300;
  for (double L = 0.1; L < 5; L += 0.1) {
    const double v = log_det_segment(L, D, D).log_det;
    CHECK(v > prev);
    prev = v;
  }
  CHECK(R(0.0) == N);
}

TEST_CASE("cylinder over a point is the segment") {
  const auto p = CrossSection::point();
  CHECK(std::abs(log_det_cylinder({p, 1.0, D, D}).log_det - kLn2) < 1e-15);
  CHECK(std::abs(log_det_cylinder({p, 1.0, R(1), R(1)}).log_det - std::log(6.0)) < 1e-15);
}

TEST_CASE("cylinder N/N against D/D") {
  const auto circle = CrossSection::circle(2 * kPi);
  const auto dd = log_det_cylinder({circle, 1.0, D, D});
  const auto nn = log_det_cylinder({circle, 1.0, N, N});
  REQUIRE(dd.terms.size() == nn.terms.size());
  const double star = log_det_star(circle).log_modulus;
  for (std::size_t i = 0; i < dd.terms.size(); ++i) {
    CHECK(dd.terms[i].label == nn.terms[i].label);
    const double diff = nn.terms[i].value - dd.terms[i].value;
    if (dd.terms[i].label == "half ln Det* Delta_Y")
      CHECK(std::abs(diff - star) < 1e-15);
    else
      CHECK(diff == 0.0);
  }
  CHECK(nn.kernel_dim == 1);
  CHECK(dd.kernel_dim == 0);
  CHECK(dd.term("Res term") == 0.0);
  CHECK(std::abs(dd.term("Fp term") + 1.0 / 6.0) < 1e-14);
  CHECK(sum_terms(dd) == dd.log_det);
  // Known closed form: q0 ln 2L + L Fp - ln 2pi + 2 sum ln(1 - e^{-2kL}).
  CHECK(std::abs(dd.log_det - (kLn2 - 1.0 / 6.0 - std::log(2 * kPi) + circle_direct_log1m(1.0))) < 1e-13);
}

TEST_CASE("N/D through the one-ended interface operator") {
  for (const auto& cs : {CrossSection::circle(2 * kPi), CrossSection::circle(3.3), CrossSection::torus(2.0, 3.0)}) {
    for (double L : {0.5, 1.0, 2.5}) {
      const double nd = log_det_cylinder({cs, L, N, D}).log_det;
      const double dn = log_det_cylinder({cs, L, D, N}).log_det;
      const double dd = log_det_cylinder({cs, L, D, D}).log_det;
      const double qd = log_det_interface(cs, InterfaceGeometry::left_neumann_cut(L), 0.0).log_det;
      CHECK(std::abs(nd - dd - qd) < 1e-11);
      CHECK(nd == dn);
    }
  }
}

TEST_CASE("Robin/Robin and N/R through the interface operators") {
  for (const auto& cs : {CrossSection::circle(2 * kPi), CrossSection::torus(2 * kPi, 2 * kPi)}) {
    const auto heat = heat_coefficients(cs, cs.cross_dim());
    for (double L : {0.7, 2.0}) {
      const double dd = log_det_cylinder({cs, L, D, D}).log_det;
      const double nd = log_det_cylinder({cs, L, N, D}).log_det;
      for (double a : {0.3, 0.9, -0.45, 2.5}) {
        const auto rr = log_det_cylinder({cs, L, R(a), R(a)});
        const auto both = log_det_interface(cs, InterfaceGeometry::both_ends(L), a);
        CHECK(std::abs(rr.log_det - (dd - 2 * s_alpha(heat, a) + both.log_det)) < 1e-10);
        CHECK((rr.phase_multiple - both.phase_multiple) % 2 == 0);

        const auto nr = log_det_cylinder({cs, L, N, R(a)});
        const auto end = log_det_interface(cs, InterfaceGeometry::neumann_robin_end(L), a);
        CHECK(std::abs(nr.log_det - (nd - s_alpha(heat, a) + end.log_det)) < 1e-10);
        CHECK(log_det_cylinder({cs, L, R(a), N}).log_det == nr.log_det);
      }
    }
  }
}

TEST_CASE("cylinder backends agree") {
  const auto mirror = CrossSection::load(ZG_TEST_DATA "/circle_2pi.json");
  const auto circle = CrossSection::circle(2 * kPi);
  for (auto bc : {std::pair{D, D}, std::pair{N, N}, std::pair{N, D}, std::pair{R(0.3), R(0.3)}, std::pair{N, R(0.7)}}) {
    const double a = log_det_cylinder({circle, 1.0, bc.first, bc.second}).log_det;
    const double b = log_det_cylinder({circle, 1.0, bc.first, bc.second}, {}, ZetaBackend::Numeric).log_det;
    const double c = log_det_cylinder({mirror, 1.0, bc.first, bc.second}).log_det;
    CHECK(std::abs(a - b) < 1e-8);
    CHECK(std::abs(a - c) < 1e-8);
  }
}

TEST_CASE("Robin admissibility") {
  const auto circle = CrossSection::circle(2 * kPi);
  // -alpha = 1 is sqrt of the first eigenvalue.
  CHECK_THROWS_AS(log_det_cylinder({circle, 1.0, R(-1.0), R(-1.0)}), Error);
  try {
    log_det_cylinder({CrossSection::circle(6.2831853), 1.0, R(-1.0), R(-1.0)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
  }
  // -alpha = 2/L is an eigenvalue of Q_D(0) on both ends.
  CHECK_THROWS_AS(log_det_cylinder({circle, 1.0, R(-2.0), R(-2.0)}), Error);
  // -alpha = tanh(L) for the first mode of the N/R interface.
  const double hit = std::tanh(1.0);
  try {
    log_det_cylinder({circle, 1.0, N, R(-hit)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
    CHECK(std::string(e.what()).find("mu = 1") != std::string::npos);
  }
  CHECK_THROWS_AS(log_det_cylinder({circle, 1.0, D, R(0.5)}), Error);
  CHECK_THROWS_AS(log_det_cylinder({circle, 1.0, R(0.4), R(0.5)}), Error);
}

TEST_CASE("doubling the cutoffs") {
  NumericOptions twice;
  twice.cutoff_scale = 2.0;
  for (const auto& cs : {CrossSection::circle(2 * kPi), CrossSection::torus(2.0, 3.0),
                         CrossSection::load(ZG_TEST_DATA "/circle_2pi.json")}) {
    for (auto bc : {std::pair{D, D}, std::pair{N, N}, std::pair{R(0.3), R(0.3)}, std::pair{N, R(0.9)}}) {
      const CylinderSpec spec{cs, 1.3, bc.first, bc.second};
      CHECK(std::abs(log_det_cylinder(spec).log_det - log_det_cylinder(spec, twice).log_det) < 1e-9);
    }
  }
}
