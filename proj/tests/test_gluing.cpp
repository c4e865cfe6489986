#include <doctest.h>

#include <cmath>

#include "zetaglue/cylinder.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/gluing.hpp"
#include "zetaglue/special.hpp"

using namespace zg;

TEST_CASE("correction matrices") {
  const auto circle = CrossSection::circle(2 * kPi);
  auto m = correction_matrices({circle, 2.0, 0.5, 0.0}, GluingKind::Neumann);
  CHECK(m.q0 == 1);
  CHECK(m.log_det_C == doctest::Approx(-kLn2).epsilon(1e-15));
  CHECK(m.log_det_S1 == doctest::Approx(kLn2).epsilon(1e-15));
  m = correction_matrices({circle, 2.0, 0.5, 1.0}, GluingKind::Robin);
  CHECK(m.log_det_AAt == 0.0);
  CHECK_THROWS_AS(correction_matrices({circle, 2.0, 0.5, 0.0}, GluingKind::Robin), Error);
}

TEST_CASE("Neumann gluing on the circle") {
  const auto circle = CrossSection::circle(2 * kPi);
  const auto g = glue_neumann_check({circle, 2.0, 0.7});
  CHECK(g.residual < 1e-8);
  CHECK(g.phase_match);
  CHECK(g.rhs_terms[0].value == 0.0);
  // a0 - ln det C + ln det S1 + ln det S2 = -ln 2 (zeta(0) + q0) + q0 ln(L / (a (L - a))).
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += g.rhs_terms[i].value;
  CHECK(std::abs(sum - std::log(2.0 / (0.7 * 1.3))) < 1e-15);
  for (double L : {1.0, 2.0, 4.0})
    for (double f : {0.2, 0.5, 0.8}) CHECK(glue_neumann_check({circle, L, f * L}).residual < 1e-8);
}

TEST_CASE("Robin gluing on the circle") {
  const auto circle = CrossSection::circle(2 * kPi);
  for (double L : {1.0, 2.0, 4.0})
    for (double f : {0.2, 0.5, 0.8})
      for (double a : {0.1, 0.3, 0.9}) {
        const auto g = glue_robin_check({circle, L, f * L, a});
        CHECK(g.residual < 1e-8);
        CHECK(g.phase_match);
      }
  for (double cut : {0.3, 0.7, 1.5}) CHECK(glue_robin_check({circle, 2.0, cut, 0.3}).residual < 1e-8);
}

TEST_CASE("Robin gluing symmetry") {
  const auto circle = CrossSection::circle(2 * kPi);
  const auto g = glue_robin_check({circle, 2.0, 0.7, 0.3});
  const auto h = glue_robin_check({circle, 2.0, 1.3, -0.3});
  CHECK(std::abs(g.lhs - h.lhs) < 1e-13);
  CHECK(std::abs(g.rhs - h.rhs) < 1e-12);
}

TEST_CASE("gluing on the torus and on stored spectra") {
  const auto torus = CrossSection::torus(2 * kPi, 2 * kPi);
  for (double a : {0.3, -0.6, 1.7}) {
    const auto g = glue_robin_check({torus, 2.0, 0.7, a});
    CHECK(g.residual < 1e-8);
    CHECK(g.phase_match);
  }
  CHECK(glue_neumann_check({torus, 2.0, 0.7}).residual < 1e-8);
  CHECK(glue_neumann_check({CrossSection::torus(1.0, 2.5), 1.0, 0.4}).residual < 1e-8);
  const auto mirror = CrossSection::load(ZG_TEST_DATA "/circle_2pi.json");
  CHECK(glue_robin_check({mirror, 2.0, 0.7, 0.3}).residual < 1e-8);
  CHECK(glue_neumann_check({mirror, 2.0, 0.7}).residual < 1e-8);
}

TEST_CASE("Neumann series matches the alpha -> 0 Robin series") {
  const auto circle = CrossSection::circle(2 * kPi);
  const double neu = bose_series(circle, SeriesForm::neumann_pair(2.0, 0.7)).value;
  const double rob = bose_series(circle, SeriesForm::robin_pair(2.0, 0.7, 1e-9)).value;
  CHECK(std::abs(neu - rob) < 1e-8);
}

TEST_CASE("gluing rejects inadmissible configurations") {
  const auto circle = CrossSection::circle(2 * kPi);
  CHECK_THROWS_AS(glue_robin_check({circle, 2.0, 0.7, 1.0}), Error);
  CHECK_THROWS_AS(glue_robin_check({circle, 2.0, 0.7, 0.0}), Error);
  CHECK_THROWS_AS(glue_neumann_check({circle, 2.0, 2.5}), Error);
  CHECK_THROWS_AS(glue_neumann_check({circle, 2.0, 0.7, 0.5}), Error);
}
