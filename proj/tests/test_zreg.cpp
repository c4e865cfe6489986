#include <doctest.h>

#include <cmath>

#include "zetaglue/error.hpp"
#include "zetaglue/special.hpp"
#include "zetaglue/zreg.hpp"

using namespace zg;

namespace {

const CrossSection& circle_mirror() {
  static const CrossSection cs = CrossSection::load(ZG_TEST_DATA "/circle_2pi.json");
  return cs;
}

// Kronecker limit formula: Det* on the flat torus l1 x l2 equals l2^2 |eta(i l2/l1)|^4.
double kronecker_log_det(double l1, double l2) {
  const double y = l2 / l1;
  double log_eta = -kPi * y / 12.0;
  for (int n = 1; n < 200; ++n) log_eta += std::log1p(-std::exp(-2.0 * kPi * n * y));
  return 2.0 * std::log(l2) + 4.0 * log_eta;
}

}  // namespace

TEST_CASE("circle zeta values") {
  const auto cs = CrossSection::circle(2 * kPi);
  auto z = zeta_point(cs, 0.0);
  CHECK(z.value == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(z.residue == 0.0);
  CHECK(zeta_point(cs, 0.0, true).value == doctest::Approx(0.0).epsilon(1e-15));
  for (double ell : {1.0, 2 * kPi, 9.5}) {
    const auto c = CrossSection::circle(ell);
    for (auto be : {ZetaBackend::ClosedForm, ZetaBackend::Numeric}) {
      z = zeta_point(c, -0.5, false, {}, be);
      CHECK(z.residue == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(std::abs(z.value + kPi / (3.0 * ell)) < 1e-10);
      z = zeta_point(c, 0.5, false, {}, be);
      CHECK(std::abs(z.residue - ell / (2.0 * kPi)) < 1e-10);
      CHECK(std::abs(z.value - 2.0 * ell / (2.0 * kPi) * (kEulerGamma - std::log(2.0 * kPi / ell))) < 1e-10);
    }
  }
}

TEST_CASE("zeta agrees with the convergent sum right of the abscissa") {
  const auto c = CrossSection::circle(3.0);
  double direct = 0.0;
  for (int k = 1; k < 200000; ++k) direct += 2.0 * std::pow(2.0 * kPi * k / 3.0, -3.0);
  for (auto be : {ZetaBackend::ClosedForm, ZetaBackend::Numeric})
    CHECK(std::abs(zeta_point(c, 1.5, false, {}, be).value - direct) < 1e-10);

  const auto t = CrossSection::torus(2.0, 3.0);
  double tdirect = 0.0;
  for (const auto& e : enumerate_spectrum(t, 4e4))
    if (e.eigenvalue > 0) tdirect += e.multiplicity * std::pow(e.eigenvalue, -3.0);
  tdirect += 6.0 / (4.0 * kPi) / (2.0 * 4e4 * 4e4);  // Weyl estimate of the remainder
  for (auto be : {ZetaBackend::ClosedForm, ZetaBackend::Numeric})
    CHECK(std::abs(zeta_point(t, 3.0, false, {}, be).value - tdirect) < 1e-10);
}

TEST_CASE("Det* of the circle and the explicit mirror") {
  for (double ell : {0.5, 1.0, 2 * kPi, 20.0}) {
    const auto c = CrossSection::circle(ell);
    CHECK(std::abs(log_det_star(c).log_modulus - 2.0 * std::log(ell)) < 1e-12);
    CHECK(std::abs(log_det_star(c, {}, ZetaBackend::Numeric).log_modulus - 2.0 * std::log(ell)) < 1e-9);
  }
  CHECK(log_det_star(CrossSection::point()).log_modulus == 0.0);
  const auto d = log_det_star(circle_mirror());
  CHECK(std::abs(d.log_modulus - 2.0 * std::log(2 * kPi)) < 1e-8);
  CHECK(d.excluded_zero_modes == 1);
  const auto z = zeta_point(circle_mirror(), -0.5);
  CHECK(std::abs(z.value + 1.0 / 6.0) < 1e-8);
}

TEST_CASE("Det* of the flat torus against the Kronecker limit formula") {
  for (auto [l1, l2] : {std::pair{2 * kPi, 2 * kPi}, std::pair{2 * kPi, 3.0}, std::pair{1.0, 4.5}}) {
    const auto t = CrossSection::torus(l1, l2);
    const double ref = kronecker_log_det(l1, l2);
    CHECK(std::abs(log_det_star(t).log_modulus - ref) < 1e-11);
    CHECK(std::abs(log_det_star(t, {}, ZetaBackend::Numeric).log_modulus - ref) < 1e-9);
    CHECK(zeta_point(t, 0.0).value == doctest::Approx(-1.0).epsilon(1e-12));
  }
  const auto mirror = CrossSection::load(ZG_TEST_DATA "/torus_2pi.json");
  CHECK(std::abs(log_det_star(mirror).log_modulus - kronecker_log_det(2 * kPi, 2 * kPi)) < 1e-8);
}

TEST_CASE("Mellin split independence") {
  const auto c = CrossSection::circle(2 * kPi);
  for (double T : {0.02, 0.05, 0.1}) {
    NumericOptions o;
    o.mellin_split = T;
    CHECK(std::abs(log_det_star(c, o, ZetaBackend::Numeric).log_modulus - 2.0 * std::log(2 * kPi)) < 1e-10);
    CHECK(std::abs(log_det_star(circle_mirror(), o).log_modulus - 2.0 * std::log(2 * kPi)) < 1e-9);
    CHECK(std::abs(zeta_point(circle_mirror(), -0.5, false, o).value + 1.0 / 6.0) < 1e-9);
  }
  // With T = 1 the model side misses e^{-pi^2} effects; the error is visible.
  NumericOptions far;
  far.mellin_split = 1.0;
  CHECK(std::abs(log_det_star(circle_mirror(), far).log_modulus - 2.0 * std::log(2 * kPi)) > 1e-6);
}

TEST_CASE("shifted determinants") {
  CHECK(log_det_shifted(CrossSection::point(), 2.0).log_modulus == doctest::Approx(std::log(2.0)));
  const auto p = log_det_shifted(CrossSection::point(), 1e-8);
  CHECK(std::abs(p.log_modulus - std::log(1e-8)) < 1e-6);
  const auto pn = log_det_shifted(CrossSection::point(), -3.0);
  CHECK(pn.phase_multiple % 2 != 0);

  const auto c = CrossSection::circle(2 * kPi);
  CHECK(std::abs(log_det_shifted(c, 1.0).log_modulus - std::log(2 * kPi)) < 1e-12);
  // ln Det = ln a - 2 ln Gamma(1 + a) + ln 2 pi on the unit-radius circle.
  for (double a : {0.3, 2.5}) {
    CHECK(std::abs(log_det_shifted(c, a).log_modulus - (std::log(a) - 2.0 * log_gamma(1.0 + a) + std::log(2 * kPi))) <
          1e-12);
  }
}

TEST_CASE("shifted determinants: numeric backends agree with closed forms") {
  for (double ell : {2 * kPi, 3.0}) {
    const auto c = CrossSection::circle(ell);
    for (double a : {0.3, -0.3, 0.9, 2.5, -2.7, 7.1}) {
      const auto closed = log_det_shifted(c, a);
      const auto numeric = log_det_shifted(c, a, {}, ZetaBackend::Numeric);
      CHECK(std::abs(closed.log_modulus - numeric.log_modulus) < 1e-8);
      CHECK((closed.phase_multiple - numeric.phase_multiple) % 2 == 0);
    }
  }
  for (double a : {0.3, -0.5, 1.7}) {
    const auto closed = log_det_shifted(CrossSection::circle(2 * kPi), a);
    const auto mirror = log_det_shifted(circle_mirror(), a);
    CHECK(std::abs(closed.log_modulus - mirror.log_modulus) < 1e-8);
  }
}

TEST_CASE("shifted determinants on the torus: closed and numeric agree") {
  const auto t = CrossSection::torus(2 * kPi, 3.0);
  for (double a : {0.3, -0.4, 1.9}) {
    const auto closed = log_det_shifted(t, a);
    const auto numeric = log_det_shifted(t, a, {}, ZetaBackend::Numeric);
    CHECK(std::abs(closed.log_modulus - numeric.log_modulus) < 1e-8);
  }
}

TEST_CASE("positive-part shift at zero is half of ln Det*") {
  const auto t = CrossSection::torus(2 * kPi, 3.0);
  CHECK(std::abs(log_det_shifted_positive(t, 0.0).log_modulus - 0.5 * log_det_star(t).log_modulus) < 1e-13);
  const auto c = CrossSection::circle(2 * kPi);
  CHECK(std::abs(log_det_shifted_positive(c, 0.0).log_modulus - std::log(2 * kPi)) < 1e-12);
  // Continuity through zero.
  CHECK(std::abs(log_det_shifted_positive(t, 1e-7).log_modulus - 0.5 * log_det_star(t).log_modulus) < 1e-5);
}

TEST_CASE("singular shifts") {
  CHECK_THROWS_AS(log_det_shifted(CrossSection::point(), 0.0), Error);
  try {
    log_det_shifted(CrossSection::circle(6.2831853), -1.0);
    FAIL("expected singular shift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
  }
  CHECK_THROWS_AS(log_det_shifted(CrossSection::torus(2 * kPi, 2 * kPi), -std::sqrt(2.0)), Error);
}

TEST_CASE("include_zero is rejected away from s = 0") {
  CHECK_THROWS_AS(zeta_point(CrossSection::circle(1.0), 0.5, true), Error);
}
