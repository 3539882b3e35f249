#include "doctest.h"

#include "htau/analytic.hpp"
#include "htau/errors.hpp"
#include "htau/tau_series.hpp"

using namespace htau;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

const WeightGen kTrivial = WeightGen::trivial();
const WeightGen kLinear = WeightGen::rational({Rational(1)}, {});
const WeightGen kRational = WeightGen::rational({Rational(1)}, {Rational(1, 3)});

} // namespace

TEST_CASE("basis coefficients") {
  for (const char* b : {"1/3", "1/2", "5/7"})
    for (int k = 1; k <= 6; ++k) {
      const PhiSeries phi = phi_k(kTrivial, R(b), k, 30);
      CHECK(phi.lead_exp() == 1 - k);
      CHECK(check_trivial_closed_form(phi).passed);
      CHECK(phi.coeff(3) == pow(R(b), 1 - k) / R("6"));
    }
  for (const auto& g : {kTrivial, kLinear, kRational}) CHECK(phi_k(g, R("1/7"), 1, 4).coeff(0) == R("1"));
  CHECK(phi_k(kLinear, R("1"), 1, 4).coeff(2) == R("1"));
  CHECK_THROWS_AS(phi_k(kTrivial, R("1/2"), 0, 4), UsageError);
  CHECK_THROWS_AS(phi_k(WeightGen::quantum(R("1/2")), R("1/3"), 1, 4), UsageError);
}

TEST_CASE("negative rho singularities name the vanishing factor") {
  // G(z) = 1 + z vanishes at z = -1, i.e. at i = 3 for beta = 1/3.
  try {
    phi_k(kLinear, R("1/3"), 4, 5);
    FAIL("expected a singular rho");
  } catch (const SingularError& e) {
    CHECK(e.code() == ErrorCode::singular_parameter);
    CHECK(std::string(e.what()).find("i = 3") != std::string::npos);
  }
}

TEST_CASE("Euler operator") {
  CHECK(euler_apply(XSeries::monomial(R("1"), 1)) == XSeries::monomial(R("1"), 1));
  CHECK(euler_apply(XSeries::monomial(R("5"), 0)) == XSeries::monomial(R("0"), 0));
  CHECK(euler_apply(XSeries::monomial(R("1"), -1)) == XSeries::monomial(R("-1"), -1));
}

TEST_CASE("recursion") {
  for (int k = 2; k <= 6; ++k) {
    const auto r = check_recursion(kTrivial, R("1/3"), k, 25);
    CHECK(r.passed);
    CHECK(r.checked_through == 25);
  }
  CHECK(check_recursion(kLinear, R("1/3"), 3, 20).passed);
  CHECK(check_recursion(kRational, R("1/7"), 5, 20).passed);

  const RhoTable rho(kRational, R("1/7"), -3, 20);
  const PhiSeries good = phi_from_rho(rho, 2, 12);
  const PhiSeries bad = phi_from_rho(rho.perturbed(4, R("1/1000")), 3, 12);
  const auto report = check_recursion(bad, good);
  CHECK_FALSE(report.passed);
  CHECK(report.first_failure == 7);
}

TEST_CASE("spectral curve") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(check_spectral(kTrivial, R("1/5"), k, 25).passed);
    CHECK(check_spectral(kRational, R("1/7"), k, 20).passed);
  }
  const auto half = WeightGen::rational({R("1")}, {R("1/2")});
  CHECK(check_spectral(half, R("1/5"), 2, 9).passed);
  // G has a pole at z = 2, reached at m = 10 when beta = 1/5.
  CHECK_THROWS_AS(check_spectral(half, R("1/5"), 2, 15), SingularError);

  const RhoTable rho(kRational, R("1/7"), -2, 20);
  CHECK_FALSE(check_spectral(kRational, phi_from_rho(rho.perturbed(0, R("1")), 2, 12)).passed);

  const auto q = WeightGen::quantum(R("1/2"));
  const auto qr = check_spectral(q, R("2/15"), 3, 10, 60);
  CHECK(qr.passed);
  CHECK(qr.approximate);
  CHECK(check_recursion(q, R("2/15"), 3, 10, 60).passed);
}

TEST_CASE("cleared-denominator equation") {
  CHECK(kappa(WeightGen::rational({R("1")}, {R("1/2")}), R("1")) == R("-2"));
  for (int k = 1; k <= 4; ++k) {
    CHECK(check_rational_ode(kRational, phi_k(kRational, R("1/7"), k, 18)).passed);
    CHECK(check_rational_ode(WeightGen::rational({R("2"), R("-1/3")}, {R("1/5")}), phi_k(WeightGen::rational({R("2"), R("-1/3")}, {R("1/5")}), R("1/11"), k, 12)).passed);
  }
  CHECK_THROWS_AS(check_rational_ode(kTrivial, phi_k(kTrivial, R("1/2"), 1, 3)), UsageError);
}

TEST_CASE("Vandermonde") {
  CHECK(vandermonde(std::vector<Rational>{R("9")}) == R("1"));
  CHECK(vandermonde(std::vector<Rational>{R("2"), R("1")}) == R("1"));
  CHECK(vandermonde(std::vector<Rational>{R("3"), R("1"), R("0")}) == R("6"));
}

TEST_CASE("determinantal representation matches the Schur series") {
  const std::vector<Rational> one{R("1/10")};
  const TauRepresentation t1 = tau_det_rep(kTrivial, R("1/2"), one, 10);
  for (int m = 0; m <= 10; ++m) CHECK(t1.series.coeff(m) == pow(R("1/10"), m) / factorial(static_cast<unsigned>(m)));

  for (const auto& g : {kLinear, kRational}) {
    std::vector<Rational> x;
    for (int n = 1; n <= 3; ++n) {
      x.push_back(Rational(1, 100 * n));
      const TauRepresentation det = tau_det_rep(g, R("1/7"), x, 10);
      CHECK(det.exact_through == 10);
      const auto direct = tau_matrix_degree_parts(g, R("1/7"), x, det.exact_through);
      for (int deg = 0; deg <= det.exact_through; ++deg) CHECK(det.series.coeff(deg) == direct[static_cast<std::size_t>(deg)]);

      const auto cal = calibrate(det_rep_literal(g, R("1/7"), x, 10), R("1/7"));
      REQUIRE(cal);
      CHECK(cal->sign == 1);
      CHECK(cal->beta_exponent == n * kRowCalibrationExponent);
    }
  }
}

TEST_CASE("Wronskian form equals the determinantal form") {
  const std::vector<std::pair<WeightGen, Rational>> cases{
      {kTrivial, R("1/3")}, {kRational, R("1/5")}, {WeightGen::finite_product({R("2"), R("1/2")}), R("1/9")}};
  for (const auto& [g, beta] : cases) {
    std::vector<Rational> x;
    for (int n = 1; n <= 3; ++n) {
      x.push_back(Rational(n, 37));
      const TauRepresentation det = tau_det_rep(g, beta, x, 12);
      const TauRepresentation wr = tau_wronskian(g, beta, x, 12);
      CHECK(wr.exact_through == 12 - n * (n - 1) / 2);
      for (int deg = 0; deg <= wr.exact_through; ++deg) CHECK(det.series.coeff(deg) == wr.series.coeff(deg));
    }
  }
}

TEST_CASE("degenerate evaluation points") {
  const std::vector<Rational> same{R("1/3"), R("1/3")};
  const std::vector<Rational> zero{R("0"), R("1/3")};
  try {
    tau_det_rep(kTrivial, R("1/2"), same, 5);
    FAIL("expected singular input");
  } catch (const SingularError& e) {
    CHECK(e.code() == ErrorCode::singular_input);
  }
  CHECK_THROWS_AS(tau_wronskian(kTrivial, R("1/2"), zero, 5), SingularError);
}
