#include "doctest.h"

#include "htau/errors.hpp"
#include "htau/tau_series.hpp"

using namespace htau;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

const WeightGen kRational = WeightGen::rational({Rational(1)}, {Rational(1, 3)});
const WeightGen kQuantum = WeightGen::quantum(Rational(1, 2));

} // namespace

TEST_CASE("content products") {
  const auto g = WeightGen::rational({R("1")}, {});
  CHECK(r_lambda(g, {}, 3).series == BetaSeries::one(3));
  CHECK(r_lambda(g, {1}, 3).series == BetaSeries::one(3));
  CHECK(r_lambda(g, {2}, 3).series == BetaSeries(3, {R("1"), R("1")}));
  for (const auto& lam : enumerate_partitions(4)) CHECK(r_lambda(kQuantum, lam, 4).series[0] == R("1"));
  // r at a number equals the formal series evaluated there when G is a polynomial.
  CHECK(r_lambda(g, {3, 1}, 6).series.eval(R("1/5")) == r_lambda_at(g, {3, 1}, R("1/5")));
}

TEST_CASE("rho") {
  const auto g = WeightGen::rational({R("1")}, {});
  CHECK(rho(g, 0, R("1/2")) == R("1"));
  CHECK(rho(g, -1, R("1/2")) == R("2"));
  CHECK(rho(g, 2, R("1/2")) == R("3/4"));
  CHECK_THROWS_AS(rho(g, -3, R("1")), SingularError); // G(-1) = 0
  for (int j = 1; j <= 6; ++j) {
    const Rational beta = R("2/7");
    CHECK(rho(kRational, j, beta) / (beta * rho(kRational, j - 1, beta)) ==
          evaluate_weight(kRational, Rational(j) * beta));
  }
  const FormalRho f = rho_formal(g, 3, 6);
  CHECK(f.exponent == 3);
  CHECK(pow(R("1/2"), 3) * f.series.eval(R("1/2")) == rho(g, 3, R("1/2")));
}

TEST_CASE("double table") {
  const TauTable t(kRational, 3, 4);
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (const auto& nu : enumerate_partitions(n)) {
        CHECK(t.entry(mu, nu, n) == (mu == nu ? R("1") / z_of(mu) : R("0")));
        for (int d = 0; d <= 3; ++d) CHECK(t.entry(mu, nu, n + d) == t.entry(nu, mu, n + d));
      }
  const TauTable c1(WeightGen::rational({R("1")}, {}), 2, 2);
  CHECK(c1.entry({2}, {1, 1}, 3) == R("1/2"));

  const TauTable triv(WeightGen::trivial(), 3, 3);
  for (const auto& row : triv.rows())
    if (row.d > 0) CHECK(row.value == R("0"));

  CHECK_THROWS_AS(extract_H(t, 4, {2}, {2}), UsageError);
  CHECK_THROWS_AS(t.entry({5}, {5}, 5), UsageError);
  CHECK_THROWS_AS(t.entry({2}, {1}, 2), UsageError);
}

TEST_CASE("table coefficients are weighted Hurwitz numbers") {
  for (const auto& g : {kRational, kQuantum, WeightGen::finite_product({R("2"), R("-1")})}) {
    const TauTable t(g, 3, 4);
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n))
          for (int d = 0; d <= 3; ++d) CHECK(extract_H(t, d, mu, nu) == weighted_hurwitz(g, d, mu, nu));
  }
  const TauTable q(kQuantum, 1, 2);
  CHECK(extract_H(q, 1, {2}, {1, 1}) == weighted_hurwitz(kQuantum, 1, {2}, {1, 1}));
}

TEST_CASE("single table") {
  const SingleTauTable s(kRational, 3, 4);
  const TauTable t(kRational, 3, 4);
  CHECK(s.entry({1, 1}, 0) == R("1/2"));
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for (int d = 0; d <= 3; ++d) CHECK(s.entry(mu, d) == extract_H(t, d, mu, Partition::identity(n)));
  for (const auto& row : SingleTauTable(WeightGen::trivial(), 2, 3).rows())
    if (row.d > 0) CHECK(row.value == R("0"));
}

TEST_CASE("evaluation on a diagonal matrix") {
  const std::vector<Rational> zeros{R("0"), R("0"), R("0")};
  CHECK(tau_eval_at_matrix(kRational, R("1/7"), zeros, 5) == R("1"));

  const std::vector<Rational> x{R("1/3")};
  Rational expect(0), term(1);
  for (int m = 0; m <= 6; ++m) {
    if (m > 0) term *= x[0] / Rational(m);
    expect += term;
  }
  CHECK(tau_eval_at_matrix(WeightGen::trivial(), R("1/2"), x, 6) == expect);

  const std::vector<Rational> tenth{R("1/10")};
  CHECK(tau_eval_at_matrix(WeightGen::rational({R("1")}, {}), R("1"), tenth, 3) == R("1111/1000"));
}
