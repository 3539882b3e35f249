#include "doctest.h"

#include "htau/errors.hpp"
#include "htau/partition.hpp"

using namespace htau;

namespace {

// Euler's pentagonal-number recurrence.
std::vector<long> partition_numbers(int nmax) {
  std::vector<long> p(static_cast<std::size_t>(nmax) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long sign = k % 2 ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

} // namespace

TEST_CASE("construction and parsing") {
  CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition::parse(" [2, 1] ") == Partition{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({2, 0}), UsageError);
  CHECK_THROWS_AS(Partition::parse("[2,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("[a]"), ParseError);
  CHECK(parse_partition_list("[2],[2,1]") == std::vector<Partition>{{2}, {2, 1}});
  CHECK((Partition{3, 1, 1}).str() == "[3,1,1]");
  CHECK(Partition::identity(3) == Partition{1, 1, 1});
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(6).size() == 11);

  const auto p = partition_numbers(40);
  for (int n = 0; n <= 40; ++n) CHECK(static_cast<long>(enumerate_partitions(n).size()) == p[static_cast<std::size_t>(n)]);

  const auto ps = enumerate_partitions(7);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
}

TEST_CASE("z, colength, hooks, contents") {
  CHECK(z_of({2}) == Rational(2));
  CHECK(z_of({1, 1, 1}) == Rational(6));
  CHECK(z_of({3, 1, 1}) == Rational(6));
  CHECK(colength({1, 1, 1, 1}) == 0);
  CHECK(colength({4}) == 3);
  CHECK(colength({2, 1}) == 1);
  CHECK(hook_product({1}) == Rational(1));
  CHECK(hook_product({2, 1}) == Rational(3));
  CHECK(hook_product({2, 2}) == Rational(12));
  CHECK(contents({1}) == std::vector<int>{0});
  CHECK(contents({2, 1}) == std::vector<int>{0, 1, -1});
  CHECK(contents({3}) == std::vector<int>{0, 1, 2});
  CHECK((Partition{3, 1}).conjugate() == Partition{2, 1, 1});
  CHECK((Partition{2, 2, 1}).multiplicity(2) == 2);
}

TEST_CASE("dimension and class-size identities") {
  for (int n = 0; n <= 8; ++n) {
    const Rational nf = factorial(static_cast<unsigned>(n));
    Rational dims(0), classes(0);
    for (const auto& lam : enumerate_partitions(n)) {
      const Rational dim = nf / hook_product(lam);
      dims += dim * dim;
      classes += nf / z_of(lam);
      CHECK(hook_product(lam) == hook_product(lam.conjugate()));
    }
    CHECK(dims == nf);
    CHECK(classes == nf);
  }
}
