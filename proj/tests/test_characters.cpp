#include "doctest.h"

#include "htau/characters.hpp"
#include "htau/errors.hpp"

using namespace htau;

TEST_CASE("named characters") {
  for (const auto& mu : enumerate_partitions(5)) CHECK(character({5}, mu) == 1);
  CHECK(character({1, 1, 1}, {2, 1}) == -1);
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK(character({2, 1}, {3}) == -1);
  CHECK(character({}, {}) == 1);
  CHECK_THROWS_AS(character({2}, {1}), UsageError);
}

TEST_CASE("orthogonality and dimensions") {
  for (int n = 0; n <= 8; ++n) {
    const auto table = character_table(n);
    const std::size_t m = table->size();
    const Rational nf = factorial(static_cast<unsigned>(n));
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(Rational(static_cast<long>((*table)(a, m - 1))) == nf / table->hook(a));
      for (std::size_t b = 0; b < m; ++b) {
        Rational rows(0);
        long cols = 0;
        for (std::size_t k = 0; k < m; ++k) {
          rows += Rational(static_cast<long>((*table)(a, k) * (*table)(b, k))) / table->z(k);
          cols += (*table)(k, a) * (*table)(k, b);
        }
        CHECK(rows == Rational(a == b ? 1 : 0));
        CHECK(Rational(cols) == (a == b ? table->z(a) : Rational(0)));
      }
    }
  }
}

TEST_CASE("table agrees with the pointwise character") {
  const auto table = character_table(6);
  for (const auto& lam : table->partitions())
    for (const auto& mu : table->partitions()) CHECK(table->value(lam, mu) == character(lam, mu));
}

TEST_CASE("schur functions in power sums") {
  CHECK(schur_in_powersums({1}) == PowerSumExpansion{{Partition{1}, Rational(1)}});
  CHECK(schur_in_powersums({2}) == PowerSumExpansion{{Partition{2}, Rational(1, 2)}, {Partition{1, 1}, Rational(1, 2)}});
  CHECK(schur_in_powersums({1, 1}) ==
        PowerSumExpansion{{Partition{2}, Rational(-1, 2)}, {Partition{1, 1}, Rational(1, 2)}});
}

TEST_CASE("border-strip rule matches the alternant oracle") {
  CHECK(character_oracle({2, 1}, {3}) == -1);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n)) CHECK(character_oracle(lam, mu) == character(lam, mu));
  CHECK_THROWS_AS(character_oracle({7}, {7}), ScaleGuardError);
}
