#include "htau/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "htau/characters.hpp"
#include "htau/errors.hpp"

namespace htau {

ProfileTuple::ProfileTuple(int n, std::vector<Partition> profiles) : n_(n), profiles_(std::move(profiles)) {
  if (n < 0) throw UsageError("sheet count must be non-negative");
  for (const auto& p : profiles_) {
    if (p.weight() != n) {
      throw UsageError("profile " + p.str() + " has weight " + std::to_string(p.weight()) + ", expected N = " +
                       std::to_string(n));
    }
  }
}

int ProfileTuple::total_colength() const {
  int d = 0;
  for (const auto& p : profiles_) d += colength(p);
  return d;
}

Rational hurwitz_number(const ProfileTuple& pt) {
  if (pt.size() == 0) throw UsageError("hurwitz_number needs at least one profile");
  const auto table = character_table(pt.sheets());
  std::vector<std::size_t> cols;
  Rational inv_z(1);
  for (const auto& p : pt.profiles()) {
    cols.push_back(table->index_of(p));
    inv_z /= table->z(cols.back());
  }
  const long k = static_cast<long>(pt.size());
  Rational sum(0);
  for (std::size_t lam = 0; lam < table->size(); ++lam) {
    Rational chi_prod(1);
    for (std::size_t c : cols) {
      const std::int64_t v = (*table)(lam, c);
      if (v == 0) {
        chi_prod = Rational(0);
        break;
      }
      chi_prod *= Rational(static_cast<long>(v));
    }
    if (chi_prod.is_zero()) continue;
    sum += pow(table->hook(lam), k - 2) * chi_prod;
  }
  return sum * inv_z;
}

namespace {

constexpr int kOracleMaxSheets = 5;
constexpr std::size_t kOracleMaxProfiles = 4;

using Perm = std::array<std::uint8_t, kOracleMaxSheets>;

Partition cycle_type(const Perm& p, int n) {
  std::array<bool, kOracleMaxSheets> seen{};
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Perm compose(const Perm& a, const Perm& b, int n) {
  Perm r{};
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
  return r;
}

// All permutations of {0..n-1}, grouped by cycle type.
std::map<Partition, std::vector<Perm>> conjugacy_classes(int n) {
  std::map<Partition, std::vector<Perm>> classes;
  Perm p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
  do {
    classes[cycle_type(p, n)].push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return classes;
}

} // namespace

Rational hurwitz_oracle(const ProfileTuple& pt) {
  const int n = pt.sheets();
  const std::size_t k = pt.size();
  if (n > kOracleMaxSheets || k > kOracleMaxProfiles) {
    throw ScaleGuardError("hurwitz_oracle: limited to N <= 5 and k <= 4 (got N = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
  }
  if (k == 0) throw UsageError("hurwitz_oracle needs at least one profile");
  const auto classes = conjugacy_classes(n);
  const auto& profiles = pt.profiles();

  Perm id{};
  std::iota(id.begin(), id.begin() + n, std::uint8_t{0});

  // sigma_k = (sigma_1 ... sigma_{k-1})^{-1} has the cycle type of the product.
  long count = 0;
  auto recurse = [&](auto&& self, std::size_t depth, const Perm& acc) -> void {
    if (depth + 1 == k) {
      if (cycle_type(acc, n) == profiles[depth]) ++count;
      return;
    }
    for (const Perm& s : classes.at(profiles[depth])) self(self, depth + 1, compose(acc, s, n));
  };
  recurse(recurse, 0, id);
  return Rational(count) / factorial(static_cast<unsigned>(n));
}

RiemannHurwitzData riemann_hurwitz(const ProfileTuple& pt) {
  const int d = pt.total_colength();
  const int chi = 2 * pt.sheets() - d;
  return {d, chi, Rational(2 - chi) / Rational(2)};
}

} // namespace htau
