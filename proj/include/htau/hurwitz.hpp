#pragma once

#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"

namespace htau {

/// Sheet count N together with ramification profiles, each a partition of N.
class ProfileTuple {
public:
  /// Throws UsageError if any profile does not have weight n.
  ProfileTuple(int n, std::vector<Partition> profiles);

  int sheets() const noexcept { return n_; }
  const std::vector<Partition>& profiles() const noexcept { return profiles_; }
  std::size_t size() const noexcept { return profiles_.size(); }

  /// d = sum of colengths.
  int total_colength() const;

private:
  int n_;
  std::vector<Partition> profiles_;
};

/// Possibly-disconnected Hurwitz number from the Frobenius-Schur character sum
///   H = sum_{lambda |- N} h(lambda)^{k-2} prod_j chi_lambda(mu^(j)) / z_{mu^(j)}.
/// Requires k >= 1 profiles.
Rational hurwitz_number(const ProfileTuple& pt);

/// Brute-force count of (sigma_1..sigma_k), sigma_i of cycle type mu^(i),
/// with sigma_1 ... sigma_k = id, divided by N!. The last factor is fixed by
/// the others, so only k-1 classes are enumerated. Limited to N <= 5, k <= 4.
Rational hurwitz_oracle(const ProfileTuple& pt);

struct RiemannHurwitzData {
  int d;          // sum of colengths
  int chi;        // 2N - d
  Rational genus; // (2 - chi) / 2, possibly half-integral
};

RiemannHurwitzData riemann_hurwitz(const ProfileTuple& pt);

} // namespace htau
