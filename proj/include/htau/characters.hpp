#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"

namespace htau {

/// Irreducible character chi_lambda(mu) of S_n by Murnaghan-Nakayama
/// border-strip removal, memoized per thread on (lambda, remaining mu parts).
/// Throws UsageError when |lambda| != |mu|.
std::int64_t character(const Partition& lam, const Partition& mu);

/// Full character table of S_n, rows lambda and columns mu, both in canonical
/// (reverse-lexicographic) order.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return partitions_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }

  /// Position of a partition of n in canonical order.
  std::size_t index_of(const Partition& p) const;

  std::int64_t operator()(std::size_t lam, std::size_t mu) const { return values_[lam * size() + mu]; }
  std::int64_t value(const Partition& lam, const Partition& mu) const { return (*this)(index_of(lam), index_of(mu)); }

  /// z_mu and h(lambda) for the partition at the given canonical index.
  const Rational& z(std::size_t i) const { return z_[i]; }
  const Rational& hook(std::size_t i) const { return hooks_[i]; }

private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::int64_t> values_;
  std::vector<Rational> z_;
  std::vector<Rational> hooks_;
};

/// Shared immutable table for S_n, built once per thread on first use.
std::shared_ptr<const CharacterTable> character_table(int n);

/// Coefficients of s_lambda in the power-sum basis: mu -> chi_lambda(mu)/z_mu,
/// iterated in canonical order.
using PowerSumExpansion = std::map<Partition, Rational, std::greater<>>;
PowerSumExpansion schur_in_powersums(const Partition& lam);

/// Independent character computation for |lambda| = |mu| <= 6: solves
/// p_mu = sum_lambda c_lambda s_lambda exactly, with Schur polynomials in n
/// variables evaluated at integer sample points as ratios of alternants.
/// Throws ScaleGuardError above weight 6.
std::int64_t character_oracle(const Partition& lam, const Partition& mu);

} // namespace htau
