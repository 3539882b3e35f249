#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htau/rational.hpp"

namespace htau {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
  Partition() = default;

  /// Validates the parts; throws UsageError unless they are positive and
  /// weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (1^n), the cycle type of the identity permutation.
  static Partition identity(int n);

  /// Parses "[3,1,1]" (or "[]"). Parts must already be weakly decreasing.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Number of parts equal to i.
  int multiplicity(int i) const;

  Partition conjugate() const;

  /// "[3,1,1]"; the empty partition is "[]".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; descending order of this comparison is the
  /// canonical reverse-lexicographic enumeration order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partitions of n in reverse-lexicographic order, starting with (n).
std::vector<Partition> enumerate_partitions(int n);

/// Centralizer order prod_i i^{m_i} m_i!.
Rational z_of(const Partition& mu);

/// |mu| - l(mu).
int colength(const Partition& mu);

/// Product of hook lengths.
Rational hook_product(const Partition& lam);

/// Contents j - i of all cells (1-based row i, column j), row by row.
std::vector<int> contents(const Partition& lam);

/// Parses a comma-joined list of bracket groups, e.g. "[2],[2,1]".
std::vector<Partition> parse_partition_list(std::string_view text);

} // namespace htau
