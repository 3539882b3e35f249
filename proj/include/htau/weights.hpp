#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"

namespace htau {

/// Weight generating function G(z) with G(0) = 1.
///
///   trivial         G = 1
///   finite_product  G = prod_i (1 + c_i z)
///   rational        G = prod_l (1 + c_l z) / prod_m (1 - d_m z)
///   quantum         G = H_q(z) = prod_{i>=0} (1 - q^i z)^{-1} = sum_n z^n / (q;q)_n
class WeightGen {
public:
  struct Trivial {};
  struct FiniteProduct {
    std::vector<Rational> c;
  };
  struct RationalGen {
    std::vector<Rational> c;
    std::vector<Rational> d;
  };
  struct Quantum {
    Rational q;
  };
  using Variant = std::variant<Trivial, FiniteProduct, RationalGen, Quantum>;

  static WeightGen trivial() { return WeightGen(Trivial{}); }
  static WeightGen finite_product(std::vector<Rational> c);
  /// Every d_m must be nonzero.
  static WeightGen rational(std::vector<Rational> c, std::vector<Rational> d);
  /// Requires 0 < |q| < 1.
  static WeightGen quantum(Rational q);

  const Variant& variant() const noexcept { return v_; }
  bool is_trivial() const noexcept { return std::holds_alternative<Trivial>(v_); }
  bool is_quantum() const noexcept { return std::holds_alternative<Quantum>(v_); }

  /// Short human-readable description, e.g. "rational(c=[1], d=[1/3])".
  std::string describe() const;

private:
  explicit WeightGen(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Taylor coefficients g_0 = 1, g_1, ..., g_J of G at 0.
std::vector<Rational> g_coeffs(const WeightGen& g, int max_index);

/// Exact value G(z). The quantum product is truncated to factors i = 0..M and
/// needs quantum_terms = M; other variants ignore it. A pole or an unset M
/// throws.
Rational evaluate_weight(const WeightGen& g, const Rational& z, std::optional<int> quantum_terms = std::nullopt);

/// Strict-index weight
///   W_G = (1/k!) sum_{sigma in S_k} sum_{i_1 < ... < i_k} prod_j c_{i_sigma(j)}^{l*(mu^(j))},
/// zero when fewer than k parameters are given. The empty profile list has weight 1.
Rational weight_factor(std::span<const Rational> c, std::span<const Partition> profiles);

/// Dual weight: non-strict indices i_1 <= ... <= i_k and sign (-1)^{d + k}.
Rational weight_factor_tilde(std::span<const Rational> c, std::span<const Partition> profiles);

/// Closed form of the dual weight for c_i = q^i, i >= 0:
///   (-1)^{d-k}/k! sum_sigma prod_j 1 / (1 - q^{l*(mu^(sigma(1))) + ... + l*(mu^(sigma(j)))}).
/// Throws SingularError when a denominator vanishes (e.g. an identity profile).
Rational quantum_weight_factor(const Rational& q, std::span<const Partition> profiles);

/// Rational-family weight: strict sum over c for the first block, non-strict
/// sum over d with sign (-1)^{sum l*(nu^(j)) - l} for the second block.
Rational rational_weight_factor(std::span<const Rational> c, std::span<const Rational> d,
                                std::span<const Partition> mu_profiles, std::span<const Partition> nu_profiles);

/// One contributing configuration of additional branch points. Blocks are
/// listed as a canonical multiset; `arrangements` counts the distinct ordered
/// tuples it represents.
struct WeightedTerm {
  std::vector<Partition> c_block;
  std::vector<Partition> d_block;
  long arrangements = 1;
  Rational weight;
  Rational hurwitz;
};

struct WeightedCount {
  int d = 0;
  Partition mu;
  Partition nu;
  Rational value;
  std::vector<WeightedTerm> terms;
};

/// Weighted double Hurwitz number H^d_G(mu, nu): sum over ordered tuples of
/// non-identity profiles with total colength d of weight times the Hurwitz
/// number of (profiles..., mu, nu). d = 0 gives the two-point number.
Rational weighted_hurwitz(const WeightGen& g, int d, const Partition& mu, const Partition& nu);

/// Same value, with the contributing terms listed.
WeightedCount weighted_hurwitz_detailed(const WeightGen& g, int d, const Partition& mu, const Partition& nu);

/// Slow reference that enumerates every ordered profile tuple (and both
/// ordered blocks for the rational family) without multiset grouping.
Rational weighted_hurwitz_reference(const WeightGen& g, int d, const Partition& mu, const Partition& nu);

} // namespace htau
