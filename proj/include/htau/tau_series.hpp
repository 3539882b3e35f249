#pragma once

#include <optional>
#include <span>
#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"
#include "htau/series.hpp"
#include "htau/weights.hpp"

namespace htau {

/// G(c beta) = sum_m g_m c^m beta^m as a formal series truncated at order D.
BetaSeries content_series(std::span<const Rational> g, int content, int order);

/// Content product r_lambda = prod_{(i,j) in lambda} G((j - i) beta), formal in beta.
struct ContentProduct {
  Partition lam;
  BetaSeries series;
};

ContentProduct r_lambda(const WeightGen& g, const Partition& lam, int order);

/// Content product evaluated at a numeric beta. Quantum G needs quantum_terms.
Rational r_lambda_at(const WeightGen& g, const Partition& lam, const Rational& beta,
                     std::optional<int> quantum_terms = std::nullopt);

/// rho_j = beta^j prod_{i=1}^{j} G(i beta) for j >= 0 and
/// rho_{-j} = beta^{-j} prod_{i=1}^{j-1} G(-i beta)^{-1}, evaluated at beta.
/// A vanishing G(-i beta) throws SingularError naming i.
Rational rho(const WeightGen& g, int j, const Rational& beta, std::optional<int> quantum_terms = std::nullopt);

/// rho_j split as beta^exponent times a unit-constant formal series.
struct FormalRho {
  int exponent;
  BetaSeries series;
};

FormalRho rho_formal(const WeightGen& g, int j, int order);

/// Coefficients of beta^e p_mu(t) p_nu(s) in the double Schur series
/// sum_lambda beta^{|lambda|} r_lambda s_lambda(t) s_lambda(s), for
/// |mu| = |nu| <= nmax and |mu| <= e <= |mu| + order.
class TauTable {
public:
  struct Row {
    Partition mu;
    Partition nu;
    int d;
    Rational value;
  };

  TauTable(WeightGen g, int order, int nmax);

  const WeightGen& weight() const noexcept { return g_; }
  int order() const noexcept { return order_; }
  int nmax() const noexcept { return nmax_; }

  /// Coefficient of beta^e p_mu p_nu; lookups outside the stored range are usage errors.
  const Rational& entry(const Partition& mu, const Partition& nu, int e) const;

  /// All stored coefficients in canonical order: weight ascending, mu and nu
  /// in reverse-lexicographic order, d = e - |mu| ascending.
  std::vector<Row> rows() const;

private:
  struct Block {
    std::vector<Partition> parts;
    std::vector<Rational> values; // [mu][nu][d]
  };
  const Block& block_for(int n) const;

  WeightGen g_;
  int order_;
  int nmax_;
  std::vector<Block> blocks_;
};

TauTable tau_double_table(const WeightGen& g, int order, int nmax);

/// H^d_G(mu, nu) read off the table at e = |mu| + d.
Rational extract_H(const TauTable& table, int d, const Partition& mu, const Partition& nu);

/// Coefficients of beta^d p_mu(t) in sum_lambda h(lambda)^{-1} r_lambda s_lambda(t).
class SingleTauTable {
public:
  struct Row {
    Partition mu;
    int d;
    Rational value;
  };

  SingleTauTable(WeightGen g, int order, int nmax);

  int order() const noexcept { return order_; }
  int nmax() const noexcept { return nmax_; }
  const Rational& entry(const Partition& mu, int d) const;
  std::vector<Row> rows() const;

private:
  WeightGen g_;
  int order_;
  int nmax_;
  std::vector<std::vector<Partition>> parts_;
  std::vector<std::vector<Rational>> values_; // [n][mu * (order+1) + d]
};

SingleTauTable tau_single_table(const WeightGen& g, int order, int nmax);

/// Homogeneous parts of tau([X]) = sum_lambda h^{-1} r_lambda(beta) s_lambda(x_1..x_n):
/// element N is the degree-N part, N = 0..nmax.
std::vector<Rational> tau_matrix_degree_parts(const WeightGen& g, const Rational& beta, std::span<const Rational> x,
                                              int nmax, std::optional<int> quantum_terms = std::nullopt);

/// tau([X]) truncated to |lambda| <= nmax, X = diag(x).
Rational tau_eval_at_matrix(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int nmax,
                            std::optional<int> quantum_terms = std::nullopt);

} // namespace htau
