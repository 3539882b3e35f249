#include "htau/tau_series.hpp"

#include <cstdlib>

#include "htau/characters.hpp"
#include "htau/errors.hpp"

namespace htau {

BetaSeries content_series(std::span<const Rational> g, int content, int order) {
  BetaSeries s(order);
  Rational cm(1);
  const Rational c(content);
  for (int m = 0; m <= order && m < static_cast<int>(g.size()); ++m) {
    s[m] = g[static_cast<std::size_t>(m)] * cm;
    cm *= c;
  }
  return s;
}

ContentProduct r_lambda(const WeightGen& g, const Partition& lam, int order) {
  const auto coeffs = g_coeffs(g, order);
  BetaSeries s = BetaSeries::one(order);
  for (int c : contents(lam)) {
    if (c == 0) continue; // G(0) = 1
    s *= content_series(coeffs, c, order);
  }
  return {lam, std::move(s)};
}

Rational r_lambda_at(const WeightGen& g, const Partition& lam, const Rational& beta,
                     std::optional<int> quantum_terms) {
  Rational v(1);
  for (int c : contents(lam)) {
    if (c == 0) continue;
    v *= evaluate_weight(g, Rational(c) * beta, quantum_terms);
    if (v.is_zero()) break;
  }
  return v;
}

Rational rho(const WeightGen& g, int j, const Rational& beta, std::optional<int> quantum_terms) {
  if (beta.is_zero()) throw UsageError("rho: beta must be nonzero");
  if (j >= 0) {
    Rational v = pow(beta, j);
    for (int i = 1; i <= j; ++i) v *= evaluate_weight(g, Rational(i) * beta, quantum_terms);
    return v;
  }
  const int m = -j;
  Rational v = pow(beta, -m);
  for (int i = 1; i <= m - 1; ++i) {
    const Rational gi = evaluate_weight(g, Rational(-i) * beta, quantum_terms);
    if (gi.is_zero()) {
      throw SingularError(ErrorCode::singular_parameter, "rho_" + std::to_string(j) + ": G(-" + std::to_string(i) +
                                                             " beta) vanishes at beta = " + beta.str() +
                                                             " (i = " + std::to_string(i) + ")");
    }
    v /= gi;
  }
  return v;
}

FormalRho rho_formal(const WeightGen& g, int j, int order) {
  const auto coeffs = g_coeffs(g, order);
  BetaSeries s = BetaSeries::one(order);
  if (j >= 0) {
    for (int i = 1; i <= j; ++i) s *= content_series(coeffs, i, order);
    return {j, std::move(s)};
  }
  for (int i = 1; i <= -j - 1; ++i) s *= series_inv(content_series(coeffs, -i, order));
  return {j, std::move(s)};
}

TauTable::TauTable(WeightGen g, int order, int nmax) : g_(std::move(g)), order_(order), nmax_(nmax) {
  if (order < 0 || nmax < 0) throw UsageError("tau table: order and nmax must be non-negative");
  const std::size_t width = static_cast<std::size_t>(order) + 1;
  for (int n = 0; n <= nmax; ++n) {
    const auto table = character_table(n);
    const std::size_t m = table->size();
    Block block{table->partitions(), std::vector<Rational>(m * m * width)};
    for (std::size_t lam = 0; lam < m; ++lam) {
      const BetaSeries r = r_lambda(g_, table->partitions()[lam], order).series;
      for (std::size_t mu = 0; mu < m; ++mu) {
        const std::int64_t a = (*table)(lam, mu);
        if (a == 0) continue;
        for (std::size_t nu = 0; nu < m; ++nu) {
          const std::int64_t b = (*table)(lam, nu);
          if (b == 0) continue;
          const Rational chi(static_cast<long>(a * b));
          for (std::size_t d = 0; d < width; ++d) {
            if (r[static_cast<int>(d)].is_zero()) continue;
            block.values[(mu * m + nu) * width + d] += chi * r[static_cast<int>(d)];
          }
        }
      }
    }
    for (std::size_t mu = 0; mu < m; ++mu) {
      for (std::size_t nu = 0; nu < m; ++nu) {
        const Rational zz = table->z(mu) * table->z(nu);
        for (std::size_t d = 0; d < width; ++d) block.values[(mu * m + nu) * width + d] /= zz;
      }
    }
    blocks_.push_back(std::move(block));
  }
}

const TauTable::Block& TauTable::block_for(int n) const {
  if (n < 0 || n > nmax_) {
    throw UsageError("tau table lookup: weight " + std::to_string(n) + " outside 0.." + std::to_string(nmax_));
  }
  return blocks_[static_cast<std::size_t>(n)];
}

const Rational& TauTable::entry(const Partition& mu, const Partition& nu, int e) const {
  if (mu.weight() != nu.weight()) throw UsageError("tau table lookup: |mu| != |nu|");
  const Block& b = block_for(mu.weight());
  const int d = e - mu.weight();
  if (d < 0 || d > order_) {
    throw UsageError("tau table lookup: beta exponent " + std::to_string(e) + " outside the truncation range " +
                     std::to_string(mu.weight()) + ".." + std::to_string(mu.weight() + order_));
  }
  const auto idx = [&](const Partition& p) {
    for (std::size_t i = 0; i < b.parts.size(); ++i)
      if (b.parts[i] == p) return i;
    throw UsageError("tau table lookup: unknown partition " + p.str());
  };
  const std::size_t m = b.parts.size();
  const std::size_t width = static_cast<std::size_t>(order_) + 1;
  return b.values[(idx(mu) * m + idx(nu)) * width + static_cast<std::size_t>(d)];
}

std::vector<TauTable::Row> TauTable::rows() const {
  std::vector<Row> out;
  const std::size_t width = static_cast<std::size_t>(order_) + 1;
  for (const Block& b : blocks_) {
    const std::size_t m = b.parts.size();
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = 0; nu < m; ++nu)
        for (std::size_t d = 0; d < width; ++d)
          out.push_back(Row{b.parts[mu], b.parts[nu], static_cast<int>(d), b.values[(mu * m + nu) * width + d]});
  }
  return out;
}

TauTable tau_double_table(const WeightGen& g, int order, int nmax) { return TauTable(g, order, nmax); }

Rational extract_H(const TauTable& table, int d, const Partition& mu, const Partition& nu) {
  if (d < 0 || d > table.order()) {
    throw UsageError("extract_H: d = " + std::to_string(d) + " outside 0.." + std::to_string(table.order()));
  }
  return table.entry(mu, nu, mu.weight() + d);
}

SingleTauTable::SingleTauTable(WeightGen g, int order, int nmax) : g_(std::move(g)), order_(order), nmax_(nmax) {
  if (order < 0 || nmax < 0) throw UsageError("single tau table: order and nmax must be non-negative");
  const std::size_t width = static_cast<std::size_t>(order) + 1;
  for (int n = 0; n <= nmax; ++n) {
    const auto table = character_table(n);
    const std::size_t m = table->size();
    std::vector<Rational> values(m * width);
    for (std::size_t lam = 0; lam < m; ++lam) {
      const BetaSeries r = r_lambda(g_, table->partitions()[lam], order).series;
      const Rational inv_h = Rational(1) / table->hook(lam);
      for (std::size_t mu = 0; mu < m; ++mu) {
        const std::int64_t a = (*table)(lam, mu);
        if (a == 0) continue;
        const Rational f = inv_h * Rational(static_cast<long>(a)) / table->z(mu);
        for (std::size_t d = 0; d < width; ++d) values[mu * width + d] += f * r[static_cast<int>(d)];
      }
    }
    parts_.push_back(table->partitions());
    values_.push_back(std::move(values));
  }
}

const Rational& SingleTauTable::entry(const Partition& mu, int d) const {
  const int n = mu.weight();
  if (n > nmax_) throw UsageError("single tau table lookup: |mu| exceeds nmax");
  if (d < 0 || d > order_) throw UsageError("single tau table lookup: d outside 0.." + std::to_string(order_));
  const auto& parts = parts_[static_cast<std::size_t>(n)];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == mu) {
      return values_[static_cast<std::size_t>(n)][i * (static_cast<std::size_t>(order_) + 1) + static_cast<std::size_t>(d)];
    }
  }
  throw UsageError("single tau table lookup: unknown partition " + mu.str());
}

std::vector<SingleTauTable::Row> SingleTauTable::rows() const {
  std::vector<Row> out;
  const std::size_t width = static_cast<std::size_t>(order_) + 1;
  for (std::size_t n = 0; n < parts_.size(); ++n)
    for (std::size_t mu = 0; mu < parts_[n].size(); ++mu)
      for (std::size_t d = 0; d < width; ++d)
        out.push_back(Row{parts_[n][mu], static_cast<int>(d), values_[n][mu * width + d]});
  return out;
}

SingleTauTable tau_single_table(const WeightGen& g, int order, int nmax) { return SingleTauTable(g, order, nmax); }

std::vector<Rational> tau_matrix_degree_parts(const WeightGen& g, const Rational& beta, std::span<const Rational> x,
                                              int nmax, std::optional<int> quantum_terms) {
  if (nmax < 0) throw UsageError("tau_eval_at_matrix: nmax must be non-negative");
  // power sums p_j = sum_i x_i^j
  std::vector<Rational> p(static_cast<std::size_t>(nmax) + 1, Rational(0));
  for (int j = 1; j <= nmax; ++j)
    for (const auto& xi : x) p[static_cast<std::size_t>(j)] += pow(xi, j);

  std::vector<Rational> parts;
  for (int n = 0; n <= nmax; ++n) {
    const auto table = character_table(n);
    const std::size_t m = table->size();
    std::vector<Rational> p_over_z(m);
    for (std::size_t mu = 0; mu < m; ++mu) {
      Rational pm(1);
      for (int part : table->partitions()[mu].parts()) pm *= p[static_cast<std::size_t>(part)];
      p_over_z[mu] = pm / table->z(mu);
    }
    Rational total(0);
    for (std::size_t lam = 0; lam < m; ++lam) {
      const Partition& shape = table->partitions()[lam];
      // s_lambda vanishes on fewer than l(lambda) variables.
      if (shape.length() > static_cast<int>(x.size())) continue;
      Rational schur(0);
      for (std::size_t mu = 0; mu < m; ++mu) {
        const std::int64_t chi = (*table)(lam, mu);
        if (chi != 0) schur += Rational(static_cast<long>(chi)) * p_over_z[mu];
      }
      if (schur.is_zero()) continue;
      total += r_lambda_at(g, shape, beta, quantum_terms) * schur / table->hook(lam);
    }
    parts.push_back(std::move(total));
  }
  return parts;
}

Rational tau_eval_at_matrix(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int nmax,
                            std::optional<int> quantum_terms) {
  Rational sum(0);
  for (const auto& part : tau_matrix_degree_parts(g, beta, x, nmax, quantum_terms)) sum += part;
  return sum;
}

} // namespace htau
