#include "htau/weights.hpp"

#include <algorithm>
#include <map>

#include "htau/errors.hpp"
#include "htau/hurwitz.hpp"
#include "htau/series.hpp"

namespace htau {

namespace {

std::string list_str(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

} // namespace

WeightGen WeightGen::finite_product(std::vector<Rational> c) { return WeightGen(FiniteProduct{std::move(c)}); }

WeightGen WeightGen::rational(std::vector<Rational> c, std::vector<Rational> d) {
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d[m].is_zero()) throw UsageError("rational weight: d_" + std::to_string(m + 1) + " must be nonzero");
  }
  return WeightGen(RationalGen{std::move(c), std::move(d)});
}

WeightGen WeightGen::quantum(Rational q) {
  if (q.is_zero() || abs(q) >= Rational(1)) {
    throw UsageError("quantum weight requires 0 < |q| < 1, got q = " + q.str());
  }
  return WeightGen(Quantum{std::move(q)});
}

std::string WeightGen::describe() const {
  return std::visit(Overloaded{
                        [](const Trivial&) { return std::string("trivial"); },
                        [](const FiniteProduct& f) { return "product(c=" + list_str(f.c) + ")"; },
                        [](const RationalGen& r) { return "rational(c=" + list_str(r.c) + ", d=" + list_str(r.d) + ")"; },
                        [](const Quantum& q) { return "quantum(q=" + q.q.str() + ")"; },
                    },
                    v_);
}

namespace {

// prod_i (1 + c_i z) truncated at order J.
BetaSeries linear_product(const std::vector<Rational>& c, int order, int sign) {
  BetaSeries s = BetaSeries::one(order);
  for (const auto& ci : c) {
    BetaSeries f = BetaSeries::one(order);
    if (order >= 1) f[1] = sign > 0 ? ci : -ci;
    s *= f;
  }
  return s;
}

} // namespace

std::vector<Rational> g_coeffs(const WeightGen& g, int max_index) {
  if (max_index < 0) throw UsageError("g_coeffs: index bound must be non-negative");
  const BetaSeries s = std::visit(
      Overloaded{
          [&](const WeightGen::Trivial&) { return BetaSeries::one(max_index); },
          [&](const WeightGen::FiniteProduct& f) { return linear_product(f.c, max_index, +1); },
          [&](const WeightGen::RationalGen& r) {
            return linear_product(r.c, max_index, +1) * series_inv(linear_product(r.d, max_index, -1));
          },
          [&](const WeightGen::Quantum& q) {
            BetaSeries out(max_index);
            Rational poch(1);
            out[0] = Rational(1);
            for (int n = 1; n <= max_index; ++n) {
              const Rational f = Rational(1) - pow(q.q, n);
              if (f.is_zero()) throw SingularError(ErrorCode::singular_parameter, "(q;q)_n vanishes");
              poch *= f;
              out[n] = Rational(1) / poch;
            }
            return out;
          },
      },
      g.variant());
  return std::vector<Rational>(s.coeffs().begin(), s.coeffs().end());
}

Rational evaluate_weight(const WeightGen& g, const Rational& z, std::optional<int> quantum_terms) {
  return std::visit(
      Overloaded{
          [&](const WeightGen::Trivial&) { return Rational(1); },
          [&](const WeightGen::FiniteProduct& f) {
            Rational v(1);
            for (const auto& c : f.c) v *= Rational(1) + c * z;
            return v;
          },
          [&](const WeightGen::RationalGen& r) {
            Rational num(1), den(1);
            for (const auto& c : r.c) num *= Rational(1) + c * z;
            for (std::size_t m = 0; m < r.d.size(); ++m) {
              const Rational f = Rational(1) - r.d[m] * z;
              if (f.is_zero()) {
                throw SingularError(ErrorCode::singular_parameter,
                                    "weight function has a pole at z = " + z.str() + " (factor 1 - d_" +
                                        std::to_string(m + 1) + " z)");
              }
              den *= f;
            }
            return num / den;
          },
          [&](const WeightGen::Quantum& q) {
            if (!quantum_terms) {
              throw UsageError("quantum weight evaluation needs a product truncation M");
            }
            Rational den(1);
            Rational qi(1);
            for (int i = 0; i <= *quantum_terms; ++i) {
              const Rational f = Rational(1) - qi * z;
              if (f.is_zero()) {
                throw SingularError(ErrorCode::singular_parameter,
                                    "quantum weight has a pole at z = " + z.str() + " (factor i = " +
                                        std::to_string(i) + ")");
              }
              den *= f;
              qi *= q.q;
            }
            return Rational(1) / den;
          },
      },
      g.variant());
}

namespace {

std::vector<int> colengths(std::span<const Partition> profiles) {
  std::vector<int> a;
  for (const auto& p : profiles) a.push_back(colength(p));
  return a;
}

// sum over i_1 < ... < i_k (strict) or i_1 <= ... <= i_k of prod_j c_{i_j}^{b_j}.
Rational chain_sum(std::span<const Rational> c, const std::vector<int>& b, bool strict) {
  if (b.empty()) return Rational(1);
  const std::size_t n = c.size();
  std::vector<Rational> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = pow(c[i], b[0]);
  for (std::size_t j = 1; j < b.size(); ++j) {
    std::vector<Rational> next(n);
    Rational running(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!strict) running += t[i];
      next[i] = pow(c[i], b[j]) * running;
      if (strict) running += t[i];
    }
    t = std::move(next);
  }
  Rational total(0);
  for (const auto& v : t) total += v;
  return total;
}

// (1/k!) sum_sigma f(a o sigma), summing over distinct rearrangements with the
// stabilizer size as multiplicity.
template <class F>
Rational symmetrized(std::vector<int> a, F&& f) {
  std::sort(a.begin(), a.end());
  Rational stabilizer(1);
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    stabilizer *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  Rational sum(0);
  do {
    sum += f(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return sum * stabilizer / factorial(static_cast<unsigned>(a.size()));
}

int sum_of(const std::vector<int>& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

} // namespace

Rational weight_factor(std::span<const Rational> c, std::span<const Partition> profiles) {
  const auto a = colengths(profiles);
  if (a.size() > c.size()) return Rational(0);
  return symmetrized(a, [&](const std::vector<int>& b) { return chain_sum(c, b, true); });
}

Rational weight_factor_tilde(std::span<const Rational> c, std::span<const Partition> profiles) {
  const auto a = colengths(profiles);
  const Rational sign = (sum_of(a) + static_cast<int>(a.size())) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * symmetrized(a, [&](const std::vector<int>& b) { return chain_sum(c, b, false); });
}

Rational quantum_weight_factor(const Rational& q, std::span<const Partition> profiles) {
  const auto a = colengths(profiles);
  const Rational sign = (sum_of(a) - static_cast<int>(a.size())) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * symmetrized(a, [&](const std::vector<int>& b) {
           Rational prod(1);
           int partial = 0;
           for (int e : b) {
             partial += e;
             const Rational den = Rational(1) - pow(q, partial);
             if (den.is_zero()) {
               throw SingularError(ErrorCode::singular_parameter,
                                   "quantum weight factor: 1 - q^" + std::to_string(partial) + " vanishes");
             }
             prod /= den;
           }
           return prod;
         });
}

Rational rational_weight_factor(std::span<const Rational> c, std::span<const Rational> d,
                                std::span<const Partition> mu_profiles, std::span<const Partition> nu_profiles) {
  // The double sum factorizes into the strict c-block and the signed
  // non-strict d-block; (-1)^{sum l* - l} has the parity of (-1)^{sum l* + l}.
  return weight_factor(c, mu_profiles) * weight_factor_tilde(d, nu_profiles);
}

namespace {

// Non-identity partitions of n with their colengths, canonical order.
std::vector<Partition> branch_profiles(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n)) {
    if (colength(p) >= 1) out.push_back(std::move(p));
  }
  return out;
}

// Calls f(block) for every multiset of profiles (non-decreasing index list)
// whose colengths sum to target.
template <class F>
void for_each_multiset(const std::vector<Partition>& profiles, int target, F&& f) {
  std::vector<Partition> block;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      f(std::as_const(block));
      return;
    }
    for (std::size_t i = start; i < profiles.size(); ++i) {
      const int c = colength(profiles[i]);
      if (c > remaining) continue;
      block.push_back(profiles[i]);
      self(self, i, remaining - c);
      block.pop_back();
    }
  };
  rec(rec, 0, target);
}

// Calls f(tuple) for every ordered tuple with colength sum target.
template <class F>
void for_each_ordered(const std::vector<Partition>& profiles, int target, F&& f) {
  std::vector<Partition> tuple;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      f(std::as_const(tuple));
      return;
    }
    for (const auto& p : profiles) {
      const int c = colength(p);
      if (c > remaining) continue;
      tuple.push_back(p);
      self(self, remaining - c);
      tuple.pop_back();
    }
  };
  rec(rec, target);
}

// Distinct orderings of a multiset given as a sorted block.
long arrangements(const std::vector<Partition>& block) {
  Rational count = factorial(static_cast<unsigned>(block.size()));
  for (std::size_t i = 0; i < block.size();) {
    std::size_t j = i;
    while (j < block.size() && block[j] == block[i]) ++j;
    count /= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return count.num().get_si();
}

Rational hurwitz_with(int n, const std::vector<Partition>& a, const std::vector<Partition>& b, const Partition& mu,
                      const Partition& nu) {
  std::vector<Partition> all = a;
  all.insert(all.end(), b.begin(), b.end());
  all.push_back(mu);
  all.push_back(nu);
  return hurwitz_number(ProfileTuple(n, std::move(all)));
}

void check_args(int d, const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) {
    throw UsageError("weighted_hurwitz: |mu| = " + std::to_string(mu.weight()) + " but |nu| = " +
                     std::to_string(nu.weight()));
  }
  if (d < 0) throw UsageError("weighted_hurwitz: degree d must be non-negative");
}

// Weight of an ordered (or multiset) configuration for the given family.
Rational family_weight(const WeightGen& g, const std::vector<Partition>& a, const std::vector<Partition>& b) {
  return std::visit(
      Overloaded{
          [&](const WeightGen::Trivial&) { return Rational(a.empty() && b.empty() ? 1 : 0); },
          [&](const WeightGen::FiniteProduct& f) { return weight_factor(f.c, a); },
          [&](const WeightGen::RationalGen& r) { return rational_weight_factor(r.c, r.d, a, b); },
          [&](const WeightGen::Quantum& q) { return a.empty() ? Rational(1) : quantum_weight_factor(q.q, a); },
      },
      g.variant());
}

bool has_second_block(const WeightGen& g) { return std::holds_alternative<WeightGen::RationalGen>(g.variant()); }

} // namespace

WeightedCount weighted_hurwitz_detailed(const WeightGen& g, int d, const Partition& mu, const Partition& nu) {
  check_args(d, mu, nu);
  const int n = mu.weight();
  WeightedCount out{d, mu, nu, Rational(0), {}};
  if (d == 0) {
    WeightedTerm t{{}, {}, 1, Rational(1), hurwitz_number(ProfileTuple(n, {mu, nu}))};
    out.value = t.hurwitz;
    out.terms.push_back(std::move(t));
    return out;
  }
  if (g.is_trivial()) return out;

  const auto profiles = branch_profiles(n);
  const int split_max = has_second_block(g) ? d : 0;
  for (int dd = 0; dd <= split_max; ++dd) {
    const int dc = d - dd;
    for_each_multiset(profiles, dc, [&](const std::vector<Partition>& a) {
      for_each_multiset(profiles, dd, [&](const std::vector<Partition>& b) {
        const Rational w = family_weight(g, a, b);
        if (w.is_zero()) return;
        const Rational h = hurwitz_with(n, a, b, mu, nu);
        if (h.is_zero()) return;
        const long count = arrangements(a) * arrangements(b);
        out.value += Rational(count) * w * h;
        out.terms.push_back(WeightedTerm{a, b, count, w, h});
      });
    });
  }
  return out;
}

Rational weighted_hurwitz(const WeightGen& g, int d, const Partition& mu, const Partition& nu) {
  return weighted_hurwitz_detailed(g, d, mu, nu).value;
}

Rational weighted_hurwitz_reference(const WeightGen& g, int d, const Partition& mu, const Partition& nu) {
  check_args(d, mu, nu);
  const int n = mu.weight();
  if (d == 0) return hurwitz_number(ProfileTuple(n, {mu, nu}));
  if (g.is_trivial()) return Rational(0);
  const auto profiles = branch_profiles(n);
  const int split_max = has_second_block(g) ? d : 0;
  Rational total(0);
  for (int dd = 0; dd <= split_max; ++dd) {
    for_each_ordered(profiles, d - dd, [&](const std::vector<Partition>& a) {
      for_each_ordered(profiles, dd, [&](const std::vector<Partition>& b) {
        total += family_weight(g, a, b) * hurwitz_with(n, a, b, mu, nu);
      });
    });
  }
  return total;
}

} // namespace htau
