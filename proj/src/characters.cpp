#include "htau/characters.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <utility>

#include "htau/errors.hpp"
#include "htau/matrix.hpp"

namespace htau {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("character value exceeds 64-bit range");
  return r;
}

struct MemoKey {
  std::vector<int> lam;
  std::vector<int> mu;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : k.lam) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    h ^= 0xff;
    for (int v : k.mu) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

// chi_lam(mu) with mu given as a weakly decreasing part list. The first
// (largest) part of mu is removed as a border strip of lam, using beta-numbers:
// a strip of length r corresponds to moving a bead b to an empty slot b - r,
// with sign (-1)^(beads strictly between).
std::int64_t mn_recursive(const std::vector<int>& lam, const std::vector<int>& mu,
                          std::unordered_map<MemoKey, std::int64_t, MemoKeyHash>& memo) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  MemoKey key{lam, mu};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lam.size());
  std::vector<int> beta(lam.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (len - 1 - i);
  const std::set<int> beads(beta.begin(), beta.end());

  std::int64_t total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    const auto between = std::distance(beads.upper_bound(target), beads.lower_bound(b));
    std::vector<int> moved;
    moved.reserve(beta.size());
    for (int x : beta) moved.push_back(x == b ? target : x);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    for (int i = 0; i < len; ++i) {
      const int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = mn_recursive(next, rest, memo);
    total = checked_add(total, (between % 2 == 0) ? sub : -sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

} // namespace

std::int64_t character(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight()) {
    throw UsageError("character: |lambda| = " + std::to_string(lam.weight()) + " but |mu| = " +
                     std::to_string(mu.weight()));
  }
  thread_local std::unordered_map<MemoKey, std::int64_t, MemoKeyHash> memo;
  return mn_recursive(std::vector<int>(lam.parts().begin(), lam.parts().end()),
                      std::vector<int>(mu.parts().begin(), mu.parts().end()), memo);
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(enumerate_partitions(n)) {
  const std::size_t m = partitions_.size();
  values_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    index_.emplace(partitions_[i], i);
    z_.push_back(z_of(partitions_[i]));
    hooks_.push_back(hook_product(partitions_[i]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) values_[i * m + j] = character(partitions_[i], partitions_[j]);
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw UsageError("partition " + p.str() + " is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 0) throw UsageError("character_table: n must be non-negative");
  thread_local std::map<int, std::shared_ptr<const CharacterTable>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n);
  return slot;
}

PowerSumExpansion schur_in_powersums(const Partition& lam) {
  const auto table = character_table(lam.weight());
  const std::size_t row = table->index_of(lam);
  PowerSumExpansion out;
  for (std::size_t j = 0; j < table->size(); ++j) {
    out.emplace(table->partitions()[j], Rational(static_cast<long>((*table)(row, j))) / table->z(j));
  }
  return out;
}

namespace {

// Sample points in Z^n with pairwise distinct coordinates, deterministic.
std::vector<std::vector<Rational>> sample_points(int n, std::size_t count) {
  std::mt19937 rng(20190701u);
  std::uniform_int_distribution<int> dist(-12, 12);
  std::vector<std::vector<Rational>> pts;
  while (pts.size() < count) {
    std::set<int> seen;
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < n) {
      const int v = dist(rng);
      if (seen.insert(v).second) x.emplace_back(v);
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

// Alternant det(x_i^{a_j}) for exponents a_j.
Rational alternant(const std::vector<Rational>& x, const std::vector<int>& exps) {
  const auto n = static_cast<Eigen::Index>(x.size());
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = pow(x[static_cast<std::size_t>(i)], exps[static_cast<std::size_t>(j)]);
  return determinant(m);
}

} // namespace

std::int64_t character_oracle(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight()) throw UsageError("character_oracle: weight mismatch");
  const int n = lam.weight();
  if (n > 6) throw ScaleGuardError("character_oracle: weight " + std::to_string(n) + " exceeds the oracle limit 6");
  if (n == 0) return 1;

  const auto shapes = enumerate_partitions(n);
  const auto points = sample_points(n, 2 * shapes.size());
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) delta[static_cast<std::size_t>(j)] = n - 1 - j;

  RationalMatrix a(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(shapes.size()));
  RationalVector rhs(static_cast<Eigen::Index>(points.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& x = points[p];
    const Rational vandermonde = alternant(x, delta);
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      std::vector<int> exps = delta;
      for (int j = 0; j < shapes[s].length(); ++j) exps[static_cast<std::size_t>(j)] += shapes[s][static_cast<std::size_t>(j)];
      a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(s)) = alternant(x, exps) / vandermonde;
    }
    Rational pm(1);
    for (int part : mu.parts()) {
      Rational ps(0);
      for (const auto& xi : x) ps += pow(xi, part);
      pm *= ps;
    }
    rhs(static_cast<Eigen::Index>(p)) = pm;
  }
  const RationalVector c = solve_exact(a, rhs);
  const auto pos = std::find(shapes.begin(), shapes.end(), lam) - shapes.begin();
  const Rational& v = c(static_cast<Eigen::Index>(pos));
  if (!v.is_integer()) throw Error(ErrorCode::usage, "character_oracle: non-integral solution " + v.str());
  return v.num().get_si();
}

} // namespace htau
