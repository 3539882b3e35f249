#include "htau/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "htau/errors.hpp"

namespace htau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::identity(int n) {
  if (n < 0) throw UsageError("identity partition of negative size");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    for (int j = 1; j <= parts_.front(); ++j) {
      out.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
    }
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw ParseError("invalid partition '" + std::string(text) + "': " + what + " at position " + std::to_string(pos),
                   pos);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Parses one bracket group starting at pos; advances pos past ']'.
Partition parse_group(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '[') fail(text, pos, "expected '['");
  ++pos;
  skip_space(text, pos);
  std::vector<int> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return Partition();
  }
  while (true) {
    skip_space(text, pos);
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) fail(text, start, "part too large");
      ++pos;
    }
    if (pos == start) fail(text, pos, "expected digit");
    if (value == 0) fail(text, start, "parts must be positive");
    if (!parts.empty() && value > parts.back()) fail(text, start, "parts must be weakly decreasing");
    parts.push_back(static_cast<int>(value));
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return Partition(std::move(parts));
    }
    fail(text, pos, "expected ',' or ']'");
  }
}

} // namespace

Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  Partition p = parse_group(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) fail(text, pos, "trailing characters");
  return p;
}

std::vector<Partition> parse_partition_list(std::string_view text) {
  std::vector<Partition> out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    out.push_back(parse_group(text, pos));
    skip_space(text, pos);
    if (pos == text.size()) return out;
    if (text[pos] != ',') fail(text, pos, "expected ',' between groups");
    ++pos;
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw UsageError("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in reverse-lex order: take the rightmost part > 1, decrement
  // it, and redistribute the remainder greedily with parts bounded by it.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    const int k = --a.back();
    int rem = ones + 1;
    while (rem > 0) {
      const int part = std::min(k, rem);
      a.push_back(part);
      rem -= part;
    }
  }
  return out;
}

Rational z_of(const Partition& mu) {
  mpz_class z = 1;
  const auto parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned long m = j - i;
    mpz_class pw, fac;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    mpz_fac_ui(fac.get_mpz_t(), m);
    z *= pw * fac;
    i = j;
  }
  return Rational(z);
}

int colength(const Partition& mu) { return mu.weight() - mu.length(); }

Rational hook_product(const Partition& lam) {
  const Partition conj = lam.conjugate();
  mpz_class h = 1;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lam[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      h *= arm + leg + 1;
    }
  }
  return Rational(h);
}

std::vector<int> contents(const Partition& lam) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lam.weight()));
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam[static_cast<std::size_t>(i - 1)]; ++j) out.push_back(j - i);
  }
  return out;
}

} // namespace htau
