#pragma once

// Test-only oracles and generators. Nothing here calls the σ-based operator
// code it is used to check.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cellcrystal/cellcrystal.hpp"
#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<cellcrystal::CellElem> {
  static String convert(const cellcrystal::CellElem& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<cellcrystal::Word> {
  static String convert(const cellcrystal::Word& w) { return w.to_string().c_str(); }
};
template <>
struct StringMaker<cellcrystal::Weight> {
  static String convert(const cellcrystal::Weight& w) { return w.to_string().c_str(); }
};
template <>
struct StringMaker<cellcrystal::ExtInt> {
  static String convert(const cellcrystal::ExtInt& v) { return v.to_string().c_str(); }
};
}  // namespace doctest

namespace cellcrystal::testing {

inline Word word_of(const char* type, std::vector<int> letters) { return Word(cartan_data(type), std::move(letters)); }

inline CellCrystal crystal_of(const char* type, std::vector<int> letters) {
  return CellCrystal(word_of(type, std::move(letters)));
}

inline CellElem random_elem(std::mt19937_64& rng, int len, int radius) {
  std::uniform_int_distribution<std::int64_t> d(-radius, radius);
  std::vector<std::int64_t> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = d(rng);
  return CellElem(std::move(v));
}

inline int random_index(std::mt19937_64& rng, int rank) {
  return std::uniform_int_distribution<int>(1, rank)(rng);
}

/// Tensor product of B_i's evaluated by the two-factor rule, splitting off
/// the leftmost factor each time. Letters are B_i values (n)_i, not f-counts.
class TensorOracle {
 public:
  using Ext = std::optional<std::int64_t>;  // nullopt = -inf

  TensorOracle(const CartanData& cd, std::vector<int> indices) : cd_(cd), idx_(std::move(indices)) {}

  std::vector<std::int64_t> wt(const std::vector<std::int64_t>& n, std::size_t from = 0) const {
    std::vector<std::int64_t> w(static_cast<std::size_t>(cd_.rank()), 0);
    for (std::size_t k = from; k < n.size(); ++k)
      for (int r = 1; r <= cd_.rank(); ++r) w[static_cast<std::size_t>(r - 1)] += n[k] * cd_.a(r, idx_[k]);
    return w;
  }

  Ext eps(const std::vector<std::int64_t>& n, int i, std::size_t from = 0) const {
    Ext head = idx_[from] == i ? Ext(-n[from]) : std::nullopt;
    if (from + 1 == n.size()) return head;
    Ext tail = eps(n, i, from + 1);
    if (tail) *tail -= pairing(i, n, from, from + 1);
    return max(head, tail);
  }

  Ext phi(const std::vector<std::int64_t>& n, int i, std::size_t from = 0) const {
    Ext head = idx_[from] == i ? Ext(n[from]) : std::nullopt;
    if (from + 1 == n.size()) return head;
    Ext tail = phi(n, i, from + 1);
    if (head) *head += pairing(i, n, from + 1, n.size());
    return max(tail, head);
  }

  /// ẽ_i; nullopt is the crystal's 0.
  std::optional<std::vector<std::int64_t>> e(std::vector<std::int64_t> n, int i) const {
    if (!step(n, i, 0, +1)) return std::nullopt;
    return n;
  }
  std::optional<std::vector<std::int64_t>> f(std::vector<std::int64_t> n, int i) const {
    if (!step(n, i, 0, -1)) return std::nullopt;
    return n;
  }

 private:
  static Ext max(Ext a, Ext b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
  }

  // ⟨h_i, wt(n[lo..hi))⟩
  std::int64_t pairing(int i, const std::vector<std::int64_t>& n, std::size_t lo, std::size_t hi) const {
    std::int64_t s = 0;
    for (std::size_t k = lo; k < hi; ++k) s += n[k] * cd_.a(i, idx_[k]);
    return s;
  }

  // delta = +1 for ẽ (raises the letter), -1 for f̃.
  bool step(std::vector<std::int64_t>& n, int i, std::size_t from, int delta) const {
    if (from + 1 == n.size()) {
      if (idx_[from] != i) return false;
      n[from] += delta;
      return true;
    }
    const Ext phi1 = idx_[from] == i ? Ext(n[from]) : std::nullopt;
    const Ext eps2 = eps(n, i, from + 1);
    bool left;
    if (!phi1 && !eps2) return false;
    if (!phi1) left = false;
    else if (!eps2) left = true;
    else left = delta > 0 ? *phi1 >= *eps2 : *phi1 > *eps2;
    if (left) {
      n[from] += delta;
      return true;
    }
    return step(n, i, from + 1, delta);
  }

  const CartanData& cd_;
  std::vector<int> idx_;
};

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under simple reflections.
inline std::set<std::vector<std::int64_t>> positive_roots(const CartanData& cd) {
  const int n = cd.rank();
  std::set<std::vector<std::int64_t>> all;
  std::vector<std::vector<std::int64_t>> stack;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    stack.push_back(e);
    all.insert(e);
  }
  while (!stack.empty()) {
    auto beta = stack.back();
    stack.pop_back();
    for (int i = 1; i <= n; ++i) {
      std::int64_t p = 0;
      for (int j = 1; j <= n; ++j) p += cd.a(i, j) * beta[static_cast<std::size_t>(j - 1)];
      auto img = beta;
      img[static_cast<std::size_t>(i - 1)] -= p;
      if (all.insert(img).second) stack.push_back(img);
    }
  }
  std::set<std::vector<std::int64_t>> pos;
  for (const auto& r : all) {
    bool nonneg = true;
    for (auto v : r) nonneg = nonneg && v >= 0;
    if (nonneg) pos.insert(r);
  }
  return pos;
}

/// Kostant partition function: number of ways to write β as an unordered sum
/// of positive roots, for every β of height <= max_height.
inline std::map<std::vector<std::int64_t>, std::size_t> kostant_counts(const CartanData& cd, int max_height) {
  const auto roots = positive_roots(cd);
  std::map<std::vector<std::int64_t>, std::size_t> counts{{std::vector<std::int64_t>(static_cast<std::size_t>(cd.rank()), 0), 1}};
  for (const auto& r : roots) {
    std::int64_t rh = 0;
    for (auto v : r) rh += v;
    // Unbounded knapsack over this root, processing in increasing height.
    std::map<std::vector<std::int64_t>, std::size_t> next = counts;
    std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> frontier(counts.begin(), counts.end());
    for (int mult = 1;; ++mult) {
      std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> grown;
      for (const auto& [k, c] : frontier) {
        std::int64_t h = 0;
        for (auto v : k) h += v;
        if (h + rh > max_height) continue;
        auto nk = k;
        for (std::size_t t = 0; t < nk.size(); ++t) nk[t] += r[t];
        grown.emplace_back(nk, c);
        next[nk] += c;
      }
      if (grown.empty()) break;
      frontier = std::move(grown);
    }
    counts = std::move(next);
  }
  return counts;
}

/// The same count read off a table: b ↦ Σ_k x_k e_{i_k}.
inline std::map<std::vector<std::int64_t>, std::size_t> table_root_counts(const BinfTable& t) {
  std::map<std::vector<std::int64_t>, std::size_t> out;
  const auto& w = t.crystal().word();
  for (int h = 0; h <= t.max_height(); ++h)
    for (const auto& b : t.layer(h)) {
      std::vector<std::int64_t> beta(static_cast<std::size_t>(w.cartan().rank()), 0);
      for (int k = 1; k <= w.size(); ++k) beta[static_cast<std::size_t>(w.at(k) - 1)] += b.at(k);
      ++out[beta];
    }
  return out;
}

/// Rank over ℚ by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const auto f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * p[c] - f * p[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cellcrystal::testing
