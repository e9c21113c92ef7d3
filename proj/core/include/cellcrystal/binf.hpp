#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cellcrystal/cellular.hpp"
#include "cellcrystal/hlattice.hpp"

namespace cellcrystal {

/// B(∞)_i inside 𝔹_i, generated as the f̃-closure of 0 and stored layer by
/// layer up to a height bound. Height is the coordinate sum, which grows by
/// exactly one per f̃ application.
///
/// Immutable after generation; safe to share for concurrent reads.
class BinfTable {
 public:
  /// Throws DomainError unless the word is a reduced word for w_0.
  static BinfTable generate(const CellCrystal& crystal, int max_height);

  const CellCrystal& crystal() const { return crystal_; }
  int max_height() const { return static_cast<int>(layers_.size()) - 1; }
  /// Elements of height h, sorted.
  std::span<const CellElem> layer(int h) const;
  std::size_t size() const { return members_.size(); }

  /// False as soon as a coordinate is negative. Throws TableTooSmall for a
  /// nonnegative x above max_height().
  bool contains(const CellElem& x) const;

  /// |{b : wt(b) = μ}| over the whole table.
  std::map<Weight, std::size_t> weight_multiplicities() const;

 private:
  explicit BinfTable(CellCrystal crystal) : crystal_(std::move(crystal)) {}

  CellCrystal crystal_;
  std::vector<std::vector<CellElem>> layers_;
  std::unordered_set<CellElem, CellElemHash> members_;
};

/// x = h_c + b with b ∈ B(∞)_i.
struct Decomposition {
  std::vector<std::int64_t> c;
  CellElem b;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// 1 + max |x_k|: the first search box when no bound is given.
std::int64_t default_decompose_bound(const CellElem& x);

/// How many times decompose() doubles the default box before giving up.
inline constexpr int kDecomposeWidenings = 3;

/// Canonical decomposition with |c_i| <= bound: the one whose b has the
/// smallest height (equivalently the largest shift), ties going to the
/// lexicographically smallest c. Without a bound the box starts at
/// default_decompose_bound(x) and doubles up to kDecomposeWidenings times.
///
/// Throws NoDecomposition if none exists within the bound and TableTooSmall
/// if the search reaches a candidate b above the table's height.
Decomposition decompose(const HBasis& basis, const BinfTable& table, const CellElem& x,
                        std::optional<std::int64_t> bound = std::nullopt);

/// Outcome of a sampled or exhaustive property check.
struct CheckReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void fail(std::string witness) {
    if (failures++ == 0) first_failure = std::move(witness);
  }
};

/// Samples b ∈ B(∞)_i (height <= max_b_height), h = Σ c_i h_i with
/// |c_i| <= coeff_bound, and i ∈ I; checks ẽ_i(b+h) = ẽ_i(b)+h and
/// f̃_i(b+h) = f̃_i(b)+h.
CheckReport shift_equivariance_check(const HBasis& basis, const BinfTable& table, std::size_t samples,
                                     std::uint64_t seed, int coeff_bound = 2, int max_b_height = 6);

struct CoverageReport {
  std::size_t total = 0;
  std::size_t decomposed = 0;
  std::vector<CellElem> failures;

  bool passed() const { return failures.empty(); }
};

/// Decomposes every point of [-radius, radius]^N. TableTooSmall propagates.
CoverageReport coverage_check(const HBasis& basis, const BinfTable& table, int radius);

/// Bidirectional BFS from x to 0 along ẽ/f̃ edges inside [-radius, radius]^N.
/// The result is an operator string (rightmost step first) with
/// apply_string(x, path) == 0. std::nullopt means "not found inside the box".
std::optional<std::vector<OpStep>> connected_check(const CellCrystal& crystal, const CellElem& x, int radius);

}  // namespace cellcrystal
