#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellcrystal/cartan.hpp"
#include "cellcrystal/words.hpp"

namespace cellcrystal {

/// ℤ ⊔ {-∞}. Adding a finite integer to -∞ stays at -∞.
class ExtInt {
 public:
  constexpr ExtInt(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT(implicit)
  static constexpr ExtInt neg_inf() { return ExtInt(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_inf() const { return !finite_; }
  /// Throws DomainError on -∞.
  std::int64_t value() const;

  constexpr ExtInt operator+(std::int64_t rhs) const { return finite_ ? ExtInt(value_ + rhs) : *this; }
  constexpr ExtInt operator-(std::int64_t rhs) const { return finite_ ? ExtInt(value_ - rhs) : *this; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  constexpr ExtInt() : finite_(false), value_(0) {}
  bool finite_;
  std::int64_t value_;
};

/// A point of 𝔹_i in f-count coordinates: x stands for
/// f̃^{x_1}(0)_{i_1} ⊗ ··· ⊗ f̃^{x_N}(0)_{i_N}, i.e. slot k holds the letter -x_k.
class CellElem {
 public:
  CellElem() = default;
  explicit CellElem(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  CellElem(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static CellElem zero(int n) { return CellElem(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

  int size() const { return static_cast<int>(coords_.size()); }
  std::span<const std::int64_t> coords() const { return coords_; }
  /// 1-based slot access.
  std::int64_t at(int k) const { return coords_.at(static_cast<std::size_t>(k - 1)); }
  std::int64_t& at(int k) { return coords_.at(static_cast<std::size_t>(k - 1)); }

  /// Coordinate sum.
  std::int64_t height() const;
  bool is_nonnegative() const;
  std::int64_t max_abs() const;

  CellElem& operator+=(const CellElem& rhs);
  CellElem& operator-=(const CellElem& rhs);
  friend CellElem operator+(CellElem a, const CellElem& b) { return a += b; }
  friend CellElem operator-(CellElem a, const CellElem& b) { return a -= b; }
  friend CellElem operator-(CellElem a);
  friend CellElem operator*(std::int64_t s, CellElem a);

  friend bool operator==(const CellElem&, const CellElem&) = default;
  friend auto operator<=>(const CellElem&, const CellElem&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct CellElemHash {
  std::size_t operator()(const CellElem& x) const noexcept;
};

/// One factor of an operator string: ẽ_i^count or f̃_i^count.
struct OpStep {
  enum class Kind : char { E = 'e', F = 'f' };
  Kind kind = Kind::F;
  int index = 1;
  int count = 1;

  friend bool operator==(const OpStep&, const OpStep&) = default;
};

/// Parses "f1 f2^2 e1" or "f1,f2^2,e1" (whitespace/comma separated).
std::vector<OpStep> parse_op_string(std::string_view text);
std::string format_op_string(std::span<const OpStep> ops);

/// The cellular crystal B_{i_1} ⊗ ··· ⊗ B_{i_N} on ℤ^N.
///
/// Slots k are 1-based. The word need not be reduced. Kashiwara operators for
/// an index that does not occur in the word return std::nullopt, which plays
/// the role of the crystal's 0.
class CellCrystal {
 public:
  explicit CellCrystal(Word word);

  const Word& word() const { return word_; }
  const CartanData& cartan() const { return word_.cartan(); }
  int size() const { return word_.size(); }
  int rank() const { return cartan().rank(); }

  bool has_index(int i) const;
  /// Slots k with i_k = i, ascending.
  std::span<const int> slots_of(int i) const;
  /// k⁺: the next slot carrying the same letter, if any.
  std::optional<int> successor(int k) const;

  /// σ_k(x) = x_k + Σ_{j<k} ⟨h_{i_k}, α_{i_j}⟩ x_j.
  std::int64_t sigma(const CellElem& x, int k) const;
  /// σ_{k⁺}(x) - σ_k(x). Throws DomainError if k has no successor.
  std::int64_t beta(const CellElem& x, int k) const;

  ExtInt epsilon(const CellElem& x, int i) const;
  ExtInt phi(const CellElem& x, int i) const;
  /// -Σ x_k α_{i_k}.
  Weight weight(const CellElem& x) const;

  std::optional<CellElem> f_tilde(const CellElem& x, int i) const;
  std::optional<CellElem> e_tilde(const CellElem& x, int i) const;

  /// Applies `ops` as an operator product: the rightmost step acts first, so
  /// "f1 f2" means f̃_1(f̃_2(x)). Throws DomainError for an index absent from
  /// the word.
  CellElem apply_string(CellElem x, std::span<const OpStep> ops) const;

  void check_elem(const CellElem& x) const;

 private:
  // Slots realising max σ_k among occurrences of i; empty when i is absent.
  std::pair<int, int> extreme_slots(const CellElem& x, int i) const;

  Word word_;
  std::vector<std::vector<int>> slots_;   // per index, 1-based slots
  std::vector<int> successor_;            // 0 when none
};

}  // namespace cellcrystal
