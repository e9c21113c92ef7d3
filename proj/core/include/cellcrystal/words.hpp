#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellcrystal/cartan.hpp"

namespace cellcrystal {

/// A word i_1 ··· i_k in the simple indices of a root datum. Not necessarily
/// reduced.
class Word {
 public:
  Word(CartanPtr cartan, std::vector<int> letters);

  /// Accepts "1,2,1", "1 2 1", "[1,2,1]" and, when every index is a single
  /// digit, "121".
  static Word parse(CartanPtr cartan, std::string_view text);

  const CartanData& cartan() const { return *cartan_; }
  const CartanPtr& cartan_ptr() const { return cartan_; }
  std::span<const int> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  /// Letter at 1-based position k.
  int at(int k) const { return letters_.at(static_cast<std::size_t>(k - 1)); }

  WeylElement element() const { return cartan_->element(letters_); }

  /// "1,2,1"
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.cartan_->type() == b.cartan_->type() && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.cartan_->type() <=> b.cartan_->type(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  CartanPtr cartan_;
  std::vector<int> letters_;
};

/// The canonical reduced word for w_0 (greedy smallest left descent).
Word longest_word(const CartanPtr& cartan);

bool is_reduced(const Word& w);
/// Reduced and of length N: a reduced word for w_0.
bool is_reduced_longest(const Word& w);

/// Braid relation window starting at 1-based `pos`. `kind` is the window
/// length: 2, 3, 4 or 6 for c_ij = a_ij a_ji = 0, 1, 2, 3.
struct BraidMove {
  int pos = 1;
  int kind = 2;

  friend bool operator==(const BraidMove&, const BraidMove&) = default;
  friend auto operator<=>(const BraidMove&, const BraidMove&) = default;
};

/// Length of the braid relation between distinct i and j, i.e. the order of
/// s_i s_j.
int braid_length(const CartanData& cd, int i, int j);

/// True when the window of `m` alternates two letters with the right
/// relation length.
bool braid_move_applies(const Word& w, BraidMove m);
/// All applicable moves, ordered by (pos, kind).
std::vector<BraidMove> applicable_moves(const Word& w);
/// Throws DomainError on an out-of-range window or pattern mismatch.
Word apply_braid_move(const Word& w, BraidMove m);

/// Shortest sequence of braid moves taking `from` to `to` (BFS, moves tried
/// in (pos, kind) order). Throws DomainError if either word is not reduced or
/// they represent different elements.
std::vector<BraidMove> matsumoto_path(const Word& from, const Word& to);

/// Every reduced word of `element`, sorted lexicographically.
std::vector<Word> all_reduced_words(const CartanPtr& cartan, const WeylElement& element);

}  // namespace cellcrystal
