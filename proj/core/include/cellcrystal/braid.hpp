#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cellcrystal/cellular.hpp"
#include "cellcrystal/words.hpp"

namespace cellcrystal {

/// A braid window together with the Cartan data its map needs:
/// c1 = -⟨h_i, α_j⟩ and c2 = -⟨h_j, α_i⟩ for the window's first letter i and
/// second letter j.
struct BraidWindow {
  BraidMove move;
  int first = 0;
  int second = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  /// Throws DomainError when `m` does not fit `w`.
  static BraidWindow at(const Word& w, BraidMove m);
};

/// The braid-type isomorphisms on letter values ((n)_i ∈ B_i, not f-counts).
/// Inputs are the window letters in order; outputs are the letters of the
/// image window.
namespace letter_maps {

std::array<std::int64_t, 2> phi0(std::int64_t x, std::int64_t y);
std::array<std::int64_t, 3> phi1(std::int64_t x, std::int64_t y, std::int64_t z);
std::array<std::int64_t, 4> phi2(std::int64_t c1, std::int64_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                                 std::int64_t w);
std::array<std::int64_t, 6> phi3(std::int64_t c1, std::int64_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                                 std::int64_t u, std::int64_t v, std::int64_t w);

}  // namespace letter_maps

struct BraidImage {
  Word word;
  CellElem x;
};

/// Applies the braid-type isomorphism of window `m` to x ∈ 𝔹_w. The image
/// lives in 𝔹_{w'} with w' = apply_braid_move(w, m); slots outside the
/// window are unchanged.
BraidImage braid_isomorphism(const Word& w, const CellElem& x, BraidMove m);

/// Composes braid_isomorphism along `path`.
BraidImage transform(const Word& w, const CellElem& x, std::span<const BraidMove> path);

/// The path that undoes `path`: same windows, reverse order.
std::vector<BraidMove> reverse_path(std::span<const BraidMove> path);

}  // namespace cellcrystal
