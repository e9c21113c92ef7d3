#pragma once

#include <memory>
#include <vector>

#include "cellcrystal/binf.hpp"
#include "cellcrystal/cellular.hpp"
#include "cellcrystal/hlattice.hpp"

namespace cellcrystal {

/// A simple object C_Λ ∘ S of the localized category, represented by its
/// image h_Λ + Ψ(S) ∈ 𝔹_i. Every point of ℤ^N is such an image.
struct LocalElem {
  Word word;
  CellElem x;

  friend bool operator==(const LocalElem&, const LocalElem&) = default;
};

/// A presentation C_Λ ∘ S: Λ = Σ c_i Λ_i and b = Ψ(S) ∈ B(∞)_i. Not unique.
struct LocalPresentation {
  std::vector<std::int64_t> c;
  CellElem b;

  Weight lambda() const { return Weight(c); }
  friend bool operator==(const LocalPresentation&, const LocalPresentation&) = default;
};

/// Crystal structure of the localized quantum coordinate ring, modelled on
/// 𝔹_i for a reduced longest word. Gradings are not represented: operators
/// act on self-dual representatives.
class LocalizedCrystal {
 public:
  /// The table bounds every B(∞) membership test this object performs.
  explicit LocalizedCrystal(std::shared_ptr<const BinfTable> table);

  const CellCrystal& crystal() const { return table_->crystal(); }
  const Word& word() const { return crystal().word(); }
  const HBasis& basis() const { return basis_; }
  const BinfTable& table() const { return *table_; }

  LocalElem element(CellElem x) const;
  /// h_Λ + b. Throws DomainError if b ∉ B(∞)_i.
  LocalElem from_pair(const LocalPresentation& p) const;
  /// Canonical presentation (see decompose()).
  LocalPresentation presentation(const LocalElem& L, std::optional<std::int64_t> bound = std::nullopt) const;

  LocalElem f_loc(const LocalElem& L, int i) const;
  LocalElem e_loc(const LocalElem& L, int i) const;

  /// Ẽ_i through the presentation: ẽ_i on b when ε_i(b) > 0, otherwise
  /// h_{Λ-Λ_{i*}} + ẽ_i(h_{Λ_{i*}} + b). Membership of the second-branch
  /// summand in B(∞)_i is checked and a violation throws ModelViolation.
  LocalElem e_categorical(const LocalPresentation& p, int i) const;

  /// ε_i(b) - ⟨h_i, w_0 Λ⟩.
  std::int64_t eps_loc(const LocalPresentation& p, int i) const;
  /// wt(b) + w_0 Λ - Λ.
  Weight wt_loc(const LocalPresentation& p) const;
  /// ε_i + ⟨h_i, wt⟩.
  std::int64_t phi_loc(const LocalPresentation& p, int i) const;

  /// Functions read directly off the representative.
  std::int64_t epsilon(const LocalElem& L, int i) const;
  std::int64_t phi(const LocalElem& L, int i) const;
  Weight weight(const LocalElem& L) const;

  /// Group law transported from ℤ^N. Depends on the word.
  LocalElem oplus(const LocalElem& a, const LocalElem& b) const;
  LocalElem ominus(const LocalElem& a) const;

 private:
  void check_word(const LocalElem& L) const;
  void check_presentation(const LocalPresentation& p) const;

  std::shared_ptr<const BinfTable> table_;
  HBasis basis_;
  WeylElement w0_;
};

}  // namespace cellcrystal
