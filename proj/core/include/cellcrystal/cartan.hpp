#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellcrystal {

// Lie indices i ∈ I are 1-based throughout the library, matching the way
// words are written (121, 212, ...).

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Validates the rank against the family (B,C need rank >= 2, D >= 4,
  /// E in {6,7,8}, F = 4, G = 2) and throws DomainError otherwise.
  static LieType make(Family family, int rank);
  /// Case-insensitive "A2", "g2", "E8", ...
  static LieType parse(std::string_view text);

  std::string to_string() const;
  /// Number of positive roots N, i.e. the length of w_0.
  int positive_root_count() const;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Dense row-major integer matrix. Only what the Weyl group action needs.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<std::int64_t> operator*(std::span<const std::int64_t> v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Integral weight in the fundamental-weight basis: coefficient i is ⟨h_i, λ⟩.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  Weight(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }
  /// Λ_i.
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  /// ⟨h_i, λ⟩ for 1-based i.
  std::int64_t pairing(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  bool is_dominant() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator-(Weight w);
  friend Weight operator*(std::int64_t s, Weight w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Element of W, stored as its integer action on Λ-coefficient vectors.
class WeylElement {
 public:
  explicit WeylElement(IntMatrix matrix) : matrix_(std::move(matrix)) {}
  static WeylElement identity(int rank) { return WeylElement(IntMatrix::identity(rank)); }

  const IntMatrix& matrix() const { return matrix_; }
  Weight apply(const Weight& w) const { return Weight(matrix_ * w.coeffs()); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.matrix_ * b.matrix_);
  }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  IntMatrix matrix_;
};

/// Root datum of a finite simple type: Cartan matrix a_ij = ⟨h_i, α_j⟩ and
/// symmetrizers d_i with d_i a_ij = d_j a_ji.
///
/// Numbering is Bourbaki except G2, where node 1 is the long root
/// (a_12 = -1, a_21 = -3).
class CartanData {
 public:
  explicit CartanData(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& matrix() const { return cartan_; }
  /// a_ij for 1-based i, j.
  std::int64_t a(int i, int j) const { return cartan_(i - 1, j - 1); }
  const std::vector<std::int64_t>& symmetrizer() const { return sym_; }

  void check_index(int i) const;

  /// α_i in the Λ-basis (column i of A).
  Weight alpha(int i) const;
  /// ρ = Λ_1 + ... + Λ_n.
  Weight rho() const;

  /// s_i(λ) = λ - ⟨h_i, λ⟩ α_i.
  Weight reflect(int i, const Weight& lambda) const;
  WeylElement reflection(int i) const;
  /// s_{i_1} ··· s_{i_k}; the rightmost letter acts first.
  WeylElement element(std::span<const int> letters) const;
  Weight weyl_apply(std::span<const int> letters, Weight lambda) const;

  /// Greedy reduced word for w_0: repeatedly strip the smallest left descent.
  std::vector<int> longest_word() const;
  WeylElement longest_element() const;
  /// The j with Λ_j = -w_0 Λ_i.
  int i_star(int i) const;

 private:
  LieType type_;
  IntMatrix cartan_;
  std::vector<std::int64_t> sym_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

CartanPtr cartan_data(LieType type);
inline CartanPtr cartan_data(std::string_view type) { return cartan_data(LieType::parse(type)); }

}  // namespace cellcrystal
