#pragma once

#include <cstddef>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

/// An element of the finite level F_2^k = M_2^{⊗k} as a 2^k x 2^k matrix.
///
/// Leg convention: leg l is letter position l, so s_a s_b^* maps to
/// e_{a1 b1} ⊗ ... ⊗ e_{ak bk}. Rows and columns are indexed by the
/// lexicographic rank of the word (11 -> 0, 12 -> 1, 21 -> 2, 22 -> 3).
class LevelMatrix {
 public:
  LevelMatrix() : LevelMatrix(0) {}
  explicit LevelMatrix(int level);

  static LevelMatrix identity(int level);
  /// The matrix unit e_{ij} at the given level.
  static LevelMatrix unit(int level, std::size_t row, std::size_t col);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  /// Entries flattened row-major: coordinates over the word-pair basis.
  [[nodiscard]] const std::vector<Scalar>& coordinates() const noexcept { return entries_; }
  static LevelMatrix from_coordinates(int level, std::vector<Scalar> coords);

  [[nodiscard]] LevelMatrix transpose() const;
  /// this ⊗ 1 on `extra` new trailing legs.
  [[nodiscard]] LevelMatrix pad(int extra) const;
  [[nodiscard]] Element to_element() const;
  /// Normalized trace, which is omega on this level.
  [[nodiscard]] Scalar normalized_trace() const;

  friend LevelMatrix operator*(const LevelMatrix& a, const LevelMatrix& b);
  friend LevelMatrix operator+(const LevelMatrix& a, const LevelMatrix& b);
  friend LevelMatrix operator-(const LevelMatrix& a, const LevelMatrix& b);
  friend LevelMatrix operator*(const Scalar& c, const LevelMatrix& a);
  friend bool operator==(const LevelMatrix&, const LevelMatrix&) = default;

 private:
  int level_;
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

/// a ⊗ b, with the legs of a first.
LevelMatrix tensor(const LevelMatrix& a, const LevelMatrix& b);

/// The matrix of a gauge-invariant element at level k.
/// Throws NonZeroGaugeDegree or LevelTooSmall.
LevelMatrix embed_to_level(const Element& x, int k);

/// Partial normalized trace over legs k+1..m (the omega-preserving
/// conditional expectation of level m onto level k). Throws BadLevels if k > m.
LevelMatrix expect_onto_level(const LevelMatrix& x, int k);

}  // namespace cuntz
