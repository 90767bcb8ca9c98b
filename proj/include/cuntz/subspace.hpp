#pragma once

#include <cstddef>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

using Vector = std::vector<Scalar>;

/// Incrementally maintained reduced row echelon form over the rationals.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces `row` against the current basis; adds it if independent.
  /// Returns true when the rank grew.
  bool add(Vector row);
  /// True if `row` lies in the row space.
  [[nodiscard]] bool contains(Vector row) const;

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t columns() const noexcept { return columns_; }
  /// Rows sorted by pivot column, fully reduced.
  [[nodiscard]] const std::vector<Vector>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Basis of {x : row·x = 0 for every row}, one vector per free column.
  [[nodiscard]] std::vector<Vector> nullspace() const;

 private:
  void reduce(Vector& row) const;

  std::size_t columns_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of the level-k algebra F_2^k, in coordinates over the
/// word-pair basis s_a s_b^* (|a| = |b| = k, index a*2^k + b). The basis is
/// kept in reduced row echelon form, so equal subspaces have equal bases.
class Subspace {
 public:
  explicit Subspace(int level);

  static Subspace span(int level, const std::vector<Vector>& vectors);
  static Subspace span_elements(int level, const std::vector<Element>& elements);
  static Subspace full(int level);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] std::size_t ambient_dimension() const noexcept { return echelon_.columns(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return echelon_.rank(); }
  [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return echelon_.rows(); }
  [[nodiscard]] std::vector<Element> basis_elements() const;

  [[nodiscard]] bool contains(const Vector& v) const { return echelon_.contains(v); }
  [[nodiscard]] bool contains(const Element& x) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.level_ == b.level_ && a.basis() == b.basis();
  }

 private:
  int level_;
  RowEchelon echelon_;
};

/// The coordinate vector of a gauge-invariant element at level k.
Vector coordinates(const Element& x, int level);

}  // namespace cuntz
