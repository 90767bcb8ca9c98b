#include "cuntz/subspace.hpp"

#include <algorithm>

#include "cuntz/error.hpp"
#include "cuntz/level_matrix.hpp"

namespace cuntz {

void RowEchelon::reduce(Vector& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = row[pivots_[r]];
    if (is_zero(f)) continue;
    const Vector& basis = rows_[r];
    for (std::size_t j = pivots_[r]; j < columns_; ++j)
      if (!is_zero(basis[j])) row[j] -= f * basis[j];
  }
}

bool RowEchelon::add(Vector row) {
  if (row.size() != columns_) throw Error(ErrorKind::BadLevels, "row length mismatch");
  reduce(row);
  const auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !is_zero(s); });
  if (lead == row.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - row.begin());
  const Scalar inv = Scalar(1) / *lead;
  for (std::size_t j = pivot; j < columns_; ++j)
    if (!is_zero(row[j])) row[j] *= inv;
  // Clear the new pivot column from the existing rows.
  for (auto& other : rows_) {
    const Scalar f = other[pivot];
    if (is_zero(f)) continue;
    for (std::size_t j = pivot; j < columns_; ++j)
      if (!is_zero(row[j])) other[j] -= f * row[j];
  }
  const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, pivot);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

bool RowEchelon::contains(Vector row) const {
  if (row.size() != columns_) throw Error(ErrorKind::BadLevels, "row length mismatch");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Scalar& s) { return is_zero(s); });
}

std::vector<Vector> RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(columns_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns_, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(int level) : level_(level), echelon_(std::size_t{1} << (2 * level)) {}

Subspace Subspace::span(int level, const std::vector<Vector>& vectors) {
  Subspace s(level);
  for (const auto& v : vectors) s.echelon_.add(v);
  return s;
}

Subspace Subspace::span_elements(int level, const std::vector<Element>& elements) {
  Subspace s(level);
  for (const auto& e : elements) s.echelon_.add(coordinates(e, level));
  return s;
}

Subspace Subspace::full(int level) {
  Subspace s(level);
  for (std::size_t i = 0; i < s.ambient_dimension(); ++i) {
    Vector v(s.ambient_dimension(), Scalar(0));
    v[i] = Scalar(1);
    s.echelon_.add(std::move(v));
  }
  return s;
}

std::vector<Element> Subspace::basis_elements() const {
  std::vector<Element> out;
  for (const auto& v : basis()) out.push_back(LevelMatrix::from_coordinates(level_, v).to_element());
  return out;
}

bool Subspace::contains(const Element& x) const { return contains(coordinates(x, level_)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(), [&](const Vector& v) { return contains(v); });
}

Vector coordinates(const Element& x, int level) { return embed_to_level(x, level).coordinates(); }

}  // namespace cuntz
