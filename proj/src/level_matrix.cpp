#include "cuntz/level_matrix.hpp"

#include "cuntz/error.hpp"

namespace cuntz {

LevelMatrix::LevelMatrix(int level)
    : level_(level), dim_(std::size_t{1} << level), entries_(dim_ * dim_, Scalar(0)) {
  if (level < 0 || level > 12) throw Error(ErrorKind::BadLevels, "level out of range: " + std::to_string(level));
}

LevelMatrix LevelMatrix::identity(int level) {
  LevelMatrix m(level);
  for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = Scalar(1);
  return m;
}

LevelMatrix LevelMatrix::unit(int level, std::size_t row, std::size_t col) {
  LevelMatrix m(level);
  m(row, col) = Scalar(1);
  return m;
}

LevelMatrix LevelMatrix::from_coordinates(int level, std::vector<Scalar> coords) {
  LevelMatrix m(level);
  if (coords.size() != m.entries_.size()) throw Error(ErrorKind::BadLevels, "coordinate count mismatch");
  m.entries_ = std::move(coords);
  return m;
}

LevelMatrix LevelMatrix::transpose() const {
  LevelMatrix t(level_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LevelMatrix LevelMatrix::pad(int extra) const { return tensor(*this, identity(extra)); }

Element LevelMatrix::to_element() const {
  TermMap raw;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero((*this)(i, j)))
        raw.emplace(Term{Word::from_index(i, level_), Word::from_index(j, level_)}, (*this)(i, j));
  return Element::canonicalize(raw);
}

Scalar LevelMatrix::normalized_trace() const {
  Scalar t(0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t / Scalar(Integer(dim_));
}

LevelMatrix operator*(const LevelMatrix& a, const LevelMatrix& b) {
  if (a.level_ != b.level_) throw Error(ErrorKind::BadLevels, "multiplying matrices of different levels");
  LevelMatrix c(a.level_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < a.dim_; ++j)
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
    }
  return c;
}

LevelMatrix operator+(const LevelMatrix& a, const LevelMatrix& b) {
  if (a.level_ != b.level_) throw Error(ErrorKind::BadLevels, "adding matrices of different levels");
  LevelMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

LevelMatrix operator-(const LevelMatrix& a, const LevelMatrix& b) { return a + Scalar(-1) * b; }

LevelMatrix operator*(const Scalar& s, const LevelMatrix& a) {
  LevelMatrix c = a;
  for (auto& e : c.entries_) e *= s;
  return c;
}

LevelMatrix tensor(const LevelMatrix& a, const LevelMatrix& b) {
  LevelMatrix c(a.level() + b.level());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          if (!is_zero(b(k, l))) c(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    }
  return c;
}

LevelMatrix embed_to_level(const Element& x, int k) {
  if (!x.is_gauge_invariant()) throw Error(ErrorKind::NonZeroGaugeDegree, to_string(x));
  if (x.max_word_length() > k)
    throw Error(ErrorKind::LevelTooSmall,
                "word of length " + std::to_string(x.max_word_length()) + " at level " + std::to_string(k));
  LevelMatrix m(k);
  for (const auto& [t, c] : x.terms()) {
    // s_a s_b^* = sum_w s_{aw} s_{bw}^* over words w filling the level.
    const int extra = k - t.alpha.size();
    const std::size_t row0 = t.alpha.index() << extra;
    const std::size_t col0 = t.beta.index() << extra;
    for (std::size_t w = 0; w < (std::size_t{1} << extra); ++w) m(row0 + w, col0 + w) += c;
  }
  return m;
}

LevelMatrix expect_onto_level(const LevelMatrix& x, int k) {
  if (k < 0 || k > x.level())
    throw Error(ErrorKind::BadLevels, "cannot expect level " + std::to_string(x.level()) + " onto " + std::to_string(k));
  const int traced = x.level() - k;
  const std::size_t block = std::size_t{1} << traced;
  LevelMatrix out(k);
  const Scalar norm = Scalar(1) / Scalar(Integer(block));
  for (std::size_t i = 0; i < out.dim(); ++i)
    for (std::size_t j = 0; j < out.dim(); ++j) {
      Scalar sum(0);
      for (std::size_t w = 0; w < block; ++w) sum += x(i * block + w, j * block + w);
      out(i, j) = sum * norm;
    }
  return out;
}

}  // namespace cuntz
