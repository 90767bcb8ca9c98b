#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/word.hpp"

namespace cuntz {

/// A permutation of {1,2}^k, equivalently of {1,...,2^k} under the
/// lexicographic identification (for k = 2: 11->1, 12->2, 21->3, 22->4).
class Permutation {
 public:
  Permutation() : Permutation(identity(1)) {}

  static Permutation identity(int rank);
  /// One-line notation on {1,...,2^rank}, 1-based.
  static Permutation from_one_line(int rank, const std::vector<int>& images);
  /// Images as 0-based lexicographic word ranks.
  static Permutation from_images(int rank, std::vector<std::uint32_t> images);

  /// Accepts "id", cycle notation with juxtaposed cycles such as "(12)(34)"
  /// or "(142)", and one-line notation such as "2134". Points are the digits
  /// 1..2^rank.
  static Permutation parse(std::string_view text, int rank = 2);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  [[nodiscard]] const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  /// The image of a word of length rank.
  [[nodiscard]] Word apply(const Word& w) const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  /// (this ∘ inner)(x) = this(inner(x)).
  [[nodiscard]] Permutation compose(const Permutation& inner) const;
  /// The same permutation acting on words one letter longer (trailing leg
  /// untouched).
  [[nodiscard]] Permutation pad() const;
  /// True if the last letter is never moved and never influences the rest,
  /// i.e. the permutation is the padding of a lower-rank one.
  [[nodiscard]] bool is_padded() const;

  /// "id", "(12)(34)", "(142)": cycles start at their least point and are
  /// sorted by it; fixed points omitted.
  [[nodiscard]] std::string cycle_notation() const;
  /// "2134".
  [[nodiscard]] std::string one_line() const;
  /// Subscript label: "id", "12", "142", "(12)(34)".
  [[nodiscard]] std::string label() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(int rank, std::vector<std::uint32_t> images) : rank_(rank), images_(std::move(images)) {}

  [[nodiscard]] std::vector<std::vector<std::uint32_t>> cycles() const;

  int rank_;
  std::vector<std::uint32_t> images_;
};

/// All permutations of the given rank in lexicographic one-line order.
std::vector<Permutation> all_permutations(int rank);

/// The 24 rank-2 permutations in table order: identity, transpositions,
/// 3-cycles, 4-cycles, double transpositions.
std::vector<Permutation> rank2_table_order();

}  // namespace cuntz
