#pragma once

#include <random>

#include "cuntz/element.hpp"
#include "cuntz/permutation.hpp"

namespace testing {

struct Random {
  std::mt19937 gen;
  explicit Random(unsigned seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  cuntz::Word word(int min_len, int max_len) {
    const int len = uniform(min_len, max_len);
    std::string s;
    for (int i = 0; i < len; ++i) s += static_cast<char>('1' + uniform(0, 1));
    return cuntz::Word::parse(s);
  }

  cuntz::Scalar scalar() {
    int num = 0;
    while (num == 0) num = uniform(-3, 3);
    return cuntz::Scalar(num, uniform(1, 3));
  }

  /// Random terms with words of length <= max_len; degree 0 when `invariant`.
  cuntz::Element element(int max_terms, int max_len, bool invariant) {
    cuntz::TermMap raw;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      const auto alpha = word(0, max_len);
      const auto beta = invariant ? word(alpha.size(), alpha.size()) : word(0, max_len);
      raw[{alpha, beta}] += scalar();
    }
    return cuntz::Element::canonicalize(raw);
  }

  /// A single word s_a s_b^*.
  cuntz::Element monomial(int max_len) { return cuntz::Element::monomial(word(0, max_len), word(0, max_len)); }

  cuntz::Permutation permutation(int rank) {
    std::vector<std::uint32_t> images(std::size_t{1} << rank);
    for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), gen);
    return cuntz::Permutation::from_images(rank, images);
  }
};

}  // namespace testing
