#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cuntz {

/// A finite word over the alphabet {1,2}; the multi-index alpha of s_alpha.
///
/// Letters are packed most-significant-first (letter 1 -> bit 0, letter 2 ->
/// bit 1), so comparing (bits, size) is exactly the lexicographic order of the
/// digit strings, with a proper prefix sorting first.
class Word {
 public:
  static constexpr int max_size = 64;

  Word() = default;

  /// Parses a digit string such as "12". The empty string and "∅" give the
  /// empty word.
  static Word parse(std::string_view digits);

  /// The word of the given length whose lexicographic rank is `index`.
  static Word from_index(std::uint64_t index, int length);

  static Word letter_word(int letter);

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

  /// Letter at position i (0-based), 1 or 2.
  [[nodiscard]] int operator[](int i) const noexcept {
    return static_cast<int>((bits_ >> (63 - i)) & 1U) + 1;
  }
  [[nodiscard]] int back() const noexcept { return (*this)[size_ - 1]; }

  /// Lexicographic rank among the words of the same length.
  [[nodiscard]] std::uint64_t index() const noexcept {
    return size_ == 0 ? 0 : bits_ >> (64 - size_);
  }

  [[nodiscard]] Word prefix(int n) const;
  [[nodiscard]] Word drop_front(int n) const;
  [[nodiscard]] Word pop_back() const { return prefix(size_ - 1); }
  [[nodiscard]] bool is_prefix_of(const Word& other) const noexcept;

  /// Concatenation.
  [[nodiscard]] Word operator+(const Word& tail) const;
  [[nodiscard]] Word append(int letter) const;

  /// Digit string; the empty word renders as "".
  [[nodiscard]] std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  [[nodiscard]] std::size_t hash() const noexcept {
    return std::hash<std::uint64_t>{}(bits_ ^ (static_cast<std::uint64_t>(size_) * 0x9e3779b97f4a7c15ULL));
  }

 private:
  Word(std::uint64_t bits, int size) : bits_(bits), size_(static_cast<std::uint8_t>(size)) {}

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

}  // namespace cuntz

template <>
struct std::hash<cuntz::Word> {
  std::size_t operator()(const cuntz::Word& w) const noexcept { return w.hash(); }
};
