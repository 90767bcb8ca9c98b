#include "cuntz/word.hpp"

#include "cuntz/error.hpp"

namespace cuntz {

namespace {

constexpr std::uint64_t top_mask(int n) { return n == 0 ? 0 : ~std::uint64_t{0} << (64 - n); }

}  // namespace

Word Word::parse(std::string_view digits) {
  if (digits == "∅") return {};
  if (digits.size() > static_cast<std::size_t>(max_size))
    throw Error(ErrorKind::InvalidWord, "word longer than 64 letters");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c != '1' && c != '2')
      throw Error(ErrorKind::InvalidWord, "letters must be 1 or 2, got '" + std::string(digits) + "'");
    if (c == '2') bits |= std::uint64_t{1} << (63 - i);
  }
  return {bits, static_cast<int>(digits.size())};
}

Word Word::from_index(std::uint64_t index, int length) {
  if (length < 0 || length > max_size) throw Error(ErrorKind::InvalidWord, "bad word length");
  if (length == 0) return {};
  return {index << (64 - length), length};
}

Word Word::letter_word(int letter) {
  if (letter != 1 && letter != 2) throw Error(ErrorKind::InvalidWord, "letter must be 1 or 2");
  return {letter == 2 ? std::uint64_t{1} << 63 : 0, 1};
}

Word Word::prefix(int n) const { return {bits_ & top_mask(n), n}; }

Word Word::drop_front(int n) const { return {n >= 64 ? 0 : bits_ << n, size_ - n}; }

bool Word::is_prefix_of(const Word& other) const noexcept {
  return size_ <= other.size_ && (other.bits_ & top_mask(size_)) == bits_;
}

Word Word::operator+(const Word& tail) const {
  if (size_ + tail.size_ > max_size) throw Error(ErrorKind::InvalidWord, "word longer than 64 letters");
  if (tail.size_ == 0) return *this;
  return {bits_ | (tail.bits_ >> size_), size_ + tail.size_};
}

Word Word::append(int letter) const {
  if (size_ >= max_size) throw Error(ErrorKind::InvalidWord, "word longer than 64 letters");
  return {letter == 2 ? bits_ | (std::uint64_t{1} << (63 - size_)) : bits_, size_ + 1};
}

std::string Word::str() const {
  std::string out(static_cast<std::size_t>(size_), '1');
  for (int i = 0; i < size_; ++i)
    if ((*this)[i] == 2) out[static_cast<std::size_t>(i)] = '2';
  return out;
}

}  // namespace cuntz
