#include "cuntz/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cuntz/error.hpp"

namespace cuntz {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > 4)
    throw Error(ErrorKind::InvalidPermutation, "rank must be between 1 and 4, got " + std::to_string(rank));
}

}  // namespace

Permutation Permutation::identity(int rank) {
  check_rank(rank);
  std::vector<std::uint32_t> images(std::size_t{1} << rank);
  std::iota(images.begin(), images.end(), 0U);
  return {rank, std::move(images)};
}

Permutation Permutation::from_images(int rank, std::vector<std::uint32_t> images) {
  check_rank(rank);
  const std::size_t n = std::size_t{1} << rank;
  if (images.size() != n) throw Error(ErrorKind::InvalidPermutation, "wrong number of images");
  std::vector<bool> seen(n, false);
  for (auto v : images) {
    if (v >= n || seen[v]) throw Error(ErrorKind::InvalidPermutation, "images do not form a bijection");
    seen[v] = true;
  }
  return {rank, std::move(images)};
}

Permutation Permutation::from_one_line(int rank, const std::vector<int>& images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (int v : images) {
    if (v < 1) throw Error(ErrorKind::InvalidPermutation, "one-line entries are 1-based");
    zero_based.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return from_images(rank, std::move(zero_based));
}

Permutation Permutation::parse(std::string_view text, int rank) {
  check_rank(rank);
  const std::size_t n = std::size_t{1} << rank;
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "id" || s == "()") return identity(rank);

  auto point = [&](char c) -> std::uint32_t {
    if (c < '1' || c > '9' || static_cast<std::size_t>(c - '0') > n)
      throw Error(ErrorKind::InvalidPermutation, "point '" + std::string(1, c) + "' outside 1.." + std::to_string(n) +
                                                     " in '" + std::string(text) + "'");
    return static_cast<std::uint32_t>(c - '1');
  };

  if (s.empty()) throw Error(ErrorKind::InvalidPermutation, "empty permutation");
  if (s.front() != '(') {
    if (s.size() != n)
      throw Error(ErrorKind::InvalidPermutation,
                  "one-line notation needs " + std::to_string(n) + " digits: '" + std::string(text) + "'");
    std::vector<std::uint32_t> images;
    for (char c : s) images.push_back(point(c));
    return from_images(rank, std::move(images));
  }

  // Cycles act right-to-left, as composition of functions.
  Permutation result = identity(rank);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw Error(ErrorKind::InvalidPermutation, "expected '(' in '" + std::string(text) + "'");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos)
      throw Error(ErrorKind::InvalidPermutation, "unbalanced '(' in '" + std::string(text) + "'");
    std::vector<std::uint32_t> cycle;
    for (std::size_t i = pos + 1; i < close; ++i) cycle.push_back(point(s[i]));
    std::vector<std::uint32_t> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidPermutation, "repeated point in cycle '" + std::string(text) + "'");
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result.compose(Permutation(rank, std::move(images)));
    pos = close + 1;
  }
  return result;
}

Word Permutation::apply(const Word& w) const {
  if (w.size() != rank_) throw Error(ErrorKind::InvalidPermutation, "word length does not match rank");
  return Word::from_index(images_[w.index()], rank_);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return {rank_, std::move(inv)};
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.rank_ != rank_) throw Error(ErrorKind::InvalidPermutation, "composing permutations of different rank");
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[inner.images_[i]];
  return {rank_, std::move(out)};
}

Permutation Permutation::pad() const {
  check_rank(rank_ + 1);
  std::vector<std::uint32_t> out(images_.size() * 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (images_[i >> 1] << 1) | static_cast<std::uint32_t>(i & 1);
  return {rank_ + 1, std::move(out)};
}

bool Permutation::is_padded() const {
  if (rank_ == 1) return false;
  for (std::size_t i = 0; i < images_.size(); i += 2)
    if ((images_[i] & 1U) != 0 || images_[i + 1] != images_[i] + 1) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_notation() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (auto p : c) out += std::to_string(p + 1);
    out += ')';
  }
  return out;
}

std::string Permutation::one_line() const {
  std::string out;
  for (auto v : images_) out += std::to_string(v + 1);
  return out;
}

std::string Permutation::label() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  if (cs.size() == 1) {
    std::string out;
    for (auto p : cs.front()) out += std::to_string(p + 1);
    return out;
  }
  return cycle_notation();
}

std::vector<Permutation> all_permutations(int rank) {
  Permutation p = Permutation::identity(rank);
  std::vector<std::uint32_t> images = p.images();
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(rank, images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> rank2_table_order() {
  auto key = [](const Permutation& p) {
    const std::string cycles = p.cycle_notation();
    const auto n_cycles = static_cast<int>(std::count(cycles.begin(), cycles.end(), '('));
    std::string support;
    for (char c : cycles)
      if (c >= '1' && c <= '9') support += c;
    const int moved = static_cast<int>(support.size());
    // identity, transpositions, 3-cycles, 4-cycles, then double transpositions
    const int type = n_cycles == 0 ? 0 : n_cycles == 2 ? 4 : moved - 1;
    std::sort(support.begin(), support.end());
    return std::tuple(type, support, cycles);
  };
  auto perms = all_permutations(2);
  std::sort(perms.begin(), perms.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return perms;
}

}  // namespace cuntz
