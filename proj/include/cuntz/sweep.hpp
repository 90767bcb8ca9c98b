#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuntz/permutation.hpp"
#include "cuntz/report.hpp"

namespace cuntz {

/// A permutation of the words of one fixed length, acting on basis vectors
/// e_x -> e_{map[x]}; the unitary it induces lives at level `level`.
struct LevelPermutation {
  int level = 0;
  std::vector<std::uint32_t> map;

  static LevelPermutation identity(int level);
  static LevelPermutation from(const Permutation& p);

  [[nodiscard]] bool is_identity() const;
  /// The same unitary at a higher level (identity on the trailing legs).
  [[nodiscard]] LevelPermutation pad_to(int level) const;
  /// phi(u): acts on legs 2.., leaving the first letter alone.
  [[nodiscard]] LevelPermutation shift() const;
  [[nodiscard]] LevelPermutation inverse() const;
  /// Strips trailing legs on which the permutation acts trivially.
  [[nodiscard]] LevelPermutation reduced() const;

  friend bool operator==(const LevelPermutation&, const LevelPermutation&) = default;
};

/// The unitary a * b, padding both to a common level.
LevelPermutation operator*(const LevelPermutation& a, const LevelPermutation& b);

/// lambda_u(v) for permutation unitaries: W (v ⊗ 1) W^*, with
/// W = u phi(u) ... phi^{L-1}(u).
LevelPermutation lambda(const LevelPermutation& u, const LevelPermutation& v);

/// Least n <= bound with rho_sigma^n = id, computed on permutations instead of
/// in the word calculus (rho^{n+1} = lambda_{lambda_u(U_n) u}).
std::optional<int> permutation_automorphism_order(const Permutation& sigma, int bound);

enum class SweepVerdict { Automorphism, ReducibleWitnessFound, Unknown };

/// "automorphism", "reducible-witness-found", "unknown".
std::string to_string(SweepVerdict v);

struct SweepRow {
  Permutation perm;
  SweepVerdict verdict = SweepVerdict::Unknown;
  std::optional<int> order;
  std::vector<int> commutant_dims;
  std::optional<std::string> witness;
};

struct SweepOptions {
  int rank = 3;
  int order_bound = 4;
  int depth = 2;
  int jobs = 1;
};

struct SweepReport {
  SweepOptions options;
  std::vector<SweepRow> rows;  // lexicographic one-line order

  [[nodiscard]] std::size_t count(SweepVerdict v) const;
};

/// Semi-classifies every permutation of the given rank. No index is ever
/// attached: the Xi route only covers rank 2.
SweepReport sweep(const SweepOptions& options);

/// Markdown and latex give the verdict counts and the automorphisms; csv and
/// json list every permutation.
std::string render(const SweepReport& report, Format format);

}  // namespace cuntz
