#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cuntz/endomorphism.hpp"

namespace cuntz {

/// Ad(v) ∘ rho_left = rho_right on generators, with v = u_witness.
struct EquivalenceWitness {
  Permutation left;
  Permutation right;
  Permutation witness;
  /// Least rank at which the witness permutation lives.
  int witness_rank = 1;
  Element witness_unitary;
};

/// Candidate witnesses: permutations of rank 1..rank_bound in lexicographic
/// one-line order, each rank skipping those already seen at a lower rank.
std::vector<Permutation> witness_candidates(int rank_bound);

/// Searches permutation unitaries v of rank <= rank_bound with
/// v rho(s_i) v^* = rho'(s_i). A miss does not certify inequivalence.
std::optional<EquivalenceWitness> inner_equivalence_witness(const PermEndomorphism& rho,
                                                            const PermEndomorphism& rho_prime, int rank_bound);

/// Generator images v x_i v^* = y_i against a prepared candidate list; the
/// building block shared by the searches above and below.
std::optional<Permutation> find_conjugating_permutation(const std::array<Element, 2>& from,
                                                        const std::array<Element, 2>& to,
                                                        const std::vector<Permutation>& candidates);

/// An inner witness against the identity: v s_i v^* = rho(s_i).
std::optional<EquivalenceWitness> inner_witness(const PermEndomorphism& rho, int rank_bound);

struct EquivalencePartition {
  /// Classes in table order, each listed in table order.
  std::vector<std::vector<Permutation>> classes;
  /// One witness for every pair found directly.
  std::vector<EquivalenceWitness> witnesses;

  /// The class containing p.
  [[nodiscard]] const std::vector<Permutation>& class_of(const Permutation& p) const;
};

/// The partition of the 24 rank-2 permutation endomorphisms induced by the
/// witness search (transitive closure of all pairs found).
EquivalencePartition equivalence_classes(int rank_bound, int jobs = 1);

}  // namespace cuntz
