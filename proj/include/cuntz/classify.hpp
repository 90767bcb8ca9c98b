#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuntz/diagonal.hpp"
#include "cuntz/equivalence.hpp"
#include "cuntz/index.hpp"

namespace cuntz {

enum class Property { Inner, Outer, Irreducible, Reducible };

/// "inn", "out", "irr", "red".
std::string to_string(Property p);
Property parse_property(const std::string& text);

struct ClassifyOptions {
  /// Highest level searched for relative-commutant witnesses.
  int depth_cap = 3;
  /// Highest rank of permutation unitaries tried as inner witnesses.
  int rank_bound = 2;
  /// Largest n tried in rho^n = id.
  int order_bound = 8;
  /// Depth cap of the diagonal analyzer.
  int diagonal_depth = 6;
};

struct CommutantCertificate {
  /// Dimension of the level-k fixed-point space, k = 1, 2, ... (stops at the
  /// first level with a witness).
  std::vector<int> dims;
  std::optional<int> witness_level;
  std::optional<Element> witness;
  /// The witness commutes with lambda(s_1), lambda(s_2) in the word calculus.
  bool verified = false;
};

struct Classification {
  Permutation perm;
  Property property = Property::Irreducible;
  int index = 0;
  std::optional<int> automorphism_order;
  std::optional<EquivalenceWitness> inner_witness;
  XiCertificate xi;
  CommutantCertificate commutant;
  DiagonalReport diagonal;
  /// ht(rho) = 0 exactly for automorphisms.
  bool entropy_zero = false;
  /// ht(rho|D_2) = 0 exactly when rho restricts to an automorphism of D_2.
  bool diagonal_entropy_zero = false;
};

/// Decides property and index of a rank-2 permutation endomorphism:
/// automorphisms (finite order) have index 1 and are inner iff a witness is
/// found; otherwise a relative-commutant witness up to depth_cap gives a
/// reducible endomorphism of index 4; otherwise the Xi route must apply and
/// gives an irreducible one of index dim Xi. All routes are computed and
/// cross-checked. Throws Inconclusive or ConsistencyViolation rather than
/// guessing.
Classification classify(const Permutation& sigma, const ClassifyOptions& options = {});

/// One factor in a composition identity: rho_sigma or Ad(u_sigma).
struct Factor {
  enum class Kind { Endomorphism, Adjoint } kind;
  Permutation perm;
};

struct CompositionIdentity {
  Permutation lhs;
  std::vector<Factor> factors;  // outermost first
  /// "ρ_34 = ρ_(12)(34) ∘ ρ_12".
  [[nodiscard]] std::string str() const;
};

struct CompositionCheck {
  CompositionIdentity identity;
  /// Both sides agree on s_1 and s_2.
  bool holds = false;
  int lhs_index = 0;
  /// Product of the factor indices (Ad factors count as 1).
  int product_index = 0;
  [[nodiscard]] bool index_agrees() const { return lhs_index == product_index; }
};

/// The seven factorizations that reduce the remaining rank-2 endomorphisms
/// to rho_12, rho_13, rho_142 and automorphisms.
std::vector<CompositionIdentity> composition_identities();

/// Evaluates one identity; indices come from classify.
CompositionCheck check_identity(const CompositionIdentity& identity, const ClassifyOptions& options = {});

/// Same, with indices looked up from already computed classifications.
CompositionCheck check_identity(const CompositionIdentity& identity,
                                const std::function<int(const Permutation&)>& index_of);

std::vector<CompositionCheck> verify_composition_identities(const ClassifyOptions& options = {});

/// ρ_12, ρ_(12)(34), id.
std::string rho_name(const Permutation& p);

}  // namespace cuntz
