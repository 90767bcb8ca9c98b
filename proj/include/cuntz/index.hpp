#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuntz/endomorphism.hpp"
#include "cuntz/subspace.hpp"

namespace cuntz {

/// Outcome of the Xi-subspace computation and the index theorem hypotheses.
struct XiCertificate {
  /// dim Xi_0 >= dim Xi_1 >= ...; the last two entries are equal.
  std::vector<int> chain_dims;
  Subspace xi{1};
  bool square_closed = false;
  bool condition_a = false;
  bool condition_b = false;
  /// dim Xi when all three hypotheses hold.
  std::optional<int> index;
  /// Names the first hypothesis that failed when index is empty.
  std::string failing_check;
};

/// Xi_0 = F_2^1 and Xi_{s+1} = span{ s_i^* u^* x u s_j : x in Xi_s }, iterated
/// to its fixed point. Only chain_dims and xi are filled in.
/// Throws RankUnsupported unless rank 2, NoStabilization after 8 steps.
XiCertificate xi_subspace(const PermEndomorphism& rho);

/// Xi^2 ⊆ Xi for a subspace of level 1.
bool xi_square_check(const Subspace& xi);

/// omega(a lambda_u(b)) = omega(a) omega(b) for a in xi and b in F_2^1.
bool condition_a(const PermEndomorphism& rho, const Subspace& xi);

/// E_1(u^* a u) = omega(a) 1 for a in xi.
bool condition_b(const PermEndomorphism& rho, const Subspace& xi);

/// Runs all of the above. The index, when present, is dim Xi and lies in
/// {1,2,4}; anything else throws IndexOutOfRange.
XiCertificate jones_index_via_xi(const PermEndomorphism& rho);

/// Psi(x) = sum_i lambda(s_i) x lambda(s_i)^* = u phi(x) u^*.
Element transfer(const Endomorphism& rho, const Element& x);

/// {x in F_2^k : u phi(x) u^* = x}, the level-k part of lambda(O_2)' ∩ O_2.
Subspace commutant_fixed_points(const Endomorphism& rho, int k);

/// The same space for rho_sigma, where u phi(x) u^* is a relabeling of words.
Subspace permutation_commutant(const Permutation& sigma, int k);

/// {x in F_2^m : x lambda(a) = lambda(a) x for all a in F_2^k}.
Subspace uhf_commutant(const Endomorphism& rho, int k, int m);

/// A basis element of `space` that is not a multiple of 1, if any.
std::optional<Element> non_scalar_element(const Subspace& space);

/// x lambda(s_i) = lambda(s_i) x for i = 1, 2, checked in the word calculus.
bool commutes_with_image(const Endomorphism& rho, const Element& x);

}  // namespace cuntz
