#pragma once

#include <array>
#include <optional>

#include "cuntz/element.hpp"
#include "cuntz/permutation.hpp"

namespace cuntz {

/// u_sigma = sum over words a of length k of s_{sigma(a)} s_a^*.
Element permutation_unitary(const Permutation& sigma);

/// True if v v^* = v^* v = 1.
bool is_unitary(const Element& v);

/// The endomorphism lambda_u of O_2 determined by lambda_u(s_i) = u s_i, for
/// a gauge-invariant unitary u of any rank.
///
/// Endomorphisms are compared by their generator images only, which
/// determine them.
class Endomorphism {
 public:
  Endomorphism() : Endomorphism(Element::unit()) {}
  /// Throws NonZeroGaugeDegree or NotUnitary.
  explicit Endomorphism(Element unitary);

  static Endomorphism identity() { return Endomorphism(); }

  [[nodiscard]] const Element& unitary() const noexcept { return unitary_; }
  /// Smallest level containing u.
  [[nodiscard]] int rank() const noexcept { return rank_; }
  /// lambda(s_i), i in {1,2}.
  [[nodiscard]] const Element& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  /// Extends s_i -> u s_i multiplicatively and *-linearly.
  [[nodiscard]] Element apply(const Element& x) const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.images_ == b.images_; }

 private:
  struct Unchecked {};
  Endomorphism(Element unitary, Unchecked);
  friend Endomorphism compose(const Endomorphism&, const Endomorphism&);
  friend Endomorphism ad(const Element&);

  Element unitary_;
  int rank_ = 0;
  std::array<Element, 2> images_;
};

Element endo_apply(const Endomorphism& rho, const Element& x);

/// outer ∘ inner = lambda_{outer(w) u} for outer = lambda_u, inner = lambda_w.
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// Ad(v): x -> v x v^*, realized as lambda_{v phi(v^*)}. Throws NotUnitary.
Endomorphism ad(const Element& v);

/// A permutation together with its unitary and induced endomorphism rho_sigma.
class PermEndomorphism {
 public:
  explicit PermEndomorphism(Permutation sigma);

  [[nodiscard]] const Permutation& perm() const noexcept { return perm_; }
  [[nodiscard]] int rank() const noexcept { return perm_.rank(); }
  [[nodiscard]] const Element& unitary() const noexcept { return endo_.unitary(); }
  [[nodiscard]] const Endomorphism& endo() const noexcept { return endo_; }
  [[nodiscard]] Element apply(const Element& x) const { return endo_.apply(x); }

 private:
  Permutation perm_;
  Endomorphism endo_;
};

/// Least n <= bound with rho^n = id on generators, or nullopt.
std::optional<int> automorphism_order(const Endomorphism& rho, int bound);

/// v x v^* for the permutation unitary v = u_sigma, computed by relabelling
/// word prefixes instead of multiplying.
Element conjugate(const Permutation& sigma, const Element& x);

}  // namespace cuntz
