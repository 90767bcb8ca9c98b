#pragma once

#include <map>
#include <set>
#include <string>

#include "cuntz/scalar.hpp"
#include "cuntz/word.hpp"

namespace cuntz {

/// The formal operator s_alpha s_beta^*, written s_{alpha,beta}.
struct Term {
  Word alpha;
  Word beta;

  [[nodiscard]] int degree() const noexcept { return alpha.size() - beta.size(); }

  // Ordered by the starred word first: this is the order in which generator
  // images are displayed (s_{12,1}+s_{11,2}).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
  friend bool operator==(const Term&, const Term&) = default;
};

using TermMap = std::map<Term, Scalar>;

/// A finite rational combination of words s_alpha s_beta^* in the Cuntz
/// algebra O_2, held in canonical (fully sibling-merged) normal form.
///
/// Canonical form: within each family of terms sharing a root (the pair left
/// after stripping the longest common suffix of alpha and beta) the terms
/// describe disjoint cones, and no two sibling cones (a1,b1), (a2,b2) carry
/// the same coefficient. Two elements are equal iff their term maps are equal.
class Element {
 public:
  Element() = default;

  /// Normalizes an arbitrary coefficient map (overlapping cones, zeros,
  /// unmerged siblings are all allowed).
  static Element canonicalize(const TermMap& raw);

  static Element unit();
  /// s_1 or s_2.
  static Element generator(int i);
  static Element monomial(const Word& alpha, const Word& beta, const Scalar& coefficient = Scalar(1));

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// The set of gauge degrees |alpha|-|beta| present.
  [[nodiscard]] std::set<int> degrees() const;
  /// True when every term has gauge degree 0 (the zero element included).
  [[nodiscard]] bool is_gauge_invariant() const;
  [[nodiscard]] int max_word_length() const;

  [[nodiscard]] Element adjoint() const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const Scalar& c, const Element& x);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  explicit Element(TermMap terms) : terms_(std::move(terms)) {}

  TermMap terms_;
};

Element multiply(const Element& x, const Element& y);
Element adjoint(const Element& x);

/// Rewrites every term (a,b) into sum_{|w|=levels} (aw,bw). The result is a
/// raw map, not canonical.
TermMap expand(const Element& x, int levels);

/// Equality decided independently of the canonical form: both sides are
/// expanded, degree by degree, to a common length of the starred word and the
/// coefficient maps compared.
bool equal_by_expansion(const Element& x, const Element& y);

/// The canonical KMS state: omega(s_a s_b^*) = 2^{-|a|} if a = b, else 0.
Scalar omega(const Element& x);

/// Conditional expectation onto the gauge-invariant part (drops degree != 0).
Element gauge_expectation(const Element& x);

/// phi(x) = s_1 x s_1^* + s_2 x s_2^*.
Element canonical_shift(const Element& x);

/// "s_{12,1} + 1/2·s_{2} - s_{∅,1}"; the zero element renders as "0" and the
/// unit term as "1".
std::string to_string(const Element& x);

/// Same terms without spaces around '+', as in "s_{12,1}+s_{11,2}".
std::string to_compact_string(const Element& x);

/// Inverse of to_string / to_compact_string (whitespace-insensitive).
Element parse_element(const std::string& text);

}  // namespace cuntz
