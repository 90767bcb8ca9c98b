#include "cuntz/endomorphism.hpp"

#include <unordered_map>

#include "cuntz/error.hpp"

namespace cuntz {

Element permutation_unitary(const Permutation& sigma) {
  TermMap raw;
  for (std::uint32_t a = 0; a < sigma.size(); ++a)
    raw.emplace(Term{Word::from_index(sigma(a), sigma.rank()), Word::from_index(a, sigma.rank())}, Scalar(1));
  return Element::canonicalize(raw);
}

bool is_unitary(const Element& v) {
  const Element one = Element::unit();
  return v * v.adjoint() == one && v.adjoint() * v == one;
}

Endomorphism::Endomorphism(Element unitary) : Endomorphism(std::move(unitary), Unchecked{}) {
  if (!unitary_.is_gauge_invariant())
    throw Error(ErrorKind::NonZeroGaugeDegree, "endomorphism unitary must be gauge invariant");
  if (!is_unitary(unitary_)) throw Error(ErrorKind::NotUnitary, to_string(unitary_));
}

Endomorphism::Endomorphism(Element unitary, Unchecked)
    : unitary_(std::move(unitary)),
      rank_(unitary_.max_word_length()),
      images_{unitary_ * Element::generator(1), unitary_ * Element::generator(2)} {}

namespace {

// lambda(s_a) for words a, memoized along prefixes for one evaluation.
class WordImages {
 public:
  explicit WordImages(const Endomorphism& rho) : rho_(rho) {}

  const Element& of(const Word& a) {
    if (auto it = cache_.find(a); it != cache_.end()) return it->second;
    Element value = a.empty() ? Element::unit() : of(a.pop_back()) * rho_.image(a.back());
    return cache_.emplace(a, std::move(value)).first->second;
  }

 private:
  const Endomorphism& rho_;
  std::unordered_map<Word, Element> cache_;
};

}  // namespace

Element Endomorphism::apply(const Element& x) const {
  WordImages images(*this);
  TermMap raw;
  for (const auto& [t, c] : x.terms()) {
    const Element piece = images.of(t.alpha) * images.of(t.beta).adjoint();
    for (const auto& [pt, pc] : piece.terms()) {
      auto [it, inserted] = raw.try_emplace(pt, c * pc);
      if (!inserted) it->second += c * pc;
    }
  }
  return Element::canonicalize(raw);
}

Element endo_apply(const Endomorphism& rho, const Element& x) { return rho.apply(x); }

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  // Unitaries are closed under this product, so no recheck is needed.
  return Endomorphism(outer.apply(inner.unitary()) * outer.unitary(), Endomorphism::Unchecked{});
}

Endomorphism ad(const Element& v) {
  if (!v.is_gauge_invariant()) throw Error(ErrorKind::NonZeroGaugeDegree, "Ad needs a gauge-invariant unitary");
  if (!is_unitary(v)) throw Error(ErrorKind::NotUnitary, to_string(v));
  return Endomorphism(v * canonical_shift(v.adjoint()), Endomorphism::Unchecked{});
}

PermEndomorphism::PermEndomorphism(Permutation sigma)
    : perm_(std::move(sigma)), endo_(permutation_unitary(perm_)) {}

std::optional<int> automorphism_order(const Endomorphism& rho, int bound) {
  if (bound < 1) throw Error(ErrorKind::BadLevels, "order bound must be at least 1");
  const std::array<Element, 2> generators{Element::generator(1), Element::generator(2)};
  std::array<Element, 2> current{rho.image(1), rho.image(2)};
  for (int n = 1; n <= bound; ++n) {
    if (current == generators) return n;
    if (n < bound) current = {rho.apply(current[0]), rho.apply(current[1])};
  }
  return std::nullopt;
}

Element conjugate(const Permutation& sigma, const Element& x) {
  // With |a|, |b| >= k: u s_a s_b^* u^* = s_{sigma(a[0,k)) a[k,..)} s_{sigma(b[0,k)) b[k,..)}^*.
  const int k = sigma.rank();
  TermMap raw;
  auto relabel = [&](const Word& w) { return sigma.apply(w.prefix(k)) + w.drop_front(k); };
  for (const auto& [t, c] : x.terms()) {
    const int extra = std::max(0, k - std::min(t.alpha.size(), t.beta.size()));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << extra); ++i) {
      const Word w = Word::from_index(i, extra);
      raw.emplace(Term{relabel(t.alpha + w), relabel(t.beta + w)}, c);
    }
  }
  return Element::canonicalize(raw);
}

}  // namespace cuntz
