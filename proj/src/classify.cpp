#include "cuntz/classify.hpp"

#include "cuntz/error.hpp"

namespace cuntz {

std::string to_string(Property p) {
  switch (p) {
    case Property::Inner: return "inn";
    case Property::Outer: return "out";
    case Property::Irreducible: return "irr";
    case Property::Reducible: return "red";
  }
  return "?";
}

Property parse_property(const std::string& text) {
  if (text == "inn") return Property::Inner;
  if (text == "out") return Property::Outer;
  if (text == "irr") return Property::Irreducible;
  if (text == "red") return Property::Reducible;
  throw Error(ErrorKind::ParseError, "unknown property '" + text + "'");
}

namespace {

[[noreturn]] void conflict(const Permutation& p, const std::string& what) {
  throw Error(ErrorKind::ConsistencyViolation, p.cycle_notation() + ": " + what);
}

CommutantCertificate search_commutant(const PermEndomorphism& rho, int depth_cap) {
  CommutantCertificate cert;
  for (int k = 1; k <= depth_cap; ++k) {
    const Subspace fixed = commutant_fixed_points(rho.endo(), k);
    cert.dims.push_back(static_cast<int>(fixed.dimension()));
    if (fixed.dimension() == 0) conflict(rho.perm(), "fixed-point space misses the scalars");
    if (fixed.dimension() > 1) {
      cert.witness_level = k;
      cert.witness = non_scalar_element(fixed);
      cert.verified = cert.witness && commutes_with_image(rho.endo(), *cert.witness);
      if (!cert.verified) conflict(rho.perm(), "commutant witness fails to commute with the image");
      break;
    }
  }
  return cert;
}

}  // namespace

Classification classify(const Permutation& sigma, const ClassifyOptions& options) {
  if (sigma.rank() != 2) throw Error(ErrorKind::RankUnsupported, "classification is defined for rank 2");
  if (options.depth_cap < 2) throw Error(ErrorKind::BadLevels, "depth cap must be at least 2");
  const PermEndomorphism rho(sigma);

  Classification out;
  out.perm = sigma;
  out.xi = jones_index_via_xi(rho);
  out.commutant = search_commutant(rho, options.depth_cap);
  out.diagonal = analyze_diagonal(rho, options.diagonal_depth);
  out.automorphism_order = automorphism_order(rho.endo(), options.order_bound);

  if (out.diagonal.verdict == DiagonalVerdict::Inconclusive)
    throw Error(ErrorKind::Inconclusive, sigma.cycle_notation() + ": diagonal restriction undecided");
  out.diagonal_entropy_zero = out.diagonal.verdict == DiagonalVerdict::Automorphism;

  if (out.automorphism_order) {
    out.inner_witness = inner_witness(rho, options.rank_bound);
    out.property = out.inner_witness ? Property::Inner : Property::Outer;
    out.index = 1;
    out.entropy_zero = true;
    if (out.commutant.witness) conflict(sigma, "automorphism with a nontrivial relative commutant");
    if (out.xi.index && out.xi.index != 1) conflict(sigma, "automorphism but dim Xi = " + std::to_string(*out.xi.index));
    // rho^n = id and rho(D_2) ⊆ D_2 force rho|D_2 onto.
    if (!out.diagonal_entropy_zero) conflict(sigma, "automorphism not restricting to an automorphism of D_2");
    return out;
  }

  if (out.commutant.witness) {
    out.property = Property::Reducible;
    out.index = 4;
    if (out.xi.index && out.xi.index != 4)
      conflict(sigma, "reducible but the Xi route gives " + std::to_string(*out.xi.index));
    return out;
  }

  if (!out.xi.index)
    throw Error(ErrorKind::Inconclusive,
                sigma.cycle_notation() + ": no commutant witness up to level " + std::to_string(options.depth_cap) +
                    " and the Xi hypotheses fail (" + out.xi.failing_check + ")");
  out.property = Property::Irreducible;
  out.index = *out.xi.index;
  if (out.index == 1) conflict(sigma, "proper endomorphism with dim Xi = 1");
  return out;
}

std::string rho_name(const Permutation& p) { return p.is_identity() ? "id" : "ρ_" + p.label(); }

std::string CompositionIdentity::str() const {
  std::string out = rho_name(lhs) + " =";
  bool first = true;
  for (const auto& f : factors) {
    out += first ? " " : " ∘ ";
    out += f.kind == Factor::Kind::Adjoint ? "Ad(u_" + f.perm.label() + ")" : rho_name(f.perm);
    first = false;
  }
  return out;
}

std::vector<CompositionIdentity> composition_identities() {
  auto p = [](const char* s) { return Permutation::parse(s); };
  auto rho = [&](const char* s) { return Factor{Factor::Kind::Endomorphism, p(s)}; };
  auto ad_flip = Factor{Factor::Kind::Adjoint, p("(13)(24)")};
  return {
      {p("(34)"), {rho("(12)(34)"), rho("(12)")}},
      {p("(1324)"), {ad_flip, rho("(12)")}},
      {p("(1423)"), {ad_flip, rho("(34)")}},
      {p("(24)"), {rho("(13)"), rho("(13)(24)")}},
      {p("(1234)"), {ad_flip, rho("(24)")}},
      {p("(1432)"), {ad_flip, rho("(13)")}},
      {p("(134)"), {rho("(142)"), rho("(13)(24)")}},
  };
}

CompositionCheck check_identity(const CompositionIdentity& identity,
                                const std::function<int(const Permutation&)>& index_of) {
  CompositionCheck check{identity};
  Endomorphism rhs = Endomorphism::identity();
  check.product_index = 1;
  for (auto it = identity.factors.rbegin(); it != identity.factors.rend(); ++it) {
    if (it->kind == Factor::Kind::Adjoint) {
      rhs = compose(ad(permutation_unitary(it->perm)), rhs);
    } else {
      rhs = compose(PermEndomorphism(it->perm).endo(), rhs);
      check.product_index *= index_of(it->perm);
    }
  }
  check.holds = rhs == PermEndomorphism(identity.lhs).endo();
  check.lhs_index = index_of(identity.lhs);
  return check;
}

CompositionCheck check_identity(const CompositionIdentity& identity, const ClassifyOptions& options) {
  return check_identity(identity, [&](const Permutation& p) { return classify(p, options).index; });
}

std::vector<CompositionCheck> verify_composition_identities(const ClassifyOptions& options) {
  std::vector<CompositionCheck> out;
  for (const auto& identity : composition_identities()) out.push_back(check_identity(identity, options));
  return out;
}

}  // namespace cuntz
