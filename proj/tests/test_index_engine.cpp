#include <doctest.h>

#include "cuntz/classify.hpp"
#include "cuntz/error.hpp"
#include "cuntz/reference.hpp"

using namespace cuntz;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
PermEndomorphism R(const char* text) { return PermEndomorphism(P(text)); }
Element el(const char* s) { return parse_element(s); }
}  // namespace

TEST_SUITE("index-engine") {
  TEST_CASE("subspaces") {
    const auto a = Subspace::span_elements(1, {el("s_{1,1}"), el("s_{2,2}")});
    const auto b = Subspace::span_elements(1, {Element::unit(), el("s_{1,1} - s_{2,2}")});
    CHECK(a == b);
    CHECK(a.dimension() == 2);
    CHECK(a.contains(Element::unit()));
    CHECK_FALSE(a.contains(el("s_{1,2}")));
    CHECK(Subspace::full(1).contains(a));
    CHECK(Subspace::full(2).dimension() == 16);
    RowEchelon e(3);
    CHECK(e.add({1, 2, 3}));
    CHECK_FALSE(e.add({2, 4, 6}));
    CHECK(e.nullspace().size() == 2);
  }

  TEST_CASE("xi_subspace") {
    const auto id = xi_subspace(R("id"));
    CHECK(id.xi == Subspace::span_elements(1, {Element::unit()}));
    CHECK(xi_subspace(R("(12)")).xi == Subspace::span_elements(1, {Element::unit(), el("s_{1,2} + s_{2,1}")}));
    CHECK(xi_subspace(R("(13)")).xi == Subspace::span_elements(1, {el("s_{1,1}"), el("s_{2,2}")}));
    CHECK(xi_subspace(R("(142)")).xi.dimension() == 4);
    CHECK_THROWS_AS(xi_subspace(PermEndomorphism(Permutation::parse("(12)", 3))), Error);
  }

  TEST_CASE("chain dims decrease and stabilize") {
    for (const auto& p : rank2_table_order()) {
      const auto dims = xi_subspace(PermEndomorphism(p)).chain_dims;
      CAPTURE(p.cycle_notation());
      REQUIRE(dims.size() >= 2);
      CHECK(dims.front() == 4);
      CHECK(dims[dims.size() - 1] == dims[dims.size() - 2]);
      CHECK(std::is_sorted(dims.rbegin(), dims.rend()));
    }
  }

  TEST_CASE("hypotheses") {
    CHECK(xi_square_check(Subspace::span_elements(1, {Element::unit(), el("s_{1,2} + s_{2,1}")})));
    CHECK(xi_square_check(Subspace::span_elements(1, {el("s_{1,1}"), el("s_{2,2}")})));
    CHECK(xi_square_check(Subspace::full(1)));
    CHECK(xi_square_check(Subspace::span_elements(1, {el("s_{1,2}")})));  // nilpotent
    CHECK_FALSE(xi_square_check(Subspace::span_elements(1, {el("s_{1,2} + s_{2,1}")})));
    for (const char* t : {"id", "(12)", "(13)", "(142)"}) {
      const auto rho = R(t);
      const auto xi = xi_subspace(rho).xi;
      CHECK(condition_a(rho, xi));
      CHECK(condition_b(rho, xi));
    }
    // Condition (b) fails for a non-scalar expectation.
    CHECK_FALSE(condition_b(R("id"), Subspace::span_elements(1, {el("s_{1,1}")})));
  }

  TEST_CASE("jones_index_via_xi") {
    CHECK(jones_index_via_xi(R("(12)")).index == 2);
    CHECK(jones_index_via_xi(R("(13)")).index == 2);
    CHECK(jones_index_via_xi(R("(142)")).index == 4);
    CHECK(jones_index_via_xi(R("id")).index == 1);
  }

  TEST_CASE("commutant_fixed_points") {
    for (int k = 1; k <= 3; ++k) {
      CHECK(commutant_fixed_points(R("id").endo(), k).dimension() == 1);
      CHECK(commutant_fixed_points(R("(13)").endo(), k).dimension() == 1);
    }
    CHECK(commutant_fixed_points(R("(23)").endo(), 1).dimension() == 4);
    for (const auto& p : rank2_table_order()) {
      const auto space = commutant_fixed_points(PermEndomorphism(p).endo(), 2);
      CHECK(space.contains(Element::unit()));
      for (const auto& e : space.basis_elements()) CHECK(space.contains(e.adjoint()));
      CHECK(permutation_commutant(p, 2) == space);
      const auto next = commutant_fixed_points(PermEndomorphism(p).endo(), 3);
      for (const auto& e : space.basis_elements()) CHECK(next.contains(e));
    }
    const auto w = non_scalar_element(commutant_fixed_points(R("(14)").endo(), 1));
    REQUIRE(w);
    CHECK(commutes_with_image(R("(14)").endo(), *w));
  }

  TEST_CASE("uhf_commutant") {
    CHECK(uhf_commutant(R("id").endo(), 1, 1).dimension() == 1);
    for (int k = 1; k <= 3; ++k) {
      CHECK(uhf_commutant(R("(12)").endo(), k, 1).dimension() == 1);
      CHECK(uhf_commutant(R("(142)").endo(), k, 2).dimension() > 1);
    }
    CHECK(uhf_commutant(R("(142)").endo(), 2, 2) == uhf_commutant(R("(142)").endo(), 3, 2));
  }

  TEST_CASE("classify examples") {
    auto c = classify(P("(14)"));
    CHECK(c.property == Property::Reducible);
    CHECK(c.index == 4);
    CHECK(c.commutant.verified);
    c = classify(P("(24)"));
    CHECK(c.property == Property::Irreducible);
    CHECK(c.index == 2);
    c = classify(P("(13)(24)"));
    CHECK(c.property == Property::Outer);
    CHECK(c.index == 1);
    c = classify(P("(142)"));
    CHECK(c.property == Property::Irreducible);
    CHECK(c.index == 4);
    c = classify(P("(14)(23)"));
    CHECK(c.property == Property::Inner);
    REQUIRE(c.inner_witness);
    CHECK(c.inner_witness->witness == P("(13)(24)"));
  }

  TEST_CASE("classification matches the reference table") {
    const auto& want = reference_table();
    const auto perms = rank2_table_order();
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const auto c = classify(perms[i]);
      CAPTURE(want[i].name);
      CHECK(to_string(c.property) == want[i].property);
      CHECK(c.index == want[i].index);
      CHECK((c.entropy_zero ? "0" : "log 2") == want[i].ht);
      if (c.property == Property::Irreducible && c.index == 2)
        for (int d : c.commutant.dims) CHECK(d == 1);
      if (c.property == Property::Reducible) CHECK((!c.xi.index || c.xi.index == 4));
    }
  }

  TEST_CASE("classifier refuses to guess") {
    ClassifyOptions weak;
    weak.order_bound = 1;  // hides the order-two automorphisms
    CHECK_THROWS_AS(classify(P("(13)(24)"), weak), Error);
    try {
      classify(P("(13)(24)"), weak);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConsistencyViolation);
    }
    ClassifyOptions shallow;
    shallow.depth_cap = 1;
    CHECK_THROWS_AS(classify(P("(12)"), shallow), Error);
    CHECK_THROWS_AS(classify(Permutation::parse("(12)", 3)), Error);
  }

  TEST_CASE("composition identities") {
    const auto checks = verify_composition_identities();
    REQUIRE(checks.size() == 7);
    for (const auto& c : checks) {
      CAPTURE(c.identity.str());
      CHECK(c.holds);
      CHECK(c.index_agrees());
    }
    CHECK(checks[0].identity.str() == "ρ_34 = ρ_(12)(34) ∘ ρ_12");
    CHECK(checks[6].lhs_index == 4);
    CHECK(checks[3].lhs_index == 2);
    // A false identity is reported as such.
    const CompositionIdentity wrong{P("(34)"), {{Factor::Kind::Endomorphism, P("(12)")}}};
    CHECK_FALSE(check_identity(wrong).holds);
  }
}
