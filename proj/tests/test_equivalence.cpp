#include <doctest.h>

#include <chrono>

#include "cuntz/classify.hpp"
#include "cuntz/equivalence.hpp"

using namespace cuntz;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
PermEndomorphism R(const char* text) { return PermEndomorphism(P(text)); }
}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("witness candidates") {
    CHECK(witness_candidates(1).size() == 2);
    CHECK(witness_candidates(2).size() == 2 + 22);
  }

  TEST_CASE("inner_equivalence_witness") {
    const auto w = inner_equivalence_witness(R("(12)"), R("(1324)"), 2);
    REQUIRE(w);
    CHECK(w->witness == P("(13)(24)"));
    CHECK(w->witness_rank == 1);
    CHECK(is_unitary(w->witness_unitary));
    const auto same = inner_equivalence_witness(R("(142)"), R("(142)"), 2);
    REQUIRE(same);
    CHECK(same->witness.is_identity());
    CHECK(inner_equivalence_witness(R("id"), R("(14)(23)"), 2).has_value());
    CHECK_FALSE(inner_equivalence_witness(R("(12)"), R("(13)"), 2).has_value());
    // Symmetric up to inverting the witness.
    const auto back = inner_equivalence_witness(R("(1324)"), R("(12)"), 2);
    REQUIRE(back);
    CHECK(compose(ad(back->witness_unitary), R("(1324)").endo()) == R("(12)").endo());
  }

  TEST_CASE("every witness re-verifies") {
    for (const auto& w : equivalence_classes(2).witnesses) {
      CHECK(compose(ad(w.witness_unitary), PermEndomorphism(w.left).endo()) == PermEndomorphism(w.right).endo());
      CHECK(is_unitary(w.witness_unitary));
    }
  }

  TEST_CASE("sixteen classes") {
    const auto start = std::chrono::steady_clock::now();
    const auto partition = equivalence_classes(2);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
    CHECK(partition.classes.size() == 16);
    const std::pair<const char*, const char*> pairs[] = {
        {"(134)", "(142)"},  {"(243)", "(123)"},  {"(1234)", "(24)"},     {"(1324)", "(12)"},
        {"(1423)", "(34)"}, {"(1432)", "(13)"}, {"(12)(34)", "(13)(24)"}, {"(14)(23)", "id"}};
    for (const auto& [a, b] : pairs) {
      CAPTURE(a);
      CHECK(partition.class_of(P(a)) == partition.class_of(P(b)));
      CHECK(partition.class_of(P(a)).size() == 2);
    }
    for (const auto& cls : partition.classes) {
      const auto first = classify(cls.front());
      for (const auto& p : cls) {
        const auto c = classify(p);
        CHECK(c.index == first.index);
        CHECK((c.property == Property::Reducible) == (first.property == Property::Reducible));
      }
    }
  }

  TEST_CASE("parallel search is deterministic") {
    const auto a = equivalence_classes(2, 1);
    const auto b = equivalence_classes(2, 4);
    CHECK(a.classes == b.classes);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].witness == b.witnesses[i].witness);
  }
}
