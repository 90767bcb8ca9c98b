#include <doctest.h>

#include "cuntz/classify.hpp"
#include "cuntz/sweep.hpp"
#include "random.hpp"

using namespace cuntz;

TEST_SUITE("sweep") {
  TEST_CASE("level permutations") {
    const auto u = LevelPermutation::from(Permutation::parse("(12)"));
    CHECK(u.level == 2);
    CHECK((u * u.inverse()).is_identity());
    CHECK(u.pad_to(3).reduced() == u);
    CHECK(LevelPermutation::from(Permutation::parse("(13)(24)")).reduced().level == 1);
    CHECK(LevelPermutation::identity(3).reduced().level == 0);
    // phi(u) is the permutation of 1 ⊗ u.
    const auto s = u.shift();
    CHECK(s.level == 3);
    CHECK(s.map[0b100] == 0b100 + u.map[0]);
  }

  TEST_CASE("lambda matches the word calculus") {
    testing::Random rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = rng.permutation(2), b = rng.permutation(2);
      const auto fast = (lambda(LevelPermutation::from(a), LevelPermutation::from(b)) * LevelPermutation::from(a));
      const auto slow = compose(PermEndomorphism(a).endo(), PermEndomorphism(b).endo());
      // Both describe rho_a ∘ rho_b; compare through the induced endomorphism.
      std::vector<std::uint32_t> images(fast.map.begin(), fast.map.end());
      const Endomorphism from_fast(permutation_unitary(Permutation::from_images(fast.level, images)));
      CHECK(from_fast == slow);
    }
  }

  TEST_CASE("fast automorphism order agrees with the word calculus") {
    for (const auto& p : all_permutations(2))
      CHECK(permutation_automorphism_order(p, 8) == automorphism_order(PermEndomorphism(p).endo(), 8));
    testing::Random rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = rng.permutation(3);
      CAPTURE(p.one_line());
      CHECK(permutation_automorphism_order(p, 3) == automorphism_order(PermEndomorphism(p).endo(), 3));
    }
    // Padded automorphisms stay automorphisms at rank 3.
    CHECK(permutation_automorphism_order(Permutation::parse("(12)(34)").pad(), 4) == 2);
  }

  TEST_CASE("rank 2 sweep agrees with the classifier") {
    const auto report = sweep({2, 4, 2, 1});
    REQUIRE(report.rows.size() == 24);
    CHECK(report.count(SweepVerdict::Automorphism) == 4);
    CHECK(report.count(SweepVerdict::ReducibleWitnessFound) == 10);
    CHECK(report.count(SweepVerdict::Unknown) == 10);
    for (const auto& row : report.rows) {
      const auto c = classify(row.perm);
      CHECK((row.verdict == SweepVerdict::Automorphism) == c.automorphism_order.has_value());
      CHECK((row.verdict == SweepVerdict::ReducibleWitnessFound) == (c.property == Property::Reducible));
    }
  }

  TEST_CASE("rendering") {
    const auto report = sweep({2, 4, 2, 2});
    const auto csv = render(report, Format::Csv);
    CHECK(csv.find("perm,property,order,commutant_dims,witness\n1234,automorphism,1,,\n") == 0);
    CHECK(render(report, Format::Json).find("\"reducible-witness-found\": 10") != std::string::npos);
    CHECK(render(report, Format::Markdown).find("| unknown | 10 |") != std::string::npos);
    CHECK(csv.find("index") == std::string::npos);
    CHECK(render(sweep({2, 4, 2, 1}), Format::Json) == render(report, Format::Json));
  }

  TEST_CASE("invalid options") {
    CHECK_THROWS(sweep({4, 4, 2, 1}));
    CHECK_THROWS(sweep({3, 4, 0, 1}));
  }
}
