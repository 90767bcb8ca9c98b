#include <doctest.h>

#include "cuntz/diagonal.hpp"
#include "cuntz/error.hpp"

using namespace cuntz;

namespace {
PermEndomorphism R(const char* text) { return PermEndomorphism(Permutation::parse(text)); }
}  // namespace

TEST_SUITE("diagonal-analyzer") {
  TEST_CASE("cylinder sets") {
    const CylinderSet c(1, {Word::parse("1")});
    CHECK(c.refine().str() == "{11, 12}");
    CHECK(c.refine(2).members().size() == 4);
    CHECK_THROWS_AS(CylinderSet(2, {Word::parse("1")}), Error);
    CHECK_THROWS_AS(CylinderSet(CylinderSet::max_depth + 9), Error);
  }

  TEST_CASE("diagonal_image") {
    CHECK(diagonal_image(R("id"), Word::parse("1")).str() == "{11, 12}");
    CHECK(diagonal_image(R("(12)"), Word::parse("2")).str() == "{21, 22}");
    CHECK(diagonal_image(R("(23)"), Word::parse("1")).str() == "{11, 21}");
  }

  TEST_CASE("images partition the space") {
    for (const auto& p : all_permutations(2)) {
      const PermEndomorphism rho(p);
      for (int d = 1; d <= 4; ++d) {
        std::set<Word> seen;
        std::size_t total = 0;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) {
          const auto image = diagonal_image(rho, Word::from_index(i, d));
          CHECK(image.depth() == d + 1);
          total += image.members().size();
          seen.insert(image.members().begin(), image.members().end());
        }
        CHECK(total == (std::size_t{1} << (d + 1)));
        CHECK(seen.size() == total);
      }
    }
  }

  TEST_CASE("is_diagonal_automorphism") {
    CHECK(is_diagonal_automorphism(R("id")) == true);
    for (const char* t : {"(12)", "(34)", "(1324)", "(1423)"}) CHECK(is_diagonal_automorphism(R(t)) == true);
    CHECK(is_diagonal_automorphism(R("(13)")) == false);
    int proper_true = 0;
    for (const auto& p : all_permutations(2)) {
      const PermEndomorphism rho(p);
      const auto verdict = is_diagonal_automorphism(rho);
      REQUIRE(verdict.has_value());
      if (!automorphism_order(rho.endo(), 8)) proper_true += *verdict;
      else CHECK(*verdict);
    }
    CHECK(proper_true == 4);
  }

  TEST_CASE("depth caps") {
    CHECK_THROWS_AS(analyze_diagonal(R("(12)"), 1), Error);
    CHECK_THROWS_AS(analyze_diagonal(R("(12)"), 17), Error);
    const auto report = analyze_diagonal(R("(13)"), 4);
    CHECK(report.verdict == DiagonalVerdict::NotAutomorphism);
    CHECK(report.deficit[0][0] == 2);
    CHECK(analyze_diagonal(R("(12)"), 2).verdict == DiagonalVerdict::Automorphism);
  }
}
