#include <doctest.h>

#include "cuntz/element.hpp"
#include "cuntz/error.hpp"
#include "cuntz/level_matrix.hpp"

using namespace cuntz;

namespace {
Element el(const char* s) { return parse_element(s); }
Element s(int i) { return Element::generator(i); }
}  // namespace

TEST_SUITE("word-calculus") {
  TEST_CASE("words") {
    const auto w = Word::parse("1221");
    CHECK(w.size() == 4);
    CHECK(w[0] == 1);
    CHECK(w[1] == 2);
    CHECK(w.str() == "1221");
    CHECK(Word::parse("∅").empty());
    CHECK(Word::parse("12") < Word::parse("2"));
    CHECK(Word::parse("1") < Word::parse("11"));
    CHECK(Word::from_index(2, 2).str() == "21");
    CHECK(Word::parse("12").is_prefix_of(w));
    CHECK_THROWS_AS(Word::parse("13"), Error);
  }

  TEST_CASE("multiply") {
    CHECK(el("s_{1,2}") * el("s_{2,1}") == el("s_{1,1}"));
    CHECK((s(1).adjoint() * s(2)).is_zero());
    CHECK(s(1).adjoint() * s(1) == Element::unit());
    CHECK(s(1) * s(1).adjoint() + s(2) * s(2).adjoint() == Element::unit());
    CHECK(el("s_{12,1}") == s(1) * s(2) * s(1).adjoint());
  }

  TEST_CASE("adjoint") {
    CHECK(el("s_{1,2}").adjoint() == el("s_{2,1}"));
    CHECK(Element::unit().adjoint() == Element::unit());
    CHECK(el("1/2·s_{12,1} + s_{2}").adjoint() == el("1/2·s_{1,12} + s_{∅,2}"));
  }

  TEST_CASE("canonicalize") {
    const Word w11 = Word::parse("11"), w12 = Word::parse("12"), one = Word::parse("1"), two = Word::parse("2");
    CHECK(Element::canonicalize({{{w11, w11}, 1}, {{w12, w12}, 1}}) == el("s_{1,1}"));
    CHECK(Element::canonicalize({{{one, one}, 1}, {{two, two}, 1}}) == Element::unit());
    CHECK(Element::canonicalize({{{one, one}, 0}}).is_zero());
    // Overlapping cones: s_{1,1} + s_{11,11} has no smaller representative.
    const auto x = Element::canonicalize({{{one, one}, 1}, {{w11, w11}, 1}});
    CHECK(x == el("2·s_{11,11} + s_{12,12}"));
  }

  TEST_CASE("rendering") {
    CHECK(to_compact_string(s(1) * s(2) * s(1).adjoint() + s(1) * s(1) * s(2).adjoint()) == "s_{12,1}+s_{11,2}");
    CHECK(to_string(Element::unit()) == "1");
    CHECK(to_string(Element()) == "0");
    CHECK(to_string(el("-1/4·s_{1,2}")) == "-1/4·s_{1,2}");
    CHECK(to_string(s(2).adjoint()) == "s_{∅,2}");
    CHECK(parse_element("s_{12,1}+s_{11,2}") == parse_element("s_{12,1} + s_{11,2}"));
    CHECK_THROWS_AS(parse_element("s_{13,1}"), Error);
  }

  TEST_CASE("embed_to_level") {
    CHECK(embed_to_level(el("s_{1,2}"), 1) == LevelMatrix::unit(1, 0, 1));
    CHECK(embed_to_level(el("s_{1,2}"), 2) == tensor(LevelMatrix::unit(1, 0, 1), LevelMatrix::identity(1)));
    CHECK(embed_to_level(Element::unit(), 3) == LevelMatrix::identity(3));
    CHECK(embed_to_level(embed_to_level(el("s_{21,12} - s_{2,2}"), 2).to_element(), 2) ==
          embed_to_level(el("s_{21,12} - s_{2,2}"), 2));
    CHECK_THROWS_AS(embed_to_level(s(1), 1), Error);
    CHECK_THROWS_AS(embed_to_level(el("s_{11,12}"), 1), Error);
  }

  TEST_CASE("omega and E") {
    CHECK(omega(Element::unit()) == Scalar(1));
    CHECK(omega(el("s_{12,12}")) == Scalar(1, 4));
    CHECK(omega(s(1)) == Scalar(0));
    CHECK(gauge_expectation(s(1) + el("s_{2,2}")) == el("s_{2,2}"));
    const auto x = el("s_{12,21} + 3·s_{1,1}");
    CHECK(gauge_expectation(x) == x);
    CHECK(gauge_expectation(s(1) * x * s(1).adjoint()).is_gauge_invariant());
  }

  TEST_CASE("expect_onto_level") {
    const auto a = LevelMatrix::unit(1, 0, 1);
    CHECK(expect_onto_level(tensor(a, LevelMatrix::identity(1)), 1) == a);
    const auto e11 = LevelMatrix::unit(1, 0, 0);
    CHECK(expect_onto_level(tensor(e11, e11), 1) == Scalar(1, 2) * e11);
    CHECK(expect_onto_level(LevelMatrix::identity(3), 1) == LevelMatrix::identity(1));
    CHECK_THROWS_AS(expect_onto_level(LevelMatrix::identity(1), 2), Error);
  }

  TEST_CASE("canonical_shift") {
    CHECK(canonical_shift(Element::unit()) == Element::unit());
    CHECK(embed_to_level(canonical_shift(el("s_{1,2}")), 2) ==
          tensor(LevelMatrix::identity(1), LevelMatrix::unit(1, 0, 1)));
    CHECK(omega(canonical_shift(el("s_{12,12}"))) == omega(el("s_{12,12}")));
  }

  TEST_CASE("equal_by_expansion") {
    CHECK(equal_by_expansion(Element::unit(), el("s_{1,1} + s_{2,2}")));
    CHECK_FALSE(equal_by_expansion(Element::unit(), el("s_{1,1}")));
    CHECK(equal_by_expansion(s(1), el("s_{11,1} + s_{12,2}")));
    CHECK(equal_by_expansion(s(1).adjoint(), el("s_{1,11} + s_{2,12}")));
    CHECK_FALSE(equal_by_expansion(s(1), s(2)));
  }
}
