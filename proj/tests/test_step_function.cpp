#include "freqfn/step_function.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace freqfn;
using freqfn::testing::f2;
using freqfn::testing::random_stepfn;

TEST_CASE("parse: one piece, empty input, canonical merge") {
  const StepFn a = parse_stepfn("-1/1 1/1 1/1");
  REQUIRE(a.pieces().size() == 1);
  CHECK(a.pieces()[0] == Piece{-1, 1, 1});

  CHECK(parse_stepfn("").is_zero());
  CHECK(parse_stepfn("# only a comment\n\n   \n").is_zero());

  const StepFn merged = parse_stepfn("0 1 2\n1 2 2");
  REQUIRE(merged.pieces().size() == 1);
  CHECK(merged.pieces()[0] == Piece{0, 2, 2});
}

TEST_CASE("parse: unsorted input, comments, zero values dropped") {
  const StepFn f = parse_stepfn("3 4 1/2  # tail\n-2 -1 3\n0 1 0\n");
  REQUIRE(f.pieces().size() == 2);
  CHECK(f.pieces()[0] == Piece{-2, -1, 3});
  CHECK(f.pieces()[1] == Piece{3, 4, Rat(1, 2)});
  CHECK(serialize(f) == "-2 -1 3\n3 4 1/2\n");
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_stepfn(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1 1\n1 2 x") == 2);         // malformed rational
  CHECK(line_of("0 2 1\n\n1 3 1") == 3);       // overlap
  CHECK(line_of("0 1 -1") == 1);               // negative value
  CHECK(line_of("# c\n2 2 1") == 2);           // left >= right
  CHECK(line_of("5 4 1") == 1);
  CHECK(line_of("0 1") == 1);                  // field count
  CHECK(line_of("1 2 1\n0 3 1") == 2);         // overlap found after sorting
}

TEST_CASE("from_pieces rejects invalid pieces") {
  CHECK_THROWS_AS(StepFn::from_pieces({{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(StepFn::from_pieces({{0, 1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(StepFn::from_pieces({{0, 2, 1}, {1, 3, 1}}), std::invalid_argument);
}

TEST_CASE("integrate examples") {
  CHECK(integrate(f2(), -1, 1) == 2);
  CHECK(integrate(f2(), Rat(1, 2), Rat(5, 2)) == Rat(1, 2));
  CHECK(integrate(StepFn{}, -5, 5) == 0);
  CHECK(integrate(f2(), 3, 3) == 0);
  CHECK_THROWS_AS(integrate(f2(), 1, 0), std::invalid_argument);
}

TEST_CASE("one_sided examples") {
  auto check = [](const Rat& x, const Rat& l, const Rat& r) {
    const OneSided s = one_sided(f2(), x);
    CHECK(s.left_value == l);
    CHECK(s.right_value == r);
  };
  check(1, 1, 0);
  check(-1, 0, 1);
  check(0, 1, 1);
  check(7, 0, 0);

  const StepFn steps = parse_stepfn("0 1 1\n1 2 3");
  const OneSided s = one_sided(steps, 1);
  CHECK(s.left_value == 1);
  CHECK(s.right_value == 3);
}

TEST_CASE("mass, breakpoints and the transforms") {
  CHECK(mass(f2()) == 2);
  CHECK(mass(testing::make(CorpusId::F4, {{"k", 4}})) == Rat(1, 2));
  CHECK(breakpoints(f2()) == std::vector<Rat>{-1, 1});
  CHECK(breakpoints(parse_stepfn("0 1 1\n1 2 3\n5 6 1")) == std::vector<Rat>{0, 1, 2, 5, 6});

  CHECK_THROWS_AS(scale(f2(), 0), std::invalid_argument);
  CHECK_THROWS_AS(scale(f2(), -1), std::invalid_argument);
  CHECK(serialize(scale(f2(), Rat(3, 2))) == "-1 1 3/2\n");
  CHECK(serialize(translate(f2(), Rat(1, 3))) == "-2/3 4/3 1\n");
  CHECK(serialize(reflect(parse_stepfn("0 1 1\n1 3 2"))) == "-3 -1 2\n-1 0 1\n");
}

TEST_CASE("properties on random step functions") {
  Sampler rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFn f = random_stepfn(rng);
    CAPTURE(serialize(f));

    // canonical form is a fixed point of serialize . parse
    CHECK(serialize(parse_stepfn(serialize(f))) == serialize(f));
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
      CHECK(f.pieces()[i].value > 0);
      if (i > 0) {
        CHECK(f.pieces()[i - 1].right <= f.pieces()[i].left);
        if (f.pieces()[i - 1].right == f.pieces()[i].left)
          CHECK(f.pieces()[i - 1].value != f.pieces()[i].value);
      }
    }

    Rat a = rng.rational_in(-12, 12, 16), b = rng.rational_in(-12, 12, 16),
        c = rng.rational_in(-12, 12, 16);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    CHECK(integrate(f, a, b) + integrate(f, b, c) == integrate(f, a, c));
    CHECK(integrate(f, a, c) >= 0);
    CHECK(integrate(f, a, c) <= mass(f));

    const Rat k(3, 7), t(-5, 3);
    CHECK(integrate(scale(f, k), a, b) == k * integrate(f, a, b));
    CHECK(integrate(translate(f, t), a + t, b + t) == integrate(f, a, b));
    CHECK(integrate(reflect(f), -b, -a) == integrate(f, a, b));
  }
}
