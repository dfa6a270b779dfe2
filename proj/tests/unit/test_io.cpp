#include <doctest.h>

#include "fixtures.hpp"

using namespace degenlab;

TEST_CASE("malformed relation reports its position") {
  std::string text = "[quiver]\nvertex 1\narrow a 1 1\n[relations]\na**\n";
  try {
    parse_algebra(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(e.column == 3);
    CHECK(std::string(e.what()).find("line 5, column 3") != std::string::npos);
  }
}

TEST_CASE("unknown names and bad sections") {
  CHECK_THROWS_AS(parse_algebra("[quiver]\nvertex 1\narrow a 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("[quiver]\nvertex 1\narrow a 1 1\n[relations]\nb*a\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("[nonsense]\n"), ParseError);
  auto alg = fixtures::algebra("loop.alg");
  CHECK_THROWS_AS(fixtures::point(alg, "top 1\ngen a z3"), ParseError);
  CHECK_THROWS_AS(fixtures::point(alg, "top 1\ngen w*a z1"), ParseError);
}

TEST_CASE("algebra and module files round-trip") {
  auto alg = fixtures::algebra("six_loops.alg");
  auto again = parse_algebra(write_algebra(*alg));
  CHECK(again->dim() == alg->dim());
  auto c = fixtures::module(alg, "six_loops.mod");
  auto c2 = parse_module(alg, write_module(c));
  CHECK(c2.space == c.space);
  CHECK(c.pres->element_str(c.pres->z(1)) == "1 e1 z2");
}

TEST_CASE("field override") {
  auto alg = fixtures::algebra("loop.alg", Field::prime(7));
  CHECK(alg->field().p == 7);
  auto q = parse_algebra("[quiver]\nvertex 1\n[options]\nfield fp:11\n");
  CHECK(q->field().p == 11);
}
