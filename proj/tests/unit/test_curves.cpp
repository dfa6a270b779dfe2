#include <doctest.h>

#include "fixtures.hpp"

using namespace degenlab;
using fixtures::elem;
using fixtures::point;

TEST_CASE("unipotent curve of the loop example") {
  auto alg = fixtures::algebra("loop.alg");
  auto c = fixtures::module(alg, "loop_jz2.mod");
  auto curve = parse_curve(c.pres, fixtures::read_data("loop_unipotent.curve"));
  CHECK(curve.generically_invertible());
  auto lim = flat_limit(curve, c);
  auto expected = point(alg, "top 1\ntop 1\ngen a*w z1\ngen w z2");
  CHECK(lim.space == expected.space);
  CHECK(flat_limit(constant_curve(c.pres), c).space == c.space);
  CHECK_THROWS_AS(make_unipotent_curve(c.pres, {c.pres->zero(), elem(c, "e1 z1")}), std::invalid_argument);
}

TEST_CASE("torus realizations") {
  auto alg = fixtures::algebra("loop.alg");
  auto c = fixtures::module(alg, "loop_jz2.mod");
  auto expected = point(alg, "top 1\ntop 1\ngen a*w z1\ngen w z2");
  auto torus = make_torus_curve(c.pres, {elem(c, "z1"), elem(c, "z2 + w z1")}, {1, 0});
  CHECK(flat_limit(torus, c).space == expected.space);
  // The same limit as the iterated split, with the fixed member listed first.
  auto split = full_local_split(c, {elem(c, "z2 + w z1"), elem(c, "z1")});
  CHECK(split.space == expected.space);
  CHECK_THROWS_AS(make_torus_curve(c.pres, {elem(c, "z1"), elem(c, "z1")}, {0, 1}), std::invalid_argument);

  auto a2 = fixtures::algebra("a2.alg");
  auto d = fixtures::module(a2, "a2_jz2.mod");
  auto jz1 = point(a2, "top 1\ntop 1\ngen a z1");
  auto t = make_torus_curve(d.pres, {elem(d, "z1"), elem(d, "z1 + z2")}, {1, 0});
  CHECK(flat_limit(t, d).space == jz1.space);
  // Equal weights act as scalars.
  auto scalar = make_torus_curve(d.pres, {elem(d, "z1"), elem(d, "z1 + z2")}, {2, 2});
  CHECK(flat_limit(scalar, d).space == d.space);
}

TEST_CASE("Kronecker torus limit and splits") {
  auto kr = fixtures::algebra("kronecker.alg");
  auto c = fixtures::module(kr, "kronecker_split.mod");
  auto curve = parse_curve(c.pres, fixtures::read_data("kronecker_torus.curve"));
  auto lim = flat_limit(curve, c);
  CHECK(lim.space == point(kr, "top 1\ntop 1\ngen a z2\ngen b z2").space);

  auto line = point(kr, "top 1\ntop 1\ngen a z1 + b z2");
  auto s = split_by_submodule(line, {0});
  CHECK(s.space == point(kr, "top 1\ntop 1\ngen b z2").space);
  CHECK(split_by_submodule(line, {0, 1}).space == line.space);
  auto f = full_local_split(line, {elem(line, "z1"), elem(line, "z2")});
  CHECK(f.space == s.space);
}

TEST_CASE("split of an already split point") {
  auto alg = fixtures::algebra("loop.alg");
  auto c = fixtures::module(alg, "loop_jz2.mod");
  CHECK(split_by_submodule(c, {1}).space == c.space);
  CHECK(full_local_split(c, {elem(c, "z1"), elem(c, "z2")}).space == c.space);
}

TEST_CASE("split requires a top-stable embedding") {
  // Inside JP every distinguished block is top-stably embedded; outside it
  // can fail: over A2 with tops (1, 2), C = K(a z1 - z2) identifies z2 with a z1.
  auto a2 = fixtures::algebra("a2.alg");
  auto c = point(a2, "top 1\ntop 2\ngen a z1 - z2");
  CHECK_FALSE(c.inside_radical);
  CHECK_FALSE(top_stably_embedded(c, {1}));
  CHECK_THROWS_AS(split_by_submodule(c, {1}), std::invalid_argument);
  CHECK(top_stably_embedded(c, {0}));
}

TEST_CASE("curve file errors") {
  auto alg = fixtures::algebra("loop.alg");
  auto c = fixtures::module(alg, "loop_jz2.mod");
  CHECK_THROWS_AS(parse_curve(c.pres, "[curve]\nkind spiral\n"), ParseError);
  CHECK_THROWS_AS(parse_curve(c.pres, "[curve]\nkind unipotent\nmap z3 -> w z1\n"), ParseError);
  CHECK_THROWS_AS(parse_curve(c.pres, "[curve]\nkind unipotent\nmap z2 -> z1\n"), ParseError);
  auto l = parse_curve(c.pres, "[curve]\nkind laurent\nimage z1 0 -> z1\nimage z2 0 -> z2\nimage z2 1 -> w z1\n");
  CHECK(flat_limit(l, c).space == point(alg, "top 1\ntop 1\ngen a*w z1\ngen w z2").space);
}
