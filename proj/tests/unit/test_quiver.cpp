#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace degenlab;

namespace {

Vec path_elem(const PathAlgebra& a, const std::string& text) {
  return a.element(parse_path(a.quiver(), text));
}

}  // namespace

TEST_CASE("loop with square zero") {
  auto alg = fixtures::algebra("loop.alg");
  CHECK(alg->dim() == 5);
  CHECK(alg->loewy_length() == 3);
  auto j = alg->radical_series();
  REQUIRE(j.size() == 2);
  CHECK(j[0].dim() == 3);
  CHECK(j[1].dim() == 1);
  CHECK(alg->idempotent_component(0, 0, true).dim() == 1);
  CHECK(alg->idempotent_component(0, 1, false).dim() == 2);
  CHECK(alg->multiply(path_elem(*alg, "a"), path_elem(*alg, "w")) == path_elem(*alg, "a*w"));
  CHECK(is_zero(alg->multiply(path_elem(*alg, "w"), path_elem(*alg, "w"))));
  CHECK(is_zero(alg->multiply(path_elem(*alg, "w"), path_elem(*alg, "a"))));
}

TEST_CASE("A2 and Kronecker") {
  auto a2 = fixtures::algebra("a2.alg");
  CHECK(a2->dim() == 3);
  auto j = a2->radical_series();
  REQUIRE(j.size() == 1);
  CHECK(j[0].dim() == 1);
  CHECK(a2->idempotent_component(1, 1, false).dim() == 1);
  CHECK(fixtures::algebra("kronecker.alg")->dim() == 4);
}

TEST_CASE("two-cycle truncated at length three") {
  auto alg = fixtures::algebra("two_cycle.alg");
  CHECK(alg->loewy_length() == 3);
  CHECK(alg->basis_from(0).size() == 3);
  CHECK(alg->basis_from(1).size() == 3);
}

TEST_CASE("six loops example path counts") {
  auto alg = fixtures::algebra("six_loops.alg");
  // Oracle: e1, six loops, a, b, a*w1..a*w3, b*w4..b*w6.
  CHECK(alg->basis_from(0).size() == 15);
  CHECK(alg->basis_from(1).size() == 1);
}

TEST_CASE("max_len too small and inadmissible relations") {
  std::string cyc = "[quiver]\nvertex 1\narrow w 1 1\n[relations]\nw*w*w\n[options]\nmax_len 1\n";
  CHECK_THROWS_WITH_AS(parse_algebra(cyc), doctest::Contains("max_len too small"), ParseError);
  std::string lin = "[quiver]\nvertex 1\nvertex 2\narrow a 1 2\n[relations]\na\n";
  CHECK_THROWS_WITH_AS(parse_algebra(lin), doctest::Contains("inadmissible"), ParseError);
}

TEST_CASE("non-uniform relations are split into components") {
  std::string text =
      "[quiver]\nvertex 1\nvertex 2\narrow a 1 2\narrow b 2 1\n[relations]\na*b + b*a\npaths_of_length 3\n";
  auto alg = parse_algebra(text);
  CHECK(alg->relations().size() >= 2);
  CHECK(alg->basis_from(0).size() == 2);
  CHECK(alg->basis_from(1).size() == 2);
}

TEST_CASE("associativity, unit and grading on random basis triples") {
  for (const char* name : {"loop.alg", "two_cycle.alg", "six_loops.alg", "kronecker.alg"}) {
    auto alg = fixtures::algebra(name);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<size_t> pick(0, alg->dim() - 1);
    auto unit_vec = [&](size_t k) {
      Vec e(alg->dim());
      e[k] = Scalar(1);
      return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
      auto a = unit_vec(pick(rng)), b = unit_vec(pick(rng)), c = unit_vec(pick(rng));
      CHECK(alg->multiply(alg->multiply(a, b), c) == alg->multiply(a, alg->multiply(b, c)));
      CHECK(alg->multiply(alg->unit(), a) == a);
      CHECK(alg->multiply(a, alg->unit()) == a);
    }
    auto series = alg->radical_series();
    for (size_t i = 0; i < alg->dim(); ++i)
      for (size_t j = 0; j < alg->dim(); ++j) {
        size_t l = alg->basis_path(i).length() + alg->basis_path(j).length();
        auto prod = alg->multiply(unit_vec(i), unit_vec(j));
        if (l == 0 || is_zero(prod)) continue;
        REQUIRE(l <= series.size());
        CHECK(series[l - 1].contains(prod));
      }
    CHECK(series.size() + 1 == static_cast<size_t>(alg->loewy_length()));
  }
}
