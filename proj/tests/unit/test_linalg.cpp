#include <doctest.h>

#include <algorithm>
#include <random>

#include "degenlab/linalg.hpp"

using namespace degenlab;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Vec> random_rows(std::mt19937_64& rng, size_t count, size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Vec> rows(count, Vec(n));
  for (auto& r : rows)
    for (auto& x : r) x = Scalar(d(rng));
  return rows;
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  Scalar a = Scalar::rational(3, 7), b = Scalar::rational(-5, 2);
  CHECK((a * a.inverse()).is_one());
  CHECK((a / b) * b == a);
  CHECK((a + b).str() == "-29/14");
  Field f = Field::prime(7);
  Scalar x = f.from_int(3);
  CHECK((x * x.inverse()).is_one());
  CHECK((x + Scalar(5)).str() == "1");
  CHECK(Field::parse("fp:32003").p == 32003);
  CHECK_THROWS(Field::parse("fp:10"));
}

TEST_CASE("echelonize full rank and dependent rows") {
  auto s = Subspace::span(2, {v({0, 2}), v({1, 1})});
  CHECK(s.basis() == std::vector<Vec>{v({1, 0}), v({0, 1})});
  auto t = Subspace::span(2, {v({1, 2}), v({2, 4})});
  CHECK(t.basis() == std::vector<Vec>{v({1, 2})});
  CHECK_THROWS_AS(Subspace::span(2, {v({1, 2, 3})}), DimensionMismatch);
}

TEST_CASE("intersections of coordinate lines") {
  auto e1 = Subspace::span(3, {v({1, 0, 0})});
  auto e2 = Subspace::span(3, {v({0, 1, 0})});
  CHECK(intersect(e1, e2).dim() == 0);
  CHECK(intersect(e1, e1) == e1);
  CHECK_THROWS(intersect(e1, Subspace::span(2, {v({1, 0})})));
}

TEST_CASE("modular law and canonicity on random pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 6;
    auto ra = random_rows(rng, 1 + trial % 4, n), rb = random_rows(rng, 1 + (trial / 4) % 4, n);
    auto a = Subspace::span(n, ra), b = Subspace::span(n, rb);
    // Oracle: ranks of the stacked rows give dim(a + b) independently.
    std::vector<Vec> both = ra;
    both.insert(both.end(), rb.begin(), rb.end());
    size_t sum_dim = rank(both, n);
    CHECK(sum(a, b).dim() == sum_dim);
    CHECK(a.dim() + b.dim() == sum_dim + intersect(a, b).dim());
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(a.contains(b) == (sum(a, b) == a));
    std::reverse(ra.begin(), ra.end());
    CHECK(Subspace::span(n, ra) == a);
  }
}

TEST_CASE("kernel, image, inverse and solve") {
  auto m = Matrix::from_rows({v({1, 2, 3}), v({2, 4, 6})}, 3);
  CHECK(kernel(m).dim() == 2);
  CHECK(image(m).dim() == 1);
  auto sq = Matrix::from_rows({v({2, 1}), v({1, 1})}, 2);
  CHECK(sq * inverse(sq) == Matrix::identity(2, Field::rationals()));
  CHECK(determinant(sq).is_one());
  auto x = solve(sq, v({3, 2}));
  REQUIRE(x);
  CHECK(*x == v({1, 1}));
  CHECK_FALSE(solve(m, v({1, 0})));
}
