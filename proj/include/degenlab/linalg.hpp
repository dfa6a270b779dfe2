#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "degenlab/field.hpp"

namespace degenlab {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
// Field of the first residue entry; rationals when there is none.
Field field_of(const std::vector<Vec>& rows);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& c);
// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

// Dense matrix acting on column vectors: y = A x.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n, const Field& f);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Vec row(size_t i) const;
  Vec column(size_t j) const;
  std::vector<Vec> row_list() const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form of `rows` (each of length n); zero rows
// are dropped. Returns the pivot columns, strictly increasing.
std::vector<size_t> rref(std::vector<Vec>& rows, size_t n);

// Subspace of K^n held in canonical reduced row echelon form, so equal
// subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : n_(ambient) {}

  static Subspace span(size_t ambient, std::vector<Vec> rows);
  static Subspace whole(size_t ambient, const Field& f);

  size_t ambient_dim() const { return n_; }
  size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<size_t> non_pivots() const;

  // Remainder of v after clearing all pivot coordinates; zero iff v is inside.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  // Canonical order: dimension, then lexicographic on echelon rows.
  int compare(const Subspace& other) const;

 private:
  size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {x : A x = 0}
Subspace kernel(const Matrix& a);
// Column space of A.
Subspace image(const Matrix& a);
// A(S)
Subspace image(const Matrix& a, const Subspace& s);
// {x : A x in S}
Subspace preimage(const Matrix& a, const Subspace& s);

size_t rank(const Matrix& a);
size_t rank(const std::vector<Vec>& rows, size_t n);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// Throws std::domain_error when singular.
Matrix inverse(const Matrix& a);
Scalar determinant(Matrix a);
// Rows whose reduction against `base` is independent, extending `base` to
// base + span(candidates); returned in input order.
std::vector<Vec> extend_basis(const Subspace& base, const std::vector<Vec>& candidates);

// Incremental reduced echelon form.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(size_t ambient) : n_(ambient) {}
  // Inserts v; returns false when v was already in the span.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  size_t dim() const { return rows_.size(); }
  Subspace finish() const;

 private:
  Vec reduce(const Vec& v) const;
  size_t n_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace degenlab
