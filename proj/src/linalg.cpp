#include "degenlab/linalg.hpp"

#include <algorithm>
#include <string>

namespace degenlab {

namespace {

void require_len(const Vec& v, size_t n) {
  if (v.size() != n)
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(n));
}

size_t leading(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

}  // namespace

Field field_of(const std::vector<Vec>& rows) {
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.modulus() != 0) return Field{x.modulus()};
  return Field::rationals();
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  require_len(b, a.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_len(b, a.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = a[i] * c;
  return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  require_len(b, a.size());
  if (c.is_zero()) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

Matrix Matrix::identity(size_t n, const Field& f) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require_len(rows[i], cols);
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    require_len(cols[j], rows);
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::column(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(r_);
  for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  require_len(x, c_);
  Vec y(r_);
  for (size_t j = 0; j < c_; ++j) {
    if (x[j].is_zero()) continue;
    for (size_t i = 0; i < r_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix m(a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix m(a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix m(a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (!a.a_[i].is_zero()) m.a_[i] = c * a.a_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

std::vector<size_t> rref(std::vector<Vec>& rows, size_t n) {
  for (const auto& r : rows) require_len(r, n);
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < n && lead < rows.size(); ++col) {
    size_t sel = lead;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    Scalar inv = rows[lead][col].inverse();
    for (size_t j = col; j < n; ++j)
      if (!rows[lead][j].is_zero()) rows[lead][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (size_t j = col; j < n; ++j)
        if (!rows[lead][j].is_zero()) rows[i][j] -= f * rows[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

Subspace Subspace::span(size_t ambient, std::vector<Vec> rows) {
  Subspace s(ambient);
  s.pivots_ = rref(rows, ambient);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::whole(size_t ambient, const Field& f) {
  return span(ambient, Matrix::identity(ambient, f).row_list());
}

std::vector<size_t> Subspace::non_pivots() const {
  std::vector<size_t> out;
  size_t k = 0;
  for (size_t j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  require_len(v, n_);
  Vec r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, rows_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return degenlab::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("ambient mismatch in containment test");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  require_len(v, n_);
  Vec c(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  Vec back(n_);
  for (size_t k = 0; k < rows_.size(); ++k) axpy(back, c[k], rows_[k]);
  for (size_t j = 0; j < n_; ++j)
    if (back[j] != v[j]) return std::nullopt;
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("ambient mismatch in subspace comparison");
  if (a.pivots_ != b.pivots_) return false;
  for (size_t k = 0; k < a.rows_.size(); ++k)
    for (size_t j = 0; j < a.n_; ++j)
      if (a.rows_[k][j] != b.rows_[k][j]) return false;
  return true;
}

int Subspace::compare(const Subspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
  for (size_t k = 0; k < rows_.size(); ++k)
    for (size_t j = 0; j < n_; ++j) {
      int c = rows_[k][j].compare(other.rows_[k][j]);
      if (c != 0) return c;
    }
  return 0;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient mismatch in subspace sum");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), std::move(rows));
}

// Zassenhaus: rows [a | a] and [b | 0]; echelon rows with vanishing left
// block span the intersection in their right block.
Subspace intersect(const Subspace& a, const Subspace& b) {
  size_t n = a.ambient_dim();
  if (n != b.ambient_dim()) throw DimensionMismatch("ambient mismatch in subspace intersection");
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  std::vector<Vec> rows;
  for (const auto& r : a.basis()) {
    Vec w(2 * n);
    std::copy(r.begin(), r.end(), w.begin());
    std::copy(r.begin(), r.end(), w.begin() + static_cast<long>(n));
    rows.push_back(std::move(w));
  }
  for (const auto& r : b.basis()) {
    Vec w(2 * n);
    std::copy(r.begin(), r.end(), w.begin());
    rows.push_back(std::move(w));
  }
  auto piv = rref(rows, 2 * n);
  std::vector<Vec> out;
  for (size_t k = 0; k < rows.size(); ++k)
    if (piv[k] >= n) out.emplace_back(rows[k].begin() + static_cast<long>(n), rows[k].end());
  return Subspace::span(n, std::move(out));
}

Subspace kernel(const Matrix& a) {
  size_t n = a.cols();
  std::vector<Vec> rows = a.row_list();
  auto piv = rref(rows, n);
  std::vector<bool> is_piv(n, false);
  for (size_t p : piv) is_piv[p] = true;
  Field f_field = field_of(rows);
  std::vector<Vec> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n);
    v[f] = f_field.one();
    for (size_t k = 0; k < rows.size(); ++k) v[piv[k]] = -rows[k][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(basis));
}

Subspace image(const Matrix& a) { return Subspace::span(a.rows(), a.transpose().row_list()); }

Subspace image(const Matrix& a, const Subspace& s) {
  if (s.ambient_dim() != a.cols()) throw DimensionMismatch("image: subspace ambient differs from map domain");
  std::vector<Vec> rows;
  for (const auto& v : s.basis()) rows.push_back(a.apply(v));
  return Subspace::span(a.rows(), std::move(rows));
}

Subspace preimage(const Matrix& a, const Subspace& s) {
  if (s.ambient_dim() != a.rows()) throw DimensionMismatch("preimage: subspace ambient differs from map codomain");
  // x with A x reduced to 0 modulo S: kernel of (R A), R the reduction map.
  std::vector<Vec> cols;
  for (size_t j = 0; j < a.cols(); ++j) cols.push_back(s.reduce(a.column(j)));
  return kernel(Matrix::from_columns(cols, a.rows()));
}

size_t rank(const Matrix& a) { return rank(a.row_list(), a.cols()); }

size_t rank(const std::vector<Vec>& rows, size_t n) {
  std::vector<Vec> r = rows;
  return rref(r, n).size();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require_len(b, a.rows());
  size_t n = a.cols();
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.rows(); ++i) {
    Vec r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto piv = rref(rows, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  Vec x(n);
  for (size_t k = 0; k < rows.size(); ++k) x[piv[k]] = rows[k][n];
  return x;
}

Matrix inverse(const Matrix& a) {
  size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
  Field f = field_of(a.row_list());
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i) {
    Vec r(2 * n);
    for (size_t j = 0; j < n; ++j) r[j] = a(i, j);
    r[n + i] = f.one();
    rows.push_back(std::move(r));
  }
  auto piv = rref(rows, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  return inv;
}

Scalar determinant(Matrix a) {
  size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  Scalar det = field_of(a.row_list()).one();
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar();
    if (sel != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Scalar f = a(i, col) * inv;
      for (size_t j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Vec> extend_basis(const Subspace& base, const std::vector<Vec>& candidates) {
  EchelonBuilder b(base.ambient_dim());
  for (const auto& r : base.basis()) b.insert(r);
  std::vector<Vec> out;
  for (const auto& c : candidates)
    if (b.insert(c)) out.push_back(c);
  return out;
}

Vec EchelonBuilder::reduce(const Vec& v) const {
  require_len(v, n_);
  Vec r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, rows_[k]);
  }
  return r;
}

bool EchelonBuilder::contains(const Vec& v) const { return degenlab::is_zero(reduce(v)); }

bool EchelonBuilder::insert(const Vec& v) {
  Vec r = reduce(v);
  size_t p = leading(r);
  if (p == n_) return false;
  Scalar inv = r[p].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, r);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
  return true;
}

Subspace EchelonBuilder::finish() const { return Subspace::span(n_, rows_); }

}  // namespace degenlab
