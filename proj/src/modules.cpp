#include "degenlab/modules.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace degenlab {

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

// Polynomials in one variable, coefficients ascending.
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q b + r, deg r < deg b; b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Scalar c = a.back() * lead_inv;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Returns s with s·a ≡ gcd (up to the unit making it 1) mod b; requires gcd(a, b) = 1.
std::optional<Poly> poly_inverse_mod(const Poly& a, const Poly& b) {
  Poly r0 = b, r1 = poly_divmod(a, b).second;
  Poly s0, s1{Scalar(1)};
  if (!b.empty() && b.back().modulus() != 0) s1 = {Scalar::residue(1, b.back().modulus())};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return std::nullopt;
  Scalar inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  return poly_divmod(s0, b).second;
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Matrix poly_eval(const Poly& p, const Matrix& x, const Field& f) {
  Matrix acc(x.rows(), x.cols());
  const Matrix id = Matrix::identity(x.rows(), f);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i] * id;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

// Roots of p in the working field: brute force over small F_p, rational
// root theorem over Q with bounded divisor enumeration.
std::vector<Scalar> poly_roots(const Poly& p, const Field& f) {
  std::vector<Scalar> roots;
  if (p.size() < 2) return roots;
  if (!f.is_rational()) {
    if (f.p > 200000) return roots;
    for (uint32_t x = 0; x < f.p; ++x) {
      Scalar s = Scalar::residue(x, f.p);
      if (poly_eval(p, s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  mpz_class l = 1;
  for (const auto& c : p) {
    mpz_class d = c.rational_value().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z;
  for (const auto& c : p) {
    mpq_class v = c.rational_value() * l;
    z.push_back(v.get_num());
  }
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  std::vector<Scalar> cand;
  for (const auto& a : divisors(z[low]))
    for (const auto& b : divisors(z.back())) {
      mpq_class q(a, b);
      q.canonicalize();
      cand.push_back(Scalar::rational(q));
      cand.push_back(Scalar::rational(-q));
    }
  std::sort(cand.begin(), cand.end(), [](const Scalar& a, const Scalar& b) { return a.compare(b) < 0; });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& c : cand)
    if (poly_eval(p, c).is_zero()) roots.push_back(c);
  return roots;
}

Scalar trace(const Matrix& m) {
  Scalar t;
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (size_t k = 1; k < m.rows(); ++k) p = p * m;
  return m.rows() == 0 || p.is_zero();
}

// Advances a base-p counter; false once it wraps to zero.
bool next_tuple(std::vector<uint32_t>& digits, uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

Matrix combine(const std::vector<Matrix>& basis, const Vec& x, size_t n) {
  Matrix acc(n, n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!x[i].is_zero()) acc = acc + x[i] * basis[i];
  return acc;
}

std::vector<Vec> combine_images(const std::vector<std::vector<Vec>>& hs, const Vec& x, size_t dim) {
  std::vector<Vec> out(hs.empty() ? 0 : hs[0].size(), Vec(dim));
  for (size_t i = 0; i < hs.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t r = 0; r < out.size(); ++r) axpy(out[r], x[i], hs[i][r]);
  }
  return out;
}

// Moves v from `from` to `to`, sending the block of top r to top top_map[r].
Vec transport(const ProjectivePresentation& from, const ProjectivePresentation& to,
              const std::vector<size_t>& top_map, const Vec& v) {
  Vec out(to.dim());
  for (size_t j = 0; j < from.dim(); ++j) {
    if (v[j].is_zero()) continue;
    const auto& e = from.basis(j);
    out[to.index(e.path, top_map[e.top])] = v[j];
  }
  return out;
}

std::vector<size_t> sorting_permutation(const std::vector<int>& tops) {
  std::vector<size_t> perm(tops.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return tops[a] < tops[b]; });
  return perm;
}

Scalar random_scalar(std::mt19937_64& rng, const Field& f, long range) {
  if (!f.is_rational()) return Scalar::residue(rng() % f.p, f.p);
  std::uniform_int_distribution<long> d(-range, range);
  return Scalar(d(rng));
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjectivePresentation

ProjectivePresentation::ProjectivePresentation(AlgebraPtr alg, std::vector<int> tops)
    : alg_(std::move(alg)), tops_(std::move(tops)) {
  if (!alg_) throw std::invalid_argument("presentation needs an algebra");
  const int n = static_cast<int>(alg_->vertex_count());
  pos_in_from_.assign(alg_->dim(), npos);
  for (int v = 0; v < n; ++v) {
    const auto& from = alg_->basis_from(v);
    for (size_t k = 0; k < from.size(); ++k) pos_in_from_[from[k]] = k;
  }
  for (size_t r = 0; r < tops_.size(); ++r) {
    if (tops_[r] < 0 || tops_[r] >= n) throw std::invalid_argument("top vertex out of range");
    offset_.push_back(basis_.size());
    for (size_t k : alg_->basis_from(tops_[r])) basis_.push_back({k, r});
  }
  const Quiver& q = alg_->quiver();
  arrow_action_.resize(q.arrow_count());
  for (size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    const Path step{arr.source, arr.target, {static_cast<int>(a)}};
    auto& table = arrow_action_[a];
    table.resize(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j) {
      const Path& p = alg_->basis_path(basis_[j].path);
      if (p.end != arr.source) continue;
      for (const auto& [k, c] : alg_->reduce(concat(step, p))) table[j].emplace_back(index(k, basis_[j].top), c);
    }
  }
}

size_t ProjectivePresentation::index(size_t path, size_t top) const {
  if (alg_->basis_path(path).start != tops_.at(top)) throw std::out_of_range("path does not start at the top vertex");
  return offset_[top] + pos_in_from_[path];
}

Vec ProjectivePresentation::unit(size_t k) const {
  Vec v(dim());
  v.at(k) = field().one();
  return v;
}

Vec ProjectivePresentation::embed(const Vec& lambda, size_t r) const {
  Vec out(dim());
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k].is_zero()) continue;
    if (alg_->basis_path(k).start != tops_.at(r)) throw std::invalid_argument("element is not in Λe(r)");
    out[index(k, r)] = lambda[k];
  }
  return out;
}

Vec ProjectivePresentation::component(const Vec& v, size_t r) const {
  Vec lam(alg_->dim());
  for (size_t j = offset_[r]; j < offset_[r] + block_size(r); ++j) lam[basis_[j].path] = v[j];
  return lam;
}

Vec ProjectivePresentation::act_arrow(int a, const Vec& v) const {
  Vec out(dim());
  const auto& table = arrow_action_.at(static_cast<size_t>(a));
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : table[j]) out[i] += c * v[j];
  }
  return out;
}

Vec ProjectivePresentation::act_basis(size_t alg_index, const Vec& v) const {
  Vec out(dim());
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : alg_->product(alg_index, basis_[j].path)) out[index(k, basis_[j].top)] += c * v[j];
  }
  return out;
}

Vec ProjectivePresentation::act(const Vec& lambda, const Vec& v) const {
  Vec out(dim());
  for (size_t i = 0; i < lambda.size(); ++i)
    if (!lambda[i].is_zero()) axpy(out, lambda[i], act_basis(i, v));
  return out;
}

Vec ProjectivePresentation::project_vertex(int vertex, const Vec& v) const {
  Vec out(dim());
  for (size_t j = 0; j < v.size(); ++j)
    if (end_vertex(j) == vertex) out[j] = v[j];
  return out;
}

Vec ProjectivePresentation::apply_hom(const std::vector<Vec>& images, const Vec& v) const {
  if (images.size() != tops_.size()) throw std::invalid_argument("one image per top element expected");
  Vec out(dim());
  for (size_t r = 0; r < tops_.size(); ++r) {
    Vec lam = component(v, r);
    if (!degenlab::is_zero(lam)) out = add(out, act(lam, images[r]));
  }
  return out;
}

Matrix ProjectivePresentation::hom_matrix(const std::vector<Vec>& images) const {
  std::vector<Vec> cols;
  cols.reserve(dim());
  for (size_t j = 0; j < dim(); ++j) cols.push_back(act_basis(basis_[j].path, images.at(basis_[j].top)));
  return Matrix::from_columns(cols, dim());
}

Subspace ProjectivePresentation::radical() const {
  std::vector<Vec> rows;
  for (size_t j = 0; j < dim(); ++j)
    if (length(j) > 0) rows.push_back(unit(j));
  return Subspace::span(dim(), std::move(rows));
}

std::vector<size_t> ProjectivePresentation::vertex_dims() const {
  std::vector<size_t> d(alg_->vertex_count());
  for (size_t j = 0; j < dim(); ++j) ++d[static_cast<size_t>(end_vertex(j))];
  return d;
}

std::string ProjectivePresentation::element_str(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << v[j].str() << ' ' << path_str(alg_->quiver(), alg_->basis_path(basis_[j].path)) << " z" << basis_[j].top + 1;
  }
  return first ? "0" : os.str();
}

PresentationPtr make_presentation(AlgebraPtr alg, std::vector<int> tops) {
  return std::make_shared<const ProjectivePresentation>(std::move(alg), std::move(tops));
}

// ---------------------------------------------------------------------------
// Submodule points

bool is_arrow_stable(const ProjectivePresentation& pres, const Subspace& s) {
  const auto n_arrows = static_cast<int>(pres.algebra().quiver().arrow_count());
  const auto n_vertices = static_cast<int>(pres.algebra().vertex_count());
  for (const auto& row : s.basis()) {
    for (int a = 0; a < n_arrows; ++a)
      if (!s.contains(pres.act_arrow(a, row))) return false;
    for (int v = 0; v < n_vertices; ++v)
      if (!s.contains(pres.project_vertex(v, row))) return false;
  }
  return true;
}

SubmodulePoint submodule_spin(PresentationPtr pres, const std::vector<Vec>& generators) {
  const size_t n = pres->dim();
  EchelonBuilder eb(n);
  std::deque<Vec> queue;
  const auto n_vertices = static_cast<int>(pres->algebra().vertex_count());
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionMismatch("generator length differs from dim P");
    for (int v = 0; v < n_vertices; ++v) {
      Vec h = pres->project_vertex(v, g);
      if (!degenlab::is_zero(h) && eb.insert(h)) queue.push_back(std::move(h));
    }
  }
  // Every inserted vector is vertex-homogeneous and has its arrow images in the span.
  const auto n_arrows = static_cast<int>(pres->algebra().quiver().arrow_count());
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a < n_arrows; ++a) {
      Vec y = pres->act_arrow(a, x);
      if (!degenlab::is_zero(y) && eb.insert(y)) queue.push_back(std::move(y));
    }
  }
  SubmodulePoint c{pres, eb.finish(), false};
  c.inside_radical = pres->radical().contains(c.space);
  return c;
}

SubmodulePoint make_point(PresentationPtr pres, Subspace space) {
  if (space.ambient_dim() != pres->dim()) throw DimensionMismatch("subspace ambient differs from dim P");
  if (!is_arrow_stable(*pres, space)) throw std::invalid_argument("subspace is not a submodule");
  SubmodulePoint c{pres, std::move(space), false};
  c.inside_radical = pres->radical().contains(c.space);
  return c;
}

std::vector<Vec> submodule_generators(const SubmodulePoint& c) {
  const auto& P = *c.pres;
  const auto n_arrows = static_cast<int>(P.algebra().quiver().arrow_count());
  std::vector<Vec> jrows;
  for (const auto& row : c.space.basis())
    for (int a = 0; a < n_arrows; ++a) jrows.push_back(P.act_arrow(a, row));
  const Subspace jc = Subspace::span(P.dim(), std::move(jrows));
  std::vector<Vec> gens;
  for (int v = 0; v < static_cast<int>(P.algebra().vertex_count()); ++v) {
    std::vector<Vec> part;
    for (const auto& row : c.space.basis()) part.push_back(P.project_vertex(v, row));
    auto extra = extend_basis(jc, Subspace::span(P.dim(), std::move(part)).basis());
    for (auto& g : extra) gens.push_back(std::move(g));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Representations

size_t Representation::total() const { return std::accumulate(dims.begin(), dims.end(), size_t{0}); }

size_t Representation::offset(int v) const {
  return std::accumulate(dims.begin(), dims.begin() + v, size_t{0});
}

namespace {

Vec block_of(const Representation& m, int v, const Vec& x) {
  const size_t off = m.offset(v);
  return Vec(x.begin() + static_cast<long>(off), x.begin() + static_cast<long>(off + m.dims[static_cast<size_t>(v)]));
}

Vec place(const Representation& m, int v, const Vec& blk) {
  Vec out(m.total());
  std::copy(blk.begin(), blk.end(), out.begin() + static_cast<long>(m.offset(v)));
  return out;
}

}  // namespace

Vec Representation::act_arrow(int a, const Vec& x) const {
  const Arrow& arr = alg->quiver().arrow(a);
  return place(*this, arr.target, arrows.at(static_cast<size_t>(a)).apply(block_of(*this, arr.source, x)));
}

Vec Representation::act_path(const Path& p, const Vec& x) const {
  Vec blk = block_of(*this, p.start, x);
  for (int a : p.arrows) blk = arrows.at(static_cast<size_t>(a)).apply(blk);
  return place(*this, p.end, blk);
}

Vec Representation::act(const Vec& lambda, const Vec& x) const {
  Vec out(total());
  for (size_t k = 0; k < lambda.size(); ++k)
    if (!lambda[k].is_zero()) axpy(out, lambda[k], act_path(alg->basis_path(k), x));
  return out;
}

Matrix Representation::global_arrow(int a) const {
  const Arrow& arr = alg->quiver().arrow(a);
  Matrix g(total(), total());
  const Matrix& blk = arrows.at(static_cast<size_t>(a));
  const size_t ro = offset(arr.target), co = offset(arr.source);
  for (size_t i = 0; i < blk.rows(); ++i)
    for (size_t j = 0; j < blk.cols(); ++j) g(ro + i, co + j) = blk(i, j);
  return g;
}

std::vector<size_t> Representation::graded_dims(const Subspace& s) const {
  std::vector<size_t> out(dims.size());
  for (size_t piv : s.pivots()) {
    size_t v = 0, acc = dims[0];
    while (piv >= acc) acc += dims[++v];
    ++out[v];
  }
  return out;
}

std::vector<Vec> Representation::graded_basis(const Subspace& s, int v) const {
  const size_t lo = offset(v), hi = lo + dims[static_cast<size_t>(v)];
  std::vector<Vec> out;
  for (size_t k = 0; k < s.dim(); ++k)
    if (s.pivots()[k] >= lo && s.pivots()[k] < hi) out.push_back(s.basis()[k]);
  return out;
}

Subspace Representation::radical_of(const Subspace& u) const {
  std::vector<Vec> rows;
  const auto n_arrows = static_cast<int>(arrows.size());
  for (const auto& x : u.basis())
    for (int a = 0; a < n_arrows; ++a) {
      Vec y = act_arrow(a, x);
      if (!degenlab::is_zero(y)) rows.push_back(std::move(y));
    }
  return Subspace::span(total(), std::move(rows));
}

Subspace Representation::whole() const { return Subspace::whole(total(), alg->field()); }

Vec QuotientRepresentation::project(const Vec& p_elem) const {
  Vec r = point.space.reduce(p_elem);
  Vec m(reps.size());
  for (size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) m[coordinate_of[j]] = r[j];
  return m;
}

Vec QuotientRepresentation::lift(const Vec& m) const {
  Vec v(point.pres->dim());
  for (size_t i = 0; i < reps.size(); ++i) v[reps[i]] = m[i];
  return v;
}

Matrix QuotientRepresentation::induced(const std::vector<Vec>& images) const {
  const auto& P = *point.pres;
  std::vector<Vec> cols;
  cols.reserve(reps.size());
  for (size_t j : reps) cols.push_back(project(P.apply_hom(images, P.unit(j))));
  return Matrix::from_columns(cols, reps.size());
}

QuotientRepresentation quotient_rep(const SubmodulePoint& c) {
  const auto& P = *c.pres;
  QuotientRepresentation q;
  q.point = c;
  q.rep.alg = P.algebra_ptr();
  const auto n = static_cast<int>(P.algebra().vertex_count());
  q.rep.dims.assign(static_cast<size_t>(n), 0);
  const auto nonpivots = c.space.non_pivots();
  for (int v = 0; v < n; ++v)
    for (size_t j : nonpivots)
      if (P.end_vertex(j) == v) {
        q.reps.push_back(j);
        ++q.rep.dims[static_cast<size_t>(v)];
      }
  q.coordinate_of.assign(P.dim(), npos);
  for (size_t i = 0; i < q.reps.size(); ++i) q.coordinate_of[q.reps[i]] = i;

  const Quiver& quiver = P.algebra().quiver();
  for (size_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arr = quiver.arrow(static_cast<int>(a));
    const size_t src_off = q.rep.offset(arr.source), tgt_off = q.rep.offset(arr.target);
    Matrix blk(q.rep.dims[static_cast<size_t>(arr.target)], q.rep.dims[static_cast<size_t>(arr.source)]);
    for (size_t col = 0; col < blk.cols(); ++col) {
      Vec y = q.project(P.act_arrow(static_cast<int>(a), P.unit(q.reps[src_off + col])));
      for (size_t row = 0; row < blk.rows(); ++row) blk(row, col) = y[tgt_off + row];
    }
    q.rep.arrows.push_back(std::move(blk));
  }
  for (size_t r = 0; r < P.top_count(); ++r) q.top_images.push_back(q.project(P.z(r)));

  for (const auto& rel : P.algebra().relations())
    for (size_t i = 0; i < q.reps.size(); ++i) {
      Vec x(q.reps.size());
      x[i] = P.field().one();
      Vec acc(q.reps.size());
      for (const auto& term : rel.terms) axpy(acc, term.coeff, q.rep.act_path(term.path, x));
      if (!degenlab::is_zero(acc)) throw std::logic_error("a relation does not annihilate the quotient");
    }
  return q;
}

SemisimpleSequence radical_layering(const Representation& m) {
  SemisimpleSequence s;
  if (m.total() == 0) {
    s.layers.push_back(m.dims);
    return s;
  }
  Subspace cur = m.whole();
  while (!cur.is_zero()) {
    Subspace next = m.radical_of(cur);
    if (next.dim() == cur.dim()) throw std::logic_error("radical series does not terminate");
    auto dc = m.graded_dims(cur), dn = m.graded_dims(next);
    for (size_t v = 0; v < dc.size(); ++v) dc[v] -= dn[v];
    s.layers.push_back(std::move(dc));
    cur = std::move(next);
  }
  return s;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Equal: return "Equal";
    case Dominance::StrictlyLess: return "StrictlyLess";
    case Dominance::StrictlyGreater: return "StrictlyGreater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Dominance dominance_compare(const SemisimpleSequence& a, const SemisimpleSequence& b) {
  if (a.layers.empty() || b.layers.empty()) throw std::invalid_argument("empty semisimple sequence");
  const size_t n = a.layers[0].size();
  if (b.layers[0].size() != n) throw std::invalid_argument("vertex counts differ");
  auto totals = [n](const SemisimpleSequence& s) {
    std::vector<size_t> t(n);
    for (const auto& l : s.layers)
      for (size_t v = 0; v < n; ++v) t[v] += l[v];
    return t;
  };
  if (totals(a) != totals(b)) throw std::invalid_argument("dimension vectors differ");
  if (a.layers[0] != b.layers[0]) throw std::invalid_argument("tops differ");
  const size_t len = std::max(a.layers.size(), b.layers.size());
  std::vector<size_t> sa(n), sb(n);
  bool le = true, ge = true;
  for (size_t l = 0; l < len; ++l)
    for (size_t v = 0; v < n; ++v) {
      if (l < a.layers.size()) sa[v] += a.layers[l][v];
      if (l < b.layers.size()) sb[v] += b.layers[l][v];
      if (sa[v] > sb[v]) le = false;
      if (sa[v] < sb[v]) ge = false;
    }
  if (le && ge) return Dominance::Equal;
  if (le) return Dominance::StrictlyLess;
  if (ge) return Dominance::StrictlyGreater;
  return Dominance::Incomparable;
}

// ---------------------------------------------------------------------------
// Hom spaces

namespace {

HomSpace hom_space_impl(const QuotientRepresentation& m, const QuotientRepresentation& n,
                        const std::optional<Subspace>& within, bool want_basis) {
  if (m.rep.alg != n.rep.alg) throw std::invalid_argument("modules over different algebras");
  const auto& PM = *m.point.pres;
  const Subspace u = within ? *within : n.rep.whole();
  const size_t total_n = n.rep.total();

  struct Var {
    size_t r;
    Vec b;
  };
  std::vector<Var> vars;
  for (size_t r = 0; r < PM.top_count(); ++r)
    for (auto& b : n.rep.graded_basis(u, PM.tops()[r])) vars.push_back({r, std::move(b)});

  const auto& cbasis = m.point.space.basis();
  Matrix sys(cbasis.size() * total_n, vars.size());
  for (size_t ci = 0; ci < cbasis.size(); ++ci) {
    std::vector<Vec> lam;
    for (size_t r = 0; r < PM.top_count(); ++r) lam.push_back(PM.component(cbasis[ci], r));
    for (size_t k = 0; k < vars.size(); ++k) {
      const Vec& l = lam[vars[k].r];
      if (degenlab::is_zero(l)) continue;
      Vec col = n.rep.act(l, vars[k].b);
      for (size_t i = 0; i < total_n; ++i) sys(ci * total_n + i, k) = col[i];
    }
  }
  Subspace sol = kernel(sys);
  HomSpace h;
  h.dim = sol.dim();
  if (!want_basis) return h;
  for (const auto& x : sol.basis()) {
    std::vector<Vec> images(PM.top_count(), Vec(total_n));
    for (size_t k = 0; k < vars.size(); ++k)
      if (!x[k].is_zero()) axpy(images[vars[k].r], x[k], vars[k].b);
    std::vector<Vec> cols;
    for (size_t j : m.reps) {
      const auto& e = PM.basis(j);
      cols.push_back(n.rep.act_path(PM.algebra().basis_path(e.path), images[e.top]));
    }
    h.basis.push_back(Matrix::from_columns(cols, total_n));
  }
  return h;
}

}  // namespace

HomSpace hom_space(const QuotientRepresentation& m, const QuotientRepresentation& n,
                   const std::optional<Subspace>& within) {
  return hom_space_impl(m, n, within, true);
}

size_t hom_dim(const QuotientRepresentation& m, const QuotientRepresentation& n,
               const std::optional<Subspace>& within) {
  return hom_space_impl(m, n, within, false).dim;
}

HomSpace hom_space_by_commutation(const Representation& m, const Representation& n) {
  const size_t nv = m.dims.size();
  std::vector<size_t> var_off(nv + 1);
  for (size_t v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + n.dims[v] * m.dims[v];
  // φ_v entry (i, k) is variable var_off[v] + i * m.dims[v] + k.
  auto var = [&](size_t v, size_t i, size_t k) { return var_off[v] + i * m.dims[v] + k; };
  std::vector<Vec> rows;
  const Quiver& q = m.alg->quiver();
  for (size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = static_cast<size_t>(q.arrow(static_cast<int>(a)).source);
    const auto t = static_cast<size_t>(q.arrow(static_cast<int>(a)).target);
    const Matrix& ma = m.arrows[a];
    const Matrix& na = n.arrows[a];
    for (size_t i = 0; i < n.dims[t]; ++i)
      for (size_t j = 0; j < m.dims[s]; ++j) {
        Vec row(var_off[nv]);
        for (size_t k = 0; k < m.dims[t]; ++k) row[var(t, i, k)] += ma(k, j);
        for (size_t k = 0; k < n.dims[s]; ++k) row[var(s, k, j)] -= na(i, k);
        if (!degenlab::is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Subspace sol = kernel(Matrix::from_rows(rows, var_off[nv]));
  HomSpace h;
  h.dim = sol.dim();
  for (const auto& x : sol.basis()) {
    Matrix g(n.total(), m.total());
    for (size_t v = 0; v < nv; ++v) {
      const size_t ro = n.offset(static_cast<int>(v)), co = m.offset(static_cast<int>(v));
      for (size_t i = 0; i < n.dims[v]; ++i)
        for (size_t k = 0; k < m.dims[v]; ++k) g(ro + i, co + k) = x[var(v, i, k)];
    }
    h.basis.push_back(std::move(g));
  }
  return h;
}

size_t hom_from_projective_dim(const ProjectivePresentation& pres, const std::vector<size_t>& dims) {
  size_t d = 0;
  for (int v : pres.tops()) d += dims.at(static_cast<size_t>(v));
  return d;
}

std::vector<std::vector<Vec>> hom_into(const SubmodulePoint& c, const SubmodulePoint& c_target) {
  const auto& P = *c.pres;
  if (!P.same_as(*c_target.pres)) throw std::invalid_argument("points live in different presentations");
  struct Var {
    size_t r, j;
  };
  std::vector<Var> vars;
  for (size_t r = 0; r < P.top_count(); ++r)
    for (size_t j = 0; j < P.dim(); ++j)
      if (P.end_vertex(j) == P.tops()[r]) vars.push_back({r, j});

  const auto& cbasis = c.space.basis();
  const size_t n = P.dim();
  Matrix sys(cbasis.size() * n, vars.size());
  for (size_t ci = 0; ci < cbasis.size(); ++ci) {
    std::vector<Vec> lam;
    for (size_t r = 0; r < P.top_count(); ++r) lam.push_back(P.component(cbasis[ci], r));
    for (size_t k = 0; k < vars.size(); ++k) {
      if (degenlab::is_zero(lam[vars[k].r])) continue;
      Vec col = c_target.space.reduce(P.act(lam[vars[k].r], P.unit(vars[k].j)));
      for (size_t i = 0; i < n; ++i) sys(ci * n + i, k) = col[i];
    }
  }
  Subspace sol = kernel(sys);
  std::vector<std::vector<Vec>> out;
  for (const auto& x : sol.basis()) {
    std::vector<Vec> images(P.top_count(), Vec(n));
    for (size_t k = 0; k < vars.size(); ++k)
      if (!x[k].is_zero()) images[vars[k].r][vars[k].j] = x[k];
    out.push_back(std::move(images));
  }
  return out;
}

Matrix top_matrix(const ProjectivePresentation& pres, const std::vector<Vec>& images) {
  const size_t t = pres.top_count();
  Matrix m(t, t);
  for (size_t r = 0; r < t; ++r)
    for (size_t s = 0; s < t; ++s) m(s, r) = images.at(r)[pres.offset(s)];
  return m;
}

// ---------------------------------------------------------------------------
// Isomorphism

SubmodulePoint permute_tops(const SubmodulePoint& c, const std::vector<size_t>& perm) {
  const auto& old = *c.pres;
  if (perm.size() != old.top_count()) throw std::invalid_argument("permutation size differs from top count");
  bool identity = true;
  for (size_t r = 0; r < perm.size(); ++r) identity = identity && perm[r] == r;
  if (identity) return c;
  std::vector<int> tops(perm.size());
  std::vector<size_t> inv(perm.size());
  for (size_t r = 0; r < perm.size(); ++r) {
    tops[r] = old.tops()[perm[r]];
    inv[perm[r]] = r;
  }
  auto pres = make_presentation(old.algebra_ptr(), tops);
  std::vector<Vec> rows;
  for (const auto& row : c.space.basis()) rows.push_back(transport(old, *pres, inv, row));
  return SubmodulePoint{pres, Subspace::span(pres->dim(), std::move(rows)), c.inside_radical};
}

IsoResult iso_test(const SubmodulePoint& c, const SubmodulePoint& c2, uint64_t seed) {
  IsoResult res;
  if (c.pres->algebra_ptr() != c2.pres->algebra_ptr()) throw std::invalid_argument("points over different algebras");
  auto pa = sorting_permutation(c.pres->tops()), pb = sorting_permutation(c2.pres->tops());
  SubmodulePoint a = permute_tops(c, pa), b = permute_tops(c2, pb);
  if (a.pres->tops() != b.pres->tops()) {
    res.reason = "tops differ";
    return res;
  }
  if (a.pres != b.pres) b.pres = a.pres;  // identical bases, since the top sequences agree
  if (a.space.dim() != b.space.dim()) {
    res.reason = "dimensions differ";
    return res;
  }
  const auto qa = quotient_rep(a), qb = quotient_rep(b);
  if (qa.rep.dims != qb.rep.dims) {
    res.reason = "dimension vectors differ";
    return res;
  }
  if (!(radical_layering(qa) == radical_layering(qb))) {
    res.reason = "radical layerings differ";
    return res;
  }
  const size_t end_a = hom_dim(qa, qa), end_b = hom_dim(qb, qb);
  if (end_a != end_b || hom_dim(qa, qb) != end_a || hom_dim(qb, qa) != end_a) {
    res.reason = "Hom dimensions differ";
    return res;
  }
  const auto hs = hom_into(a, b);
  if (hs.empty()) {
    res.reason = "no map carries C into C'";
    return res;
  }
  const auto& P = *a.pres;
  const Field f = P.field();
  std::vector<Matrix> tops;
  for (const auto& h : hs) tops.push_back(top_matrix(P, h));
  const size_t t = P.top_count();

  std::optional<Vec> found;
  double space_size = 1;
  if (!f.is_rational())
    for (size_t i = 0; i < hs.size() && space_size <= 65536.0; ++i) space_size *= f.p;
  if (!f.is_rational() && space_size <= 65536.0) {
    std::vector<uint32_t> digits(hs.size(), 0);
    while (!found && next_tuple(digits, f.p)) {
      Vec x(hs.size());
      for (size_t i = 0; i < x.size(); ++i) x[i] = Scalar::residue(digits[i], f.p);
      if (!determinant(combine(tops, x, t)).is_zero()) found = x;
    }
    if (!found) res.reason = "exhaustive search found no invertible map";
  } else {
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 8 && !found; ++round) {
      Vec x(hs.size());
      for (auto& s : x) s = random_scalar(rng, f, 1L << (round + 2));
      if (!determinant(combine(tops, x, t)).is_zero()) found = x;
    }
    if (!found) {
      res.probabilistic_negative = true;
      res.reason = "no invertible map in 8 seeded samples";
    }
  }
  if (!found) return res;
  res.isomorphic = true;
  if (c.pres->same_as(*c2.pres)) {
    // Conjugate the witness back to the original top order.
    auto h = combine_images(hs, *found, P.dim());
    std::vector<Vec> images(t);
    for (size_t r = 0; r < t; ++r) images[pa[r]] = transport(P, *c.pres, pa, h[r]);
    res.witness = std::move(images);
  }
  return res;
}

SubmodulePoint direct_sum(const std::vector<SubmodulePoint>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  const auto alg = parts[0].pres->algebra_ptr();
  std::vector<int> tops;
  for (const auto& p : parts) {
    if (p.pres->algebra_ptr() != alg) throw std::invalid_argument("summands over different algebras");
    tops.insert(tops.end(), p.pres->tops().begin(), p.pres->tops().end());
  }
  auto pres = make_presentation(alg, tops);
  std::vector<Vec> rows;
  size_t off = 0;
  bool inside = true;
  for (const auto& p : parts) {
    for (const auto& row : p.space.basis()) {
      Vec v(pres->dim());
      std::copy(row.begin(), row.end(), v.begin() + static_cast<long>(off));
      rows.push_back(std::move(v));
    }
    off += p.pres->dim();
    inside = inside && p.inside_radical;
  }
  return SubmodulePoint{pres, Subspace::span(pres->dim(), std::move(rows)), inside};
}

SubmodulePoint present_submodule(const QuotientRepresentation& m, const std::vector<Vec>& generators) {
  std::vector<int> tops;
  for (const auto& g : generators) {
    int vertex = -1;
    for (size_t v = 0; v < m.rep.dims.size(); ++v) {
      const size_t lo = m.rep.offset(static_cast<int>(v)), hi = lo + m.rep.dims[v];
      for (size_t i = lo; i < hi; ++i)
        if (!g[i].is_zero()) {
          if (vertex >= 0 && vertex != static_cast<int>(v)) throw std::invalid_argument("generator is not vertex-homogeneous");
          vertex = static_cast<int>(v);
        }
    }
    if (vertex < 0) throw std::invalid_argument("zero generator");
    tops.push_back(vertex);
  }
  auto pres = make_presentation(m.rep.alg, tops);
  std::vector<Vec> cols;
  for (size_t j = 0; j < pres->dim(); ++j) {
    const auto& e = pres->basis(j);
    cols.push_back(m.rep.act_path(pres->algebra().basis_path(e.path), generators[e.top]));
  }
  Subspace c = kernel(Matrix::from_columns(cols, m.rep.total()));
  SubmodulePoint out{pres, std::move(c), false};
  out.inside_radical = pres->radical().contains(out.space);
  return out;
}

SubmodulePoint present_subspace(const QuotientRepresentation& m, const Subspace& u) {
  const Subspace ju = m.rep.radical_of(u);
  std::vector<Vec> gens;
  for (size_t v = 0; v < m.rep.dims.size(); ++v) {
    auto extra = extend_basis(ju, m.rep.graded_basis(u, static_cast<int>(v)));
    for (auto& g : extra) gens.push_back(std::move(g));
  }
  return present_submodule(m, gens);
}

// ---------------------------------------------------------------------------
// Decomposition

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Vec& v, size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = v.at(i * n + j);
  return m;
}

Subspace matrix_algebra_radical(const std::vector<Matrix>& basis, const Field& f) {
  const size_t k = basis.size();
  if (k == 0) return Subspace(0);
  const size_t n = basis[0].rows();
  if (f.is_rational() || f.p > n) {
    // {x : tr(xy) = 0 for all y} is a nil ideal once 1 ∈ A and char is 0 or > n.
    Matrix g(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) g(i, j) = trace(basis[i] * basis[j]);
    return kernel(g);
  }
  double pairs = 1;
  for (size_t i = 0; i < 2 * k && pairs <= 1048576.0; ++i) pairs *= f.p;
  if (pairs > 1048576.0)
    throw NeedsSplitInput("radical of the top endomorphism algebra needs characteristic above " + std::to_string(n));
  // x ∈ rad A iff yx is nilpotent for every y ∈ A.
  std::vector<Matrix> elems;
  std::vector<Vec> coords;
  std::vector<uint32_t> digits(k, 0);
  do {
    Vec x(k);
    for (size_t i = 0; i < k; ++i) x[i] = Scalar::residue(digits[i], f.p);
    coords.push_back(x);
    elems.push_back(combine(basis, x, n));
  } while (next_tuple(digits, f.p));
  std::vector<Vec> rad;
  for (size_t i = 0; i < elems.size(); ++i) {
    bool nil = true;
    for (size_t j = 0; j < elems.size() && nil; ++j) nil = is_nilpotent(elems[j] * elems[i]);
    if (nil) rad.push_back(coords[i]);
  }
  return Subspace::span(k, std::move(rad));
}

namespace {

struct TopAlgebra {
  std::vector<Matrix> basis;               // independent top matrices
  std::vector<std::vector<Vec>> preimage;  // matching elements of End(P)
  Matrix columns;                          // flattened basis as columns
};

TopAlgebra top_algebra(const SubmodulePoint& c) {
  TopAlgebra a;
  const auto& P = *c.pres;
  const size_t t = P.top_count();
  EchelonBuilder eb(t * t);
  for (auto& h : hom_into(c, c)) {
    Matrix m = top_matrix(P, h);
    if (eb.insert(flatten(m))) {
      a.basis.push_back(std::move(m));
      a.preimage.push_back(std::move(h));
    }
  }
  std::vector<Vec> cols;
  for (const auto& m : a.basis) cols.push_back(flatten(m));
  a.columns = Matrix::from_columns(cols, t * t);
  return a;
}

// Minimal polynomial of x (coordinates in the top algebra) modulo the radical.
Poly min_poly_mod_radical(const TopAlgebra& a, const Subspace& rad, const Matrix& x, const Field& f) {
  const size_t t = x.rows();
  std::vector<Vec> reduced;
  Matrix power = Matrix::identity(t, f);
  for (size_t d = 0; d <= a.basis.size(); ++d) {
    auto coords = solve(a.columns, flatten(power));
    if (!coords) throw std::logic_error("top algebra is not closed under products");
    Vec r = rad.reduce(*coords);
    if (!reduced.empty()) {
      auto dep = solve(Matrix::from_columns(reduced, r.size()), r);
      if (dep) {
        Poly mu(d + 1);
        for (size_t i = 0; i < d; ++i) mu[i] = -(*dep)[i];
        mu[d] = f.one();
        return mu;
      }
    }
    reduced.push_back(std::move(r));
    power = power * x;
  }
  throw std::logic_error("minimal polynomial search exceeded the algebra dimension");
}

// An idempotent polynomial separating the root λ from the rest of μ, if any.
std::optional<Poly> splitting_idempotent(const Poly& mu, const Field& f) {
  for (const Scalar& lam : poly_roots(mu, f)) {
    Poly lin{-lam, f.one()};
    Poly power{f.one()}, rest = mu;
    while (true) {
      auto [q, r] = poly_divmod(rest, lin);
      if (!r.empty()) break;
      rest = q;
      power = poly_mul(power, lin);
    }
    if (rest.size() < 2) continue;
    auto inv = poly_inverse_mod(rest, power);
    if (!inv) continue;
    return poly_divmod(poly_mul(*inv, rest), mu).second;
  }
  return std::nullopt;
}

void decompose_rec(SubmodulePoint c, std::mt19937_64& rng, std::vector<SubmodulePoint>& out, int depth) {
  if (depth > 64) throw std::logic_error("decomposition recursion too deep");
  auto q = quotient_rep(c);
  if (q.rep.total() == 0) return;
  if (!c.inside_radical) {
    c = present_subspace(q, q.rep.whole());
    q = quotient_rep(c);
  }
  const size_t t = c.pres->top_count();
  if (t == 1) {
    out.push_back(c);
    return;
  }
  const Field f = c.pres->field();
  const TopAlgebra a = top_algebra(c);
  const Subspace rad = matrix_algebra_radical(a.basis, f);
  const size_t k = a.basis.size();
  if (k - rad.dim() == 1) {
    out.push_back(c);
    return;
  }

  std::vector<Vec> candidates;
  for (size_t i = 0; i < k; ++i) {
    Vec x(k);
    x[i] = f.one();
    candidates.push_back(x);
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      Vec x(k);
      x[i] = f.one();
      x[j] = f.one();
      candidates.push_back(x);
    }
  for (int r = 0; r < 32; ++r) {
    Vec x(k);
    for (auto& s : x) s = random_scalar(rng, f, 8);
    candidates.push_back(x);
  }

  const size_t d = q.rep.total();
  const Matrix id = Matrix::identity(d, f);
  for (const auto& x : candidates) {
    if (rad.contains(x)) continue;
    const Poly mu = min_poly_mod_radical(a, rad, combine(a.basis, x, t), f);
    auto e = splitting_idempotent(mu, f);
    if (!e) continue;
    Matrix phi = q.induced(combine_images(a.preimage, x, c.pres->dim()));
    Matrix eps = poly_eval(*e, phi, f);
    for (int it = 0; it < 64 && !(eps * eps == eps); ++it) {
      Matrix sq = eps * eps;
      eps = Scalar(3) * sq - Scalar(2) * (sq * eps);
    }
    if (!(eps * eps == eps)) throw std::logic_error("idempotent lifting did not converge");
    if (eps.is_zero() || eps == id) continue;
    decompose_rec(present_subspace(q, image(eps)), rng, out, depth + 1);
    decompose_rec(present_subspace(q, image(id - eps)), rng, out, depth + 1);
    return;
  }
  throw NeedsSplitInput("endomorphism algebra does not split over " + f.name());
}

}  // namespace

std::vector<SubmodulePoint> decompose_summands(const SubmodulePoint& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SubmodulePoint> out;
  decompose_rec(c, rng, out, 0);
  std::stable_sort(out.begin(), out.end(), [](const SubmodulePoint& x, const SubmodulePoint& y) {
    if (x.pres->tops() != y.pres->tops()) return x.pres->tops() < y.pres->tops();
    return x.quotient_dim() > y.quotient_dim();
  });
  return out;
}

}  // namespace degenlab
