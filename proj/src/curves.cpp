#include "degenlab/curves.hpp"

#include <algorithm>
#include <random>

namespace degenlab {

namespace {

Scalar power(const Scalar& tau, int e, const Field& f) {
  Scalar base = e < 0 ? tau.inverse() : tau;
  Scalar out = f.one();
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

void add_term(LaurentVec& lv, int e, const Vec& v) {
  if (degenlab::is_zero(v)) return;
  auto it = lv.find(e);
  if (it == lv.end()) {
    lv.emplace(e, v);
    return;
  }
  it->second = add(it->second, v);
  if (degenlab::is_zero(it->second)) lv.erase(it);
}

void check_images(const ProjectivePresentation& pres, const std::vector<Vec>& images) {
  if (images.size() != pres.top_count()) throw std::invalid_argument("one image per top element expected");
  for (size_t r = 0; r < images.size(); ++r) {
    if (images[r].size() != pres.dim()) throw DimensionMismatch("image length differs from dim P");
    if (pres.project_vertex(pres.tops()[r], images[r]) != images[r])
      throw std::invalid_argument("image of z" + std::to_string(r + 1) + " is not normed by its vertex");
  }
}

// Blocks of P belonging to the listed tops.
Subspace top_blocks(const ProjectivePresentation& pres, const std::vector<bool>& in) {
  std::vector<Vec> rows;
  for (size_t j = 0; j < pres.dim(); ++j)
    if (in[pres.basis(j).top]) rows.push_back(pres.unit(j));
  return Subspace::span(pres.dim(), std::move(rows));
}

Vec keep_blocks(const ProjectivePresentation& pres, const std::vector<bool>& in, const Vec& v) {
  Vec out(v.size());
  for (size_t j = 0; j < v.size(); ++j)
    if (in[pres.basis(j).top]) out[j] = v[j];
  return out;
}

// (C ∩ Q) ⊕ π(C), Q the blocks marked in `in`.
Subspace split_space(const SubmodulePoint& c, const std::vector<bool>& in) {
  const auto& P = *c.pres;
  std::vector<bool> out(in.size());
  for (size_t r = 0; r < in.size(); ++r) out[r] = !in[r];
  Subspace kept = intersect(c.space, top_blocks(P, in));
  std::vector<Vec> rows = kept.basis();
  for (const auto& b : c.space.basis()) rows.push_back(keep_blocks(P, out, b));
  return Subspace::span(P.dim(), std::move(rows));
}

std::vector<bool> mask(size_t t, const std::vector<size_t>& selected) {
  std::vector<bool> in(t, false);
  for (size_t r : selected) {
    if (r >= t) throw std::invalid_argument("top index out of range");
    in[r] = true;
  }
  return in;
}

}  // namespace

LaurentVec CurveFamily::apply(const Vec& v) const {
  std::map<int, std::vector<Vec>> by_exp;
  for (const auto& lv : images)
    for (const auto& [e, _] : lv) by_exp[e];
  const size_t t = pres->top_count();
  LaurentVec out;
  for (auto& [e, imgs] : by_exp) {
    imgs.assign(t, pres->zero());
    for (size_t r = 0; r < t; ++r) {
      auto it = images[r].find(e);
      if (it != images[r].end()) imgs[r] = it->second;
    }
    add_term(out, e, pres->apply_hom(imgs, v));
  }
  return out;
}

std::vector<Vec> CurveFamily::at(const Scalar& tau) const {
  if (tau.is_zero()) throw std::invalid_argument("curves are evaluated at nonzero τ");
  const Field& f = pres->field();
  std::vector<Vec> out(images.size(), pres->zero());
  for (size_t r = 0; r < images.size(); ++r)
    for (const auto& [e, v] : images[r]) axpy(out[r], power(f.embed(tau), e, f), v);
  return out;
}

bool CurveFamily::generically_invertible(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const Field& f = pres->field();
  std::uniform_int_distribution<long> d(2, f.is_rational() ? 1000 : static_cast<long>(f.p) - 1);
  for (int k = 0; k < 2; ++k) {
    Scalar tau = f.from_int(d(rng));
    if (!determinant(pres->hom_matrix(at(tau))).is_zero()) return true;
  }
  return false;
}

CurveFamily constant_curve(PresentationPtr pres) {
  std::vector<LaurentVec> images(pres->top_count());
  for (size_t r = 0; r < images.size(); ++r) images[r][0] = pres->z(r);
  return CurveFamily{std::move(pres), std::move(images)};
}

CurveFamily make_curve(PresentationPtr pres, std::vector<LaurentVec> images) {
  if (images.size() != pres->top_count()) throw std::invalid_argument("one image per top element expected");
  for (size_t r = 0; r < images.size(); ++r) {
    for (auto it = images[r].begin(); it != images[r].end();) {
      if (it->second.size() != pres->dim()) throw DimensionMismatch("image length differs from dim P");
      if (pres->project_vertex(pres->tops()[r], it->second) != it->second)
        throw std::invalid_argument("image of z" + std::to_string(r + 1) + " is not normed by its vertex");
      it = degenlab::is_zero(it->second) ? images[r].erase(it) : std::next(it);
    }
  }
  return CurveFamily{std::move(pres), std::move(images)};
}

CurveFamily make_unipotent_curve(PresentationPtr pres, const std::vector<Vec>& f_images) {
  check_images(*pres, f_images);
  const Subspace jp = pres->radical();
  for (const auto& v : f_images)
    if (!jp.contains(v)) throw std::invalid_argument("f(P) is not contained in JP");
  std::vector<LaurentVec> images(pres->top_count());
  for (size_t r = 0; r < images.size(); ++r) {
    images[r][0] = pres->z(r);
    add_term(images[r], 1, f_images[r]);
  }
  return CurveFamily{std::move(pres), std::move(images)};
}

void validate_top_basis(const ProjectivePresentation& pres, const std::vector<Vec>& top_basis) {
  check_images(pres, top_basis);
  if (determinant(top_matrix(pres, top_basis)).is_zero())
    throw std::invalid_argument("top elements are dependent modulo JP");
}

std::vector<Vec> inverse_images(const ProjectivePresentation& pres, const std::vector<Vec>& images) {
  Matrix inv = inverse(pres.hom_matrix(images));
  std::vector<Vec> out;
  for (size_t r = 0; r < pres.top_count(); ++r) out.push_back(inv.column(pres.offset(r)));
  return out;
}

SubmodulePoint transform(const SubmodulePoint& c, const std::vector<Vec>& images) {
  std::vector<Vec> rows;
  for (const auto& b : c.space.basis()) rows.push_back(c.pres->apply_hom(images, b));
  return make_point(c.pres, Subspace::span(c.pres->dim(), std::move(rows)));
}

CurveFamily make_torus_curve(PresentationPtr pres, const std::vector<Vec>& top_basis, const std::vector<int>& weights) {
  validate_top_basis(*pres, top_basis);
  if (weights.size() != top_basis.size()) throw std::invalid_argument("one weight per top element expected");
  // g = h D h^{-1} with h: z_r ↦ y_r and D: z_r ↦ τ^{w_r} z_r.
  const auto back = inverse_images(*pres, top_basis);
  const size_t t = pres->top_count();
  std::vector<LaurentVec> images(t);
  for (size_t r = 0; r < t; ++r)
    for (size_t s = 0; s < t; ++s) {
      Vec lam = pres->component(back[r], s);
      if (degenlab::is_zero(lam)) continue;
      add_term(images[r], weights[s], pres->act(lam, top_basis[s]));
    }
  return CurveFamily{std::move(pres), std::move(images)};
}

SubmodulePoint flat_limit(const CurveFamily& curve, const SubmodulePoint& c) {
  const auto& P = *curve.pres;
  if (!c.pres->same_as(P)) throw std::invalid_argument("curve and point live on different presentations");
  const size_t n = P.dim();
  // Each g_τ(c_i) becomes a polynomial in s = 1/τ with nonzero constant term.
  std::vector<std::vector<Vec>> polys;
  size_t degree_budget = 0;
  for (const auto& b : c.space.basis()) {
    LaurentVec lv = curve.apply(b);
    if (lv.empty()) throw CurveError("degenerate curve: g_τ kills a vector of C");
    const int top = lv.rbegin()->first;
    std::vector<Vec> poly(static_cast<size_t>(top - lv.begin()->first) + 1, Vec(n));
    for (const auto& [e, v] : lv) poly[static_cast<size_t>(top - e)] = v;
    degree_budget += poly.size() - 1;
    polys.push_back(std::move(poly));
  }
  // Replacing the highest-degree member of a dependency among the constant
  // terms by the combination divided by s lowers the total degree.
  for (size_t iter = 0;; ++iter) {
    if (iter > degree_budget) throw CurveError("flat limit saturation did not terminate");
    std::vector<Vec> consts;
    for (const auto& p : polys) consts.push_back(p[0]);
    Subspace dep = kernel(Matrix::from_columns(consts, n));
    if (dep.is_zero()) break;
    const Vec& coeffs = dep.basis().front();
    size_t j = polys.size();
    for (size_t i = 0; i < polys.size(); ++i)
      if (!coeffs[i].is_zero() && (j == polys.size() || polys[i].size() > polys[j].size())) j = i;
    size_t len = polys[j].size();
    std::vector<Vec> comb(len, Vec(n));
    for (size_t i = 0; i < polys.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (size_t k = 0; k < polys[i].size(); ++k) axpy(comb[k], coeffs[i], polys[i][k]);
    }
    size_t shift = 0;
    while (shift < len && degenlab::is_zero(comb[shift])) ++shift;
    if (shift == len) throw CurveError("degenerate curve: g_τ(C) drops dimension");
    comb.erase(comb.begin(), comb.begin() + static_cast<long>(shift));
    while (comb.size() > 1 && degenlab::is_zero(comb.back())) comb.pop_back();
    polys[j] = std::move(comb);
  }
  std::vector<Vec> consts;
  for (const auto& p : polys) consts.push_back(p[0]);
  Subspace lim = Subspace::span(n, std::move(consts));
  if (lim.dim() != c.space.dim()) throw std::logic_error("flat limit changed the dimension");
  if (!is_arrow_stable(P, lim)) throw std::logic_error("flat limit is not a submodule");
  SubmodulePoint out{curve.pres, std::move(lim), false};
  out.inside_radical = P.radical().contains(out.space);
  if (c.inside_radical && !out.inside_radical) throw std::logic_error("flat limit left JP");
  return out;
}

CurveFamily split_curve(PresentationPtr pres, const std::vector<size_t>& selected) {
  auto in = mask(pres->top_count(), selected);
  std::vector<LaurentVec> images(pres->top_count());
  for (size_t r = 0; r < images.size(); ++r) images[r][in[r] ? 0 : 1] = pres->z(r);
  return CurveFamily{std::move(pres), std::move(images)};
}

bool top_stably_embedded(const SubmodulePoint& c, const std::vector<size_t>& selected) {
  const auto& P = *c.pres;
  Subspace q = top_blocks(P, mask(P.top_count(), selected));
  // In P: JQ + C = (Q + C) ∩ (JP + C).
  Subspace jq = intersect(q, P.radical());
  return sum(jq, c.space) == intersect(sum(q, c.space), sum(P.radical(), c.space));
}

SubmodulePoint split_by_submodule(const SubmodulePoint& c, const std::vector<size_t>& selected) {
  if (!top_stably_embedded(c, selected)) throw std::invalid_argument("selected tops do not span a top-stably embedded submodule");
  auto out = make_point(c.pres, split_space(c, mask(c.pres->top_count(), selected)));
  if (flat_limit(split_curve(c.pres, selected), c).space != out.space)
    throw std::logic_error("split disagrees with the limit of its curve");
  return out;
}

SubmodulePoint full_local_split(const SubmodulePoint& c, const std::vector<Vec>& top_basis) {
  const auto& P = *c.pres;
  validate_top_basis(P, top_basis);
  SubmodulePoint cur = transform(c, inverse_images(P, top_basis));
  const size_t t = P.top_count();
  for (size_t k = 1; k < t; ++k) {
    std::vector<bool> in(t, false);
    std::fill(in.begin(), in.begin() + static_cast<long>(k), true);
    cur = make_point(c.pres, split_space(cur, in));
  }
  return transform(cur, top_basis);
}

}  // namespace degenlab
