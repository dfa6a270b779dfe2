#include "degenlab/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace degenlab {

namespace {

void require_radical(const SubmodulePoint& c) {
  if (!c.inside_radical) throw PreconditionError("C is not contained in JP");
}

// Row of the linear map Hom_K(C, P/C) for the endomorphism `images`:
// concatenated remainders of h(c_i) modulo C.
Vec tangent_row(const SubmodulePoint& c, const std::vector<Vec>& images) {
  const auto& P = *c.pres;
  Vec row;
  row.reserve(c.space.dim() * P.dim());
  for (const Vec& ci : c.space.basis()) {
    Vec r = c.space.reduce(P.apply_hom(images, ci));
    row.insert(row.end(), r.begin(), r.end());
  }
  return row;
}

// Rank of End_Λ(P) → Hom_K(C, P/C), restricted to maps into JP when asked.
size_t tangent_rank(const SubmodulePoint& c, bool radical_only) {
  const auto& P = *c.pres;
  const size_t t = P.top_count();
  EchelonBuilder eb(c.space.dim() * P.dim());
  for (size_t r = 0; r < t; ++r) {
    for (size_t j = 0; j < P.dim(); ++j) {
      if (P.end_vertex(j) != P.tops()[r]) continue;
      if (radical_only && P.length(j) == 0) continue;
      std::vector<Vec> images(t, P.zero());
      images[r] = P.unit(j);
      eb.insert(tangent_row(c, images));
    }
  }
  return eb.dim();
}

std::vector<Vec> identity_images(const ProjectivePresentation& P) {
  std::vector<Vec> out;
  for (size_t r = 0; r < P.top_count(); ++r) out.push_back(P.z(r));
  return out;
}

Subspace block_subspace(const ProjectivePresentation& P, size_t r) {
  std::vector<Vec> rows;
  for (size_t k = 0; k < P.block_size(r); ++k) rows.push_back(P.unit(P.offset(r) + k));
  return Subspace::span(P.dim(), std::move(rows));
}

// Right multiplication of an ideal basis by ω lands in `target`.
bool ideal_times_in(const PathAlgebra& alg, const Subspace& ideal, const Vec& omega, const Subspace& target) {
  for (const Vec& b : ideal.basis())
    if (!target.contains(alg.multiply(b, omega))) return false;
  return true;
}

std::string top_name(size_t r) { return "z" + std::to_string(r + 1); }

// D = full split of C along z, and h with h(C) = D when C ≅ D.
struct SplitView {
  SubmodulePoint d;
  bool isomorphic = false;
  bool probabilistic = false;
  std::vector<Vec> h, h_inv;
};

SplitView split_view(const SubmodulePoint& c, uint64_t seed) {
  const auto& P = *c.pres;
  SplitView v;
  v.d = full_local_split(c, identity_images(P));
  if (v.d.space == c.space) {
    v.isomorphic = true;
    v.h = v.h_inv = identity_images(P);
    return v;
  }
  IsoResult iso = iso_test(c, v.d, seed);
  v.isomorphic = iso.isomorphic;
  v.probabilistic = iso.probabilistic_negative;
  if (iso.isomorphic) {
    v.h = iso.witness;
    v.h_inv = inverse_images(P, v.h);
    if (transform(c, v.h).space != v.d.space) throw std::logic_error("isomorphism witness does not carry C to its split");
  }
  return v;
}

// A failure of the local conditions on a split point D.
struct LocalFailure {
  WitnessKind kind;
  size_t v = 0, w = 0;  // tops
  Vec omega;            // algebra element (torque, cross)
};

std::optional<LocalFailure> find_incomparable(const SubmodulePoint& d) {
  const auto& tops = d.pres->tops();
  const size_t t = tops.size();
  std::vector<Subspace> ideals;
  for (size_t r = 0; r < t; ++r) ideals.push_back(ideal_of(d, r));
  for (size_t v = 0; v < t; ++v)
    for (size_t w = v + 1; w < t; ++w)
      if (tops[v] == tops[w] && !ideals[v].contains(ideals[w]) && !ideals[w].contains(ideals[v]))
        return LocalFailure{WitnessKind::Incomparable, v, w, {}};
  return std::nullopt;
}

// D_v ω ⊄ D_w with ω a basis path of e(v) J e(w); same vertex when `same`.
std::optional<LocalFailure> find_translation_failure(const SubmodulePoint& d, bool same) {
  const auto& alg = d.pres->algebra();
  const auto& tops = d.pres->tops();
  const size_t t = tops.size();
  std::vector<Subspace> ideals;
  for (size_t r = 0; r < t; ++r) ideals.push_back(ideal_of(d, r));
  for (size_t v = 0; v < t; ++v) {
    for (size_t w = 0; w < t; ++w) {
      if (v == w || (tops[v] == tops[w]) != same) continue;
      for (size_t k : alg.basis_between(tops[w], tops[v], true)) {
        Vec omega = alg.element(alg.basis_path(k));
        if (!ideal_times_in(alg, ideals[v], omega, ideals[w]))
          return LocalFailure{same ? WitnessKind::Torque : WitnessKind::CrossSummand, v, w, omega};
      }
    }
  }
  return std::nullopt;
}

std::optional<LocalFailure> find_local_failure(const SubmodulePoint& d) {
  if (auto f = find_incomparable(d)) return f;
  if (auto f = find_translation_failure(d, true)) return f;
  return find_translation_failure(d, false);
}

void finish_witness(Witness& w, const SubmodulePoint& c, uint64_t seed) {
  w.limit = flat_limit(w.curve, c);
  IsoResult iso = iso_test(w.limit, c, seed);
  if (iso.isomorphic) throw std::logic_error("witness curve did not leave the orbit");
  w.limit_isomorphic = false;
  w.probabilistic = iso.probabilistic_negative;
}

Witness unipotent_witness(const SubmodulePoint& c, uint64_t seed) {
  const auto& P = *c.pres;
  const size_t t = P.top_count();
  for (size_t r = 0; r < t; ++r) {
    for (size_t j = 0; j < P.dim(); ++j) {
      if (P.end_vertex(j) != P.tops()[r] || P.length(j) == 0) continue;
      std::vector<Vec> f(t, P.zero());
      f[r] = P.unit(j);
      if (is_zero(tangent_row(c, f))) continue;
      Witness w;
      w.kind = WitnessKind::Unipotent;
      w.curve = make_unipotent_curve(c.pres, f);
      w.detail = "g = id + tau f, f: " + top_name(r) + " -> " + P.element_str(f[r]);
      finish_witness(w, c, seed);
      return w;
    }
  }
  throw PreconditionError("every f in Hom(P, JP) stabilizes C");
}

Witness splitting_witness(const SubmodulePoint& c, uint64_t seed) {
  const auto& P = *c.pres;
  Witness w;
  w.kind = WitnessKind::Splitting;
  w.top_basis = identity_images(P);
  w.weights.resize(P.top_count());
  std::iota(w.weights.begin(), w.weights.end(), 0);
  w.curve = make_torus_curve(c.pres, w.top_basis, w.weights);
  w.detail = "C is not isomorphic to its iterated split along z";
  finish_witness(w, c, seed);
  return w;
}

// Witness for a local failure of D = h(C), conjugated back to C by h^{-1}.
Witness local_witness(const SubmodulePoint& c, const SplitView& view, const LocalFailure& f, uint64_t seed) {
  const auto& P = *c.pres;
  const auto& alg = P.algebra();
  const size_t t = P.top_count();
  Witness w;
  w.kind = f.kind;
  std::ostringstream detail;
  if (f.kind == WitnessKind::CrossSummand) {
    // g_τ = f_τ ∘ (id + f): f pairs the tops at e(v) with those at e(w),
    // f_τ scales the block of e(v) by 1/τ.
    const int iv = P.tops()[f.v], iw = P.tops()[f.w];
    std::vector<size_t> src, dst;
    for (size_t r = 0; r < t; ++r) {
      if (P.tops()[r] == iv) src.push_back(r);
      if (P.tops()[r] == iw) dst.push_back(r);
    }
    auto build = [&](const std::vector<std::pair<size_t, size_t>>& pairs) {
      std::vector<Vec> fi(t, P.zero());
      for (auto [a, b] : pairs) fi[a] = P.embed(f.omega, b);
      return fi;
    };
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < std::min(src.size(), dst.size()); ++j) pairs.emplace_back(src[j], dst[j]);
    std::vector<Vec> fi = build(pairs);
    if (is_zero(tangent_row(view.d, fi))) {
      pairs = {{f.v, f.w}};
      fi = build(pairs);
    }
    std::vector<LaurentVec> on_d(t);
    for (size_t r = 0; r < t; ++r) {
      if (P.tops()[r] == iv) {
        on_d[r][-1] = P.z(r);
        if (!is_zero(fi[r])) on_d[r][0] = fi[r];
      } else {
        on_d[r][0] = P.z(r);
      }
    }
    CurveFamily g = make_curve(c.pres, on_d);
    // g' = h^{-1} g h, coefficientwise.
    std::vector<LaurentVec> on_c(t);
    for (size_t r = 0; r < t; ++r) {
      for (auto& [e, v] : g.apply(view.h[r])) {
        Vec x = P.apply_hom(view.h_inv, v);
        if (!is_zero(x)) on_c[r][e] = x;
      }
    }
    w.curve = make_curve(c.pres, on_c);
    detail << "g = f_tau o (id + f), f:";
    for (auto [a, b] : pairs) detail << " " << top_name(a) << " -> " << P.element_str(fi[a]);
  } else {
    std::vector<Vec> y = identity_images(P);
    if (f.kind == WitnessKind::Incomparable) {
      y[f.v] = add(P.z(f.v), P.z(f.w));
      detail << "ideals at " << top_name(f.v) << " and " << top_name(f.w) << " are incomparable";
    } else {
      y[f.v] = add(P.z(f.v), P.embed(f.omega, f.w));
      detail << top_name(f.v) << " ideal times " << alg.element_str(f.omega) << " is not inside the "
             << top_name(f.w) << " ideal";
    }
    w.weights.assign(t, 0);
    w.weights[f.w] = 1;
    for (const Vec& v : y) w.top_basis.push_back(P.apply_hom(view.h_inv, v));
    w.curve = make_torus_curve(c.pres, w.top_basis, w.weights);
  }
  w.detail = detail.str();
  finish_witness(w, c, seed);
  return w;
}

LocalDecomposition decomposition_from(const SubmodulePoint& c, const std::vector<Vec>& y) {
  LocalDecomposition dec;
  dec.top_basis = y;
  SubmodulePoint d = transform(c, inverse_images(*c.pres, y));
  for (size_t r = 0; r < c.pres->top_count(); ++r) dec.ideals.push_back(ideal_of(d, r));
  return dec;
}

// Adapted top basis for the flags of a parabolic stabilizer, in C's top order.
std::vector<Vec> adapted_basis(const SubmodulePoint& c, const ParabolicityResult& par) {
  const auto& P = *c.pres;
  std::vector<Vec> y(P.top_count());
  for (const auto& fl : par.flags) {
    const size_t n = fl.tops.size();
    std::vector<Vec> b;
    Subspace cur(n);
    for (const auto& mem : fl.members) {
      for (Vec& v : extend_basis(cur, mem.basis())) b.push_back(std::move(v));
      cur = mem;
    }
    if (b.size() != n) throw std::logic_error("flag does not end in the whole space");
    for (size_t j = 0; j < n; ++j) {
      Vec v = P.zero();
      for (size_t q = 0; q < n; ++q)
        if (!b[j][q].is_zero()) axpy(v, b[j][q], P.z(fl.tops[q]));
      y[fl.tops[j]] = std::move(v);
    }
  }
  return y;
}

}  // namespace

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Unipotent: return "unipotent";
    case WitnessKind::Splitting: return "splitting";
    case WitnessKind::Incomparable: return "incomparable";
    case WitnessKind::Torque: return "torque";
    case WitnessKind::CrossSummand: return "cross_summand";
  }
  return "?";
}

size_t invariant_m(const SubmodulePoint& c) {
  require_radical(c);
  const auto m = quotient_rep(c);
  const Subspace jm = m.radical();
  const size_t a = hom_from_projective_dim(*c.pres, m.rep.graded_dims(jm));
  const size_t b = hom_dim(m, m, jm);
  if (b > a) throw std::logic_error("Hom(M, JM) exceeds Hom(P, JM)");
  return a - b;
}

size_t unipotent_tangent_rank(const SubmodulePoint& c) { return tangent_rank(c, true); }

size_t orbit_dimension(const SubmodulePoint& c) {
  const auto m = quotient_rep(c);
  const size_t a = hom_from_projective_dim(*c.pres, m.dimension_vector());
  const size_t b = hom_dim(m, m);
  const size_t tangent = tangent_rank(c, false);
  if (b > a || a - b != tangent) throw std::logic_error("orbit dimension: Hom count and tangent rank disagree");
  return tangent;
}

size_t torus_orbit_dimension(const SubmodulePoint& c, const std::vector<Vec>& top_basis) {
  const auto& P = *c.pres;
  validate_top_basis(P, top_basis);
  SubmodulePoint ct = transform(c, inverse_images(P, top_basis));
  EchelonBuilder eb(ct.space.dim() * P.dim());
  for (size_t r = 0; r < P.top_count(); ++r) {
    std::vector<Vec> images(P.top_count(), P.zero());
    images[r] = P.z(r);
    eb.insert(tangent_row(ct, images));
  }
  return eb.dim();
}

StabilizerAlgebra stabilizer_algebra(const SubmodulePoint& c) {
  const auto& P = *c.pres;
  const Field& F = P.field();
  const size_t t = P.top_count();
  std::vector<std::pair<size_t, size_t>> unknowns;  // (s, r)
  for (size_t r = 0; r < t; ++r)
    for (size_t s = 0; s < t; ++s)
      if (P.tops()[s] == P.tops()[r]) unknowns.emplace_back(s, r);
  const size_t len = c.space.dim() * P.dim();
  std::vector<Vec> cols;
  for (auto [s, r] : unknowns) {
    std::vector<Vec> images(t, P.zero());
    images[r] = P.z(s);
    cols.push_back(tangent_row(c, images));
  }
  Subspace ker = len == 0 ? Subspace::whole(unknowns.size(), F) : kernel(Matrix::from_columns(cols, len));
  StabilizerAlgebra out;
  for (const Vec& x : ker.basis()) {
    Matrix m(t, t);
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) m(i, j) = F.zero();
    for (size_t k = 0; k < unknowns.size(); ++k) m(unknowns[k].first, unknowns[k].second) = x[k];
    out.basis.push_back(std::move(m));
  }
  return out;
}

size_t ParabolicityResult::flag_dim() const {
  size_t d = 0;
  for (const auto& f : flags) d += f.variety_dim;
  return d;
}

ParabolicityResult parabolicity(const SubmodulePoint& c) {
  const auto& P = *c.pres;
  const Field& F = P.field();
  const size_t t = P.top_count();
  ParabolicityResult res;
  StabilizerAlgebra A = stabilizer_algebra(c);
  res.algebra_dim = A.dim();

  std::vector<Matrix> rad;
  const Subspace rad_coords = matrix_algebra_radical(A.basis, F);
  for (const Vec& x : rad_coords.basis()) {
    Matrix m(t, t);
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) m(i, j) = F.zero();
    for (size_t k = 0; k < A.dim(); ++k)
      if (!x[k].is_zero()) m = m + x[k] * A.basis[k];
    rad.push_back(std::move(m));
  }

  // Kernel series F_1 ⊂ F_2 ⊂ ... of rad A acting on K^t.
  const Subspace whole = Subspace::whole(t, F);
  std::vector<Subspace> series;
  Subspace cur(t);
  while (cur != whole) {
    Subspace next = whole;
    for (const Matrix& r : rad) next = intersect(next, preimage(r, cur));
    if (next == cur) throw std::logic_error("radical of the stabilizer is not nilpotent");
    series.push_back(next);
    cur = next;
  }

  bool preserved = true;
  for (const Matrix& a : A.basis)
    for (const Subspace& s : series)
      if (!s.contains(image(a, s))) preserved = false;

  std::vector<int> vertices;
  for (int v : P.tops())
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  std::sort(vertices.begin(), vertices.end());
  for (int v : vertices) {
    VertexFlag fl;
    fl.vertex = v;
    for (size_t r = 0; r < t; ++r)
      if (P.tops()[r] == v) fl.tops.push_back(r);
    std::vector<Vec> vr;
    for (size_t r : fl.tops) {
      Vec e(t, F.zero());
      e[r] = F.one();
      vr.push_back(std::move(e));
    }
    const Subspace block = Subspace::span(t, vr);
    size_t prev = 0;
    for (const Subspace& s : series) {
      Subspace local = intersect(s, block);
      if (local.dim() == prev) continue;
      std::vector<Vec> rows;
      for (const Vec& b : local.basis()) {
        Vec x;
        for (size_t r : fl.tops) x.push_back(b[r]);
        rows.push_back(std::move(x));
      }
      fl.members.push_back(Subspace::span(fl.tops.size(), std::move(rows)));
      fl.jumps.push_back(local.dim() - prev);
      prev = local.dim();
    }
    size_t below = 0, tri = 0;
    for (size_t s : fl.jumps) {
      fl.variety_dim += below * s;
      below += s;
      tri += s * below;
    }
    res.block_triangular_dim += tri;
    res.flags.push_back(std::move(fl));
  }
  res.parabolic = preserved && res.algebra_dim == res.block_triangular_dim;
  return res;
}

Subspace ideal_of(const SubmodulePoint& c, size_t r) {
  const auto& P = *c.pres;
  Subspace local = intersect(c.space, block_subspace(P, r));
  std::vector<Vec> rows;
  for (const Vec& v : local.basis()) rows.push_back(P.component(v, r));
  return Subspace::span(P.algebra().dim(), std::move(rows));
}

bool is_split(const SubmodulePoint& c) {
  Subspace acc(c.pres->dim());
  for (size_t r = 0; r < c.pres->top_count(); ++r) acc = sum(acc, intersect(c.space, block_subspace(*c.pres, r)));
  return acc == c.space;
}

bool check_unipotent_maximal(const SubmodulePoint& c) { return invariant_m(c) == 0; }

TorusCheck check_torus_maximal(const SubmodulePoint& c, uint64_t seed) {
  require_radical(c);
  TorusCheck out;
  SplitView view = split_view(c, seed);
  if (!view.isomorphic) {
    out.witness = splitting_witness(c, seed);
    return out;
  }
  if (auto f = find_local_failure(view.d)) {
    out.witness = local_witness(c, view, *f, seed);
    return out;
  }
  out.maximal = true;
  LocalDecomposition dec;
  dec.top_basis = view.h_inv;
  for (size_t r = 0; r < c.pres->top_count(); ++r) dec.ideals.push_back(ideal_of(view.d, r));
  out.decomposition = std::move(dec);
  return out;
}

Witness witness_degeneration(const SubmodulePoint& c, WitnessKind mode, uint64_t seed) {
  require_radical(c);
  if (mode == WitnessKind::Unipotent) {
    if (invariant_m(c) == 0) throw PreconditionError("m = 0: no unipotent degeneration");
    return unipotent_witness(c, seed);
  }
  SplitView view = split_view(c, seed);
  if (mode == WitnessKind::Splitting) {
    if (view.isomorphic) throw PreconditionError("C is isomorphic to its iterated split");
    return splitting_witness(c, seed);
  }
  if (!view.isomorphic) throw PreconditionError("C does not split; only the splitting witness applies");
  std::optional<LocalFailure> f;
  if (mode == WitnessKind::Incomparable) f = find_incomparable(view.d);
  else f = find_translation_failure(view.d, mode == WitnessKind::Torque);
  if (!f) throw PreconditionError(std::string("no ") + to_string(mode) + " failure");
  return local_witness(c, view, *f, seed);
}

DegenerationReport check_maximal(const SubmodulePoint& c, CheckMode mode, uint64_t seed) {
  require_radical(c);
  DegenerationReport rep;
  const auto& P = *c.pres;
  const auto q = quotient_rep(c);
  rep.field = P.field().name();
  rep.dimension_vector = q.dimension_vector();
  rep.layering = radical_layering(q);
  rep.t = P.top_count();
  rep.m = invariant_m(c);
  rep.orbit_dim = orbit_dimension(c);
  try {
    rep.s = decompose_summands(c, seed).size();
  } catch (const NeedsSplitInput& e) {
    rep.notes.push_back(std::string("summand count unavailable: ") + e.what());
  }

  if (mode == CheckMode::Unipotent) {
    rep.unipotent_maximal = rep.m == 0;
    if (rep.m > 0) rep.witness = unipotent_witness(c, seed);
    return rep;
  }
  TorusCheck tc = check_torus_maximal(c, seed);
  rep.torus_maximal = tc.maximal;
  if (mode == CheckMode::Torus) {
    rep.decomposition = tc.decomposition;
    rep.witness = tc.witness;
    return rep;
  }

  rep.unipotent_maximal = rep.m == 0;
  if (rep.m == 0) {
    try {
      rep.parabolic = parabolicity(c);
    } catch (const NeedsSplitInput& e) {
      rep.notes.push_back(std::string("parabolicity test unavailable: ") + e.what());
    }
  }
  const bool par_ok = rep.parabolic && rep.parabolic->parabolic;
  if (rep.m == 0 && !rep.parabolic) {
    // Fall back on the torus criterion when the stabilizer radical is out of reach.
    rep.fully_maximal = tc.maximal;
  } else {
    rep.fully_maximal = rep.m == 0 && par_ok;
  }
  if (*rep.fully_maximal) {
    if (!tc.maximal) throw std::logic_error("parabolic stabilizer but a torus degeneration exists");
    if (rep.parabolic && rep.parabolic->flag_dim() != rep.orbit_dim)
      throw std::logic_error("flag variety dimension differs from orbit dimension");
    if (rep.s && *rep.s != rep.t) throw std::logic_error("maximal point with s != t");
    rep.decomposition = rep.parabolic ? decomposition_from(c, adapted_basis(c, *rep.parabolic)) : tc.decomposition;
  } else if (rep.m > 0) {
    rep.witness = unipotent_witness(c, seed);
  } else {
    if (tc.maximal) throw std::logic_error("stabilizer not parabolic but no torus degeneration found");
    rep.witness = tc.witness;
  }
  return rep;
}

SubmodulePoint modulimax_normal_form(const SubmodulePoint& c, uint64_t seed) {
  (void)seed;
  require_radical(c);
  if (invariant_m(c) != 0) throw PreconditionError("point is not maximal (m > 0)");
  ParabolicityResult par = parabolicity(c);
  if (!par.parabolic) throw PreconditionError("point is not maximal (stabilizer not parabolic)");
  const auto& P = *c.pres;
  std::vector<Vec> y = adapted_basis(c, par);
  SubmodulePoint d = transform(c, inverse_images(P, y));
  std::vector<size_t> perm(P.top_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return P.tops()[a] < P.tops()[b]; });
  SubmodulePoint out = permute_tops(d, perm);
  if (!is_split(out)) throw std::logic_error("normal form is not split");
  const auto& tops = out.pres->tops();
  for (size_t r = 0; r + 1 < tops.size(); ++r)
    if (tops[r] == tops[r + 1] && !ideal_of(out, r).contains(ideal_of(out, r + 1)))
      throw std::logic_error("normal form ideals do not descend");
  return out;
}

}  // namespace degenlab
