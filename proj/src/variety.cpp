#include "degenlab/variety.hpp"

#include <functional>

#include "degenlab/io.hpp"

namespace degenlab {

namespace {

std::string arrow_name(int level, size_t i) { return "a" + std::to_string(level) + "_" + std::to_string(i); }

Vec path_element(const PathAlgebra& alg, const std::vector<RelationTerm>& terms) {
  Vec out(alg.dim(), alg.field().zero());
  for (const auto& t : terms)
    for (const auto& [k, c] : alg.reduce(t.path)) out[k] += alg.field().embed(t.coeff) * c;
  return out;
}

void require_nonzero(const std::vector<Scalar>& k, size_t m) {
  if (k.size() != m + 1) throw std::invalid_argument("expected " + std::to_string(m + 1) + " coordinates");
  for (const auto& x : k)
    if (!x.is_zero()) return;
  throw std::invalid_argument("the zero vector is not a projective point");
}

}  // namespace

Path CompiledVariety::level_path(const std::vector<size_t>& indices) const {
  Path p = Path::trivial(0);
  for (size_t l = 0; l < indices.size(); ++l) {
    int a = quiver.arrow_index(arrow_name(static_cast<int>(l) + 1, indices[l]));
    if (a < 0) throw std::invalid_argument("no arrow at that level and index");
    p.arrows.push_back(a);
    p.end = quiver.arrow(a).target;
  }
  return p;
}

std::string CompiledVariety::algebra_text() const {
  std::vector<RelationElement> all = commutativity;
  all.insert(all.end(), poly_relations.begin(), poly_relations.end());
  return write_algebra(quiver, all, options);
}

CompiledVariety compile_variety(const ProjectiveVarietyInput& in) {
  CompiledVariety v;
  v.m = in.m;
  int levels = in.levels;
  for (const auto& h : in.polys) {
    if (h.nvars() > in.m + 1) throw std::invalid_argument("polynomial uses a variable beyond X_m");
    if (h.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!h.homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    if (in.levels == 0) levels = std::max(levels, static_cast<int>(h.degree()));
    else if (static_cast<int>(h.degree()) > in.levels) throw std::invalid_argument("polynomial degree exceeds the level count");
    if (h.degree() == 0) throw std::invalid_argument("constant polynomial");
  }
  if (levels < 1) throw std::invalid_argument("level count must be positive");
  v.levels = levels;
  for (int r = 1; r <= levels + 1; ++r) v.quiver.add_vertex(std::to_string(r));
  for (int r = 1; r <= levels; ++r)
    for (size_t i = 0; i <= in.m; ++i) v.quiver.add_arrow(arrow_name(r, i), std::to_string(r), std::to_string(r + 1));

  const Field& F = in.field;
  // a^{r+1}_i a^r_j − a^{r+1}_j a^r_i for i < j, on composable level pairs.
  for (int r = 1; r < levels; ++r) {
    for (size_t i = 0; i <= in.m; ++i) {
      for (size_t j = i + 1; j <= in.m; ++j) {
        auto path = [&](size_t lo, size_t hi) {
          Path p{r - 1, r + 1, {v.quiver.arrow_index(arrow_name(r, lo)), v.quiver.arrow_index(arrow_name(r + 1, hi))}};
          return p;
        };
        v.commutativity.push_back(RelationElement{{{F.one(), path(j, i)}, {-F.one(), path(i, j)}}});
      }
    }
  }
  bool linear = false;
  for (const auto& h : in.polys) {
    RelationElement rel;
    for (const auto& [mono, c] : h.terms()) {
      std::vector<size_t> idx;  // ascending: level 1 carries the smallest index
      for (size_t i = 0; i < mono.size(); ++i)
        for (unsigned e = 0; e < mono[i]; ++e) idx.push_back(i);
      rel.terms.push_back({c, v.level_path(idx)});
    }
    linear = linear || h.degree() == 1;
    v.poly_relations.push_back(std::move(rel));
    Polynomial padded(in.m + 1, F);
    for (const auto& [mono, c] : h.terms()) {
      Polynomial::Monomial m2(in.m + 1, 0);
      std::copy(mono.begin(), mono.end(), m2.begin());
      padded.add_term(m2, c);
    }
    v.polys.push_back(std::move(padded));
  }
  v.options.field = F;
  v.options.allow_linear = linear;
  AlgebraOptions base_opts;
  base_opts.field = F;
  std::vector<RelationElement> all = v.commutativity;
  all.insert(all.end(), v.poly_relations.begin(), v.poly_relations.end());
  v.algebra = std::make_shared<const PathAlgebra>(PathAlgebra::build(v.quiver, all, v.options));
  v.base = std::make_shared<const PathAlgebra>(PathAlgebra::build(v.quiver, v.commutativity, base_opts));
  v.pres = make_presentation(v.algebra, {0});
  v.base_pres = make_presentation(v.base, {0});
  return v;
}

SubmodulePoint psi_point(const CompiledVariety& v, const std::vector<Scalar>& k, bool over_base) {
  require_nonzero(k, v.m);
  const auto& pres = over_base ? v.base_pres : v.pres;
  const auto& alg = pres->algebra();
  const Field& F = alg.field();
  std::vector<Vec> gens;
  for (size_t i = 0; i <= v.m; ++i) {
    for (size_t j = i + 1; j <= v.m; ++j) {
      Vec g = path_element(alg, {{F.embed(k[i]), v.level_path({j})}, {-F.embed(k[j]), v.level_path({i})}});
      gens.push_back(pres->embed(g, 0));
    }
  }
  return submodule_spin(pres, gens);
}

bool variety_membership(const CompiledVariety& v, const std::vector<Scalar>& k) {
  SubmodulePoint c = psi_point(v, k, true);
  const auto& alg = v.base_pres->algebra();
  bool member = true;
  for (const auto& rel : v.poly_relations)
    member = member && c.space.contains(v.base_pres->embed(path_element(alg, rel.terms), 0));
  bool direct = true;
  for (const auto& h : v.polys) {
    std::vector<Scalar> x;
    for (const auto& s : k) x.push_back(h.field().embed(s));
    direct = direct && h.evaluate(x).is_zero();
  }
  if (member != direct) throw std::logic_error("variety membership disagrees with polynomial evaluation");
  return member;
}

bool dagger_identity_holds(const CompiledVariety& v, const std::vector<Scalar>& k, size_t j, bool over_base) {
  require_nonzero(k, v.m);
  if (j > v.m || !k[j].is_one()) throw std::invalid_argument("dehomogenizing coordinate must equal 1");
  SubmodulePoint c = psi_point(v, k, over_base);
  const auto& pres = *c.pres;
  const auto& alg = pres.algebra();
  const Field& F = alg.field();
  bool ok = true;
  std::vector<size_t> idx;
  std::function<void()> rec = [&]() {
    if (!idx.empty()) {
      Scalar coeff = F.one();
      for (size_t i : idx) coeff *= F.embed(k[i]);
      Vec lhs = pres.embed(alg.element(v.level_path(idx)), 0);
      Vec rhs = pres.embed(alg.element(v.level_path(std::vector<size_t>(idx.size(), j))), 0);
      if (!c.space.contains(sub(lhs, scale(rhs, coeff)))) ok = false;
    }
    if (static_cast<int>(idx.size()) == v.levels) return;
    for (size_t i = 0; i <= v.m && ok; ++i) {
      idx.push_back(i);
      rec();
      idx.pop_back();
    }
  };
  rec();
  return ok;
}

PathBasis variety_chart_basis(const CompiledVariety& v, size_t j) {
  if (j > v.m) throw std::invalid_argument("coordinate index out of range");
  const auto& P = *v.pres;
  const auto& alg = P.algebra();
  PathBasis s;
  s.counts = v.dimension_vector();
  s.elements.push_back(P.offset(0));
  for (int l = 1; l <= v.levels; ++l) {
    auto idx = alg.basis_index(v.level_path(std::vector<size_t>(static_cast<size_t>(l), j)));
    if (!idx) throw std::invalid_argument("the path a^l_j...a^1_j vanishes in the compiled algebra");
    s.elements.push_back(P.index(*idx, 0));
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

}  // namespace degenlab
