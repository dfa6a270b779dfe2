#include "degenlab/grass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace degenlab {

namespace {

void combinations(const std::vector<size_t>& pool, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

bool truncation_closed(const ProjectivePresentation& P, const PathBasis& s) {
  const auto& alg = P.algebra();
  for (size_t k : s.elements) {
    const auto& e = P.basis(k);
    const Path& p = alg.basis_path(e.path);
    for (size_t l = 1; l < p.length(); ++l) {
      Path sub{p.start, alg.quiver().arrow(p.arrows[l - 1]).target, {p.arrows.begin(), p.arrows.begin() + l}};
      auto idx = alg.basis_index(sub);
      if (!idx || !s.contains(P.index(*idx, e.top))) return false;
    }
  }
  return true;
}

// σ-coordinates of a P vector modulo C: members of σ stay, every other
// basis element q contributes Σ_b x[q;b] b.
using Coords = std::map<size_t, Polynomial>;

struct ChartContext {
  const ProjectivePresentation& P;
  const PathBasis& sigma;
  size_t nvars;
  Field field;
  std::map<size_t, std::vector<std::pair<size_t, size_t>>> vars_of_q;  // q -> (b, var)

  Polynomial zero() const { return Polynomial(nvars, field); }

  void add(Coords& out, size_t b, const Polynomial& p) const {
    auto it = out.try_emplace(b, zero()).first;
    it->second = it->second + p;
  }

  Coords reduce(const Vec& v) const {
    Coords out;
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (sigma.contains(k)) {
        add(out, k, Polynomial::constant(nvars, field, v[k]));
        continue;
      }
      auto it = vars_of_q.find(k);
      if (it == vars_of_q.end()) continue;
      for (auto [b, var] : it->second) add(out, b, v[k] * Polynomial::variable(nvars, field, var));
    }
    return out;
  }
};

}  // namespace

bool PathBasis::contains(size_t k) const { return std::binary_search(elements.begin(), elements.end(), k); }

void validate_path_basis(const ProjectivePresentation& P, const PathBasis& sigma) {
  if (!std::is_sorted(sigma.elements.begin(), sigma.elements.end()) ||
      std::adjacent_find(sigma.elements.begin(), sigma.elements.end()) != sigma.elements.end())
    throw std::invalid_argument("path basis elements must be strictly increasing");
  for (size_t k : sigma.elements)
    if (k >= P.dim()) throw std::invalid_argument("path basis element outside P");
  for (size_t r = 0; r < P.top_count(); ++r)
    if (!sigma.contains(P.offset(r))) throw std::invalid_argument("path basis omits z" + std::to_string(r + 1));
  std::vector<size_t> counts(P.algebra().vertex_count(), 0);
  for (size_t k : sigma.elements) ++counts[static_cast<size_t>(P.end_vertex(k))];
  if (counts != sigma.counts) throw std::invalid_argument("path basis counts do not match its elements");
}

std::vector<PathBasis> enumerate_path_bases(const ProjectivePresentation& P, const std::vector<size_t>& d,
                                            bool closed) {
  const size_t n = P.algebra().vertex_count();
  if (d.size() != n) throw std::invalid_argument("dimension vector has the wrong length");
  std::vector<PathBasis> out;
  // Basis elements of P are independent, so only the counts need filtering.
  std::vector<std::vector<std::vector<size_t>>> choices(n);
  for (size_t i = 0; i < n; ++i) {
    size_t tops = static_cast<size_t>(std::count(P.tops().begin(), P.tops().end(), static_cast<int>(i)));
    if (d[i] < tops) return out;
    std::vector<size_t> pool;
    for (size_t k = 0; k < P.dim(); ++k)
      if (P.length(k) > 0 && P.end_vertex(k) == static_cast<int>(i)) pool.push_back(k);
    if (pool.size() < d[i] - tops) return out;
    combinations(pool, d[i] - tops, choices[i]);
  }
  std::vector<size_t> pick(n, 0);
  while (true) {
    PathBasis s;
    s.counts = d;
    for (size_t r = 0; r < P.top_count(); ++r) s.elements.push_back(P.offset(r));
    for (size_t i = 0; i < n; ++i)
      for (size_t k : choices[i][pick[i]]) s.elements.push_back(k);
    std::sort(s.elements.begin(), s.elements.end());
    if (!closed || truncation_closed(P, s)) out.push_back(std::move(s));
    size_t i = n;
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

bool schu_membership(const SubmodulePoint& c, const PathBasis& sigma) {
  const auto& P = *c.pres;
  validate_path_basis(P, sigma);
  if (c.space.dim() + sigma.elements.size() != P.dim()) return false;
  std::vector<Vec> rows = c.space.basis();
  for (size_t k : sigma.elements) rows.push_back(P.unit(k));
  return rank(rows, P.dim()) == P.dim();
}

std::string path_element_str(const ProjectivePresentation& P, size_t k) {
  const auto& e = P.basis(k);
  std::string s = path_str(P.algebra().quiver(), P.algebra().basis_path(e.path));
  if (P.top_count() > 1) s += ".z" + std::to_string(e.top + 1);
  return s;
}

std::string ChartSystem::text() const {
  std::vector<std::string> all = names;
  std::ostringstream out;
  out << "vars:";
  for (size_t i = 0; i < free_vars.size(); ++i) out << (i ? ", " : " ") << names[free_vars[i]];
  out << "\n";
  for (const auto& e : equations) out << e.str(all) << "\n";
  return out.str();
}

ChartSystem chart_equations(PresentationPtr pres, const PathBasis& sigma) {
  const auto& P = *pres;
  validate_path_basis(P, sigma);
  const Field F = P.field();
  ChartSystem sys;
  sys.pres = pres;
  sys.basis = sigma;
  std::map<size_t, std::vector<std::pair<size_t, size_t>>> vars_of_q;
  for (size_t q = 0; q < P.dim(); ++q) {
    if (sigma.contains(q)) continue;
    for (size_t b : sigma.elements) {
      if (P.length(b) == 0 || P.end_vertex(b) != P.end_vertex(q)) continue;
      vars_of_q[q].emplace_back(b, sys.unknowns.size());
      sys.unknowns.emplace_back(q, b);
      sys.names.push_back("x[" + path_element_str(P, q) + ";" + path_element_str(P, b) + "]");
    }
  }
  const size_t nv = sys.unknowns.size();
  ChartContext ctx{P, sigma, nv, F, vars_of_q};

  // Arrow stability of the generators g_q = q − Σ_b x[q;b] b.
  std::vector<Polynomial> eqs;
  const auto& quiver = P.algebra().quiver();
  for (size_t q = 0; q < P.dim(); ++q) {
    if (sigma.contains(q)) continue;
    for (size_t a = 0; a < quiver.arrow_count(); ++a) {
      if (quiver.arrow(static_cast<int>(a)).source != P.end_vertex(q)) continue;
      Coords img = ctx.reduce(P.act_arrow(static_cast<int>(a), P.unit(q)));
      auto it = vars_of_q.find(q);
      if (it != vars_of_q.end()) {
        for (auto [b, var] : it->second) {
          Coords ab = ctx.reduce(P.act_arrow(static_cast<int>(a), P.unit(b)));
          Polynomial x = Polynomial::variable(nv, F, var);
          for (auto& [k, p] : ab) ctx.add(img, k, Polynomial(nv, F) - x * p);
        }
      }
      for (auto& [k, p] : img)
        if (!p.is_zero()) eqs.push_back(p);
    }
  }

  // Unknowns x[q;b] with q = a·s for some s ∈ σ are arrow-action entries
  // (primary); the others are products of them (derived). Derived unknowns
  // are eliminated through any equation in which they occur linearly with a
  // constant coefficient; primary ones only through equations of degree ≤ 1.
  const auto& alg = P.algebra();
  std::vector<bool> primary(nv, false);
  for (size_t v = 0; v < nv; ++v) {
    const auto& e = P.basis(sys.unknowns[v].first);
    const Path& p = alg.basis_path(e.path);
    Path trunc{p.start, p.start, {p.arrows.begin(), p.arrows.end() - 1}};
    if (!trunc.arrows.empty()) trunc.end = quiver.arrow(trunc.arrows.back()).target;
    auto idx = alg.basis_index(trunc);
    primary[v] = idx && sigma.contains(P.index(*idx, e.top));
  }
  sys.eliminated.assign(nv, std::nullopt);
  auto eliminate_pass = [&](bool primaries) {
    bool any = false, changed = true;
    while (changed) {
      changed = false;
      for (size_t v = nv; v-- > 0;) {
        if (sys.eliminated[v] || primary[v] != primaries) continue;
        for (size_t e = 0; e < eqs.size(); ++e) {
          if (primaries && eqs[e].degree() > 1) continue;
          auto c = eqs[e].linear_coefficient(v);
          if (!c) continue;
          Polynomial rest = eqs[e] - *c * Polynomial::variable(nv, F, v);
          Polynomial value = (-c->inverse()) * rest;
          eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(e));
          for (auto& q : eqs) q = q.substitute(v, value);
          for (auto& x : sys.eliminated)
            if (x) x = x->substitute(v, value);
          sys.eliminated[v] = value;
          changed = any = true;
          break;
        }
      }
    }
    return any;
  };
  while (eliminate_pass(false) | eliminate_pass(true)) {
  }
  for (size_t v = 0; v < nv; ++v)
    if (!sys.eliminated[v]) sys.free_vars.push_back(v);
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    Polynomial n = e.normalized();
    if (std::find(sys.equations.begin(), sys.equations.end(), n) == sys.equations.end()) sys.equations.push_back(n);
  }
  return sys;
}

std::vector<Scalar> chart_coordinates(const SubmodulePoint& c, const ChartSystem& sys) {
  const auto& P = *c.pres;
  if (!schu_membership(c, sys.basis)) throw std::invalid_argument("point is not in the chart");
  std::vector<Vec> cols = c.space.basis();
  for (size_t k : sys.basis.elements) cols.push_back(P.unit(k));
  Matrix m = Matrix::from_columns(cols, P.dim());
  const size_t off = c.space.dim();
  std::map<size_t, Vec> sol;
  std::vector<Scalar> out(sys.unknowns.size(), P.field().zero());
  for (size_t i = 0; i < sys.unknowns.size(); ++i) {
    auto [q, b] = sys.unknowns[i];
    if (!sol.count(q)) {
      auto x = solve(m, P.unit(q));
      if (!x) throw std::logic_error("chart coordinates: complement does not span");
      sol[q] = *x;
    }
    auto pos = std::lower_bound(sys.basis.elements.begin(), sys.basis.elements.end(), b) - sys.basis.elements.begin();
    out[i] = sol[q][off + static_cast<size_t>(pos)];
  }
  // q must not involve z_r modulo C, or C would leave JP.
  for (auto& [q, x] : sol)
    for (size_t j = 0; j < sys.basis.elements.size(); ++j)
      if (P.length(sys.basis.elements[j]) == 0 && !x[off + j].is_zero())
        throw std::invalid_argument("point is not inside JP");
  return out;
}

std::optional<SubmodulePoint> chart_point(const ChartSystem& sys, const std::vector<Scalar>& free_values) {
  const auto& P = *sys.pres;
  const Field F = P.field();
  const size_t nv = sys.unknowns.size();
  if (free_values.size() != sys.free_vars.size()) throw std::invalid_argument("wrong number of free values");
  std::vector<Scalar> x(nv, F.zero());
  for (size_t i = 0; i < sys.free_vars.size(); ++i) x[sys.free_vars[i]] = F.embed(free_values[i]);
  for (size_t v = 0; v < nv; ++v)
    if (sys.eliminated[v]) x[v] = sys.eliminated[v]->evaluate(x);
  for (const auto& e : sys.equations)
    if (!e.evaluate(x).is_zero()) return std::nullopt;
  std::map<size_t, Vec> gens;
  for (size_t q = 0; q < P.dim(); ++q)
    if (!sys.basis.contains(q)) gens[q] = P.unit(q);
  for (size_t v = 0; v < nv; ++v) {
    auto [q, b] = sys.unknowns[v];
    axpy(gens[q], -x[v], P.unit(b));
  }
  std::vector<Vec> rows;
  for (auto& [q, g] : gens) rows.push_back(std::move(g));
  SubmodulePoint c = make_point(sys.pres, Subspace::span(P.dim(), std::move(rows)));
  if (!schu_membership(c, sys.basis)) throw std::logic_error("chart point misses its own chart");
  return c;
}

}  // namespace degenlab
