#include "degenlab/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace degenlab {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

using Key = std::pair<int, std::vector<int>>;

Key key_of(const Path& p) { return {p.start, p.arrows}; }

}  // namespace

int Quiver::add_vertex(const std::string& id) {
  if (!valid_name(id)) throw std::invalid_argument("invalid vertex id '" + id + "'");
  if (vertex_lookup_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
  int v = static_cast<int>(vertices_.size());
  vertices_.push_back(id);
  vertex_lookup_[id] = v;
  return v;
}

int Quiver::add_arrow(const std::string& name, const std::string& source, const std::string& target) {
  if (!valid_name(name)) throw std::invalid_argument("invalid arrow name '" + name + "'");
  if (name == "e") throw std::invalid_argument("arrow name 'e' is reserved for trivial paths");
  if (name.size() > 1 && name[0] == 'e' && vertex_lookup_.count(name.substr(1)))
    throw std::invalid_argument("arrow name '" + name + "' collides with a trivial path name");
  if (arrow_lookup_.count(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
  int s = vertex_index(source), t = vertex_index(target);
  if (s < 0) throw std::invalid_argument("arrow '" + name + "' has undeclared source '" + source + "'");
  if (t < 0) throw std::invalid_argument("arrow '" + name + "' has undeclared target '" + target + "'");
  int a = static_cast<int>(arrows_.size());
  arrows_.push_back(Arrow{name, s, t});
  arrow_lookup_[name] = a;
  return a;
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_lookup_.find(name);
  return it == arrow_lookup_.end() ? -1 : it->second;
}

Path concat(const Path& p, const Path& q) {
  if (q.end != p.start) throw std::invalid_argument("non-composable paths");
  Path r{q.start, p.end, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex_id(p.start);
  std::string s;
  for (size_t k = p.arrows.size(); k-- > 0;) {
    s += q.arrow(p.arrows[k]).name;
    if (k) s += "*";
  }
  return s;
}

Path parse_path(const Quiver& q, const std::string& text, std::optional<int> start) {
  if (text.empty()) throw PathError("empty path", 0);
  if (text == "e") {
    if (!start) throw PathError("bare 'e' needs a known vertex", 0);
    return Path::trivial(*start);
  }
  if (text[0] == 'e' && q.arrow_index(text) < 0 && text.find('*') == std::string::npos) {
    int v = q.vertex_index(text.substr(1));
    if (v >= 0) {
      if (start && *start != v) throw PathError("trivial path " + text + " does not start at the expected vertex", 0);
      return Path::trivial(v);
    }
  }
  std::vector<std::pair<std::string, size_t>> names;
  size_t pos = 0;
  while (true) {
    size_t star = text.find('*', pos);
    std::string name = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (name.empty()) throw PathError("empty arrow name in path '" + text + "'", pos);
    names.emplace_back(name, pos);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  Path p;
  for (size_t k = names.size(); k-- > 0;) {
    int a = q.arrow_index(names[k].first);
    if (a < 0) throw PathError("unknown arrow '" + names[k].first + "'", names[k].second);
    const Arrow& arr = q.arrow(a);
    if (p.arrows.empty()) {
      p.start = arr.source;
    } else if (arr.source != p.end) {
      throw PathError("arrow '" + arr.name + "' does not compose with the path to its right", names[k].second);
    }
    p.arrows.push_back(a);
    p.end = arr.target;
  }
  if (start && p.start != *start)
    throw PathError("path '" + text + "' does not start at vertex " + q.vertex_id(*start), 0);
  return p;
}

int path_compare(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.length() == 0) return a.start < b.start ? -1 : (a.start > b.start ? 1 : 0);
  for (size_t k = a.length(); k-- > 0;) {
    const std::string& x = q.arrow(a.arrows[k]).name;
    const std::string& y = q.arrow(b.arrows[k]).name;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::vector<RelationElement> split_uniform(const RelationElement& r) {
  std::map<std::pair<int, int>, std::map<Key, Scalar>> parts;
  std::map<std::pair<int, int>, std::vector<Path>> order;
  for (const auto& t : r.terms) {
    auto comp = std::make_pair(t.path.start, t.path.end);
    auto& m = parts[comp];
    Key k = key_of(t.path);
    if (!m.count(k)) order[comp].push_back(t.path);
    m[k] += t.coeff;
  }
  std::vector<RelationElement> out;
  for (auto& [comp, m] : parts) {
    RelationElement e;
    for (const auto& p : order[comp]) {
      const Scalar& c = m[key_of(p)];
      if (!c.is_zero()) e.terms.push_back(RelationTerm{c, p});
    }
    if (!e.terms.empty()) out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct Builder {
  const Quiver& q;
  std::vector<std::vector<int>> monomials;

  bool killed(const std::vector<int>& seq) const {
    for (const auto& m : monomials) {
      if (m.size() > seq.size()) continue;
      if (std::search(seq.begin(), seq.end(), m.begin(), m.end()) != seq.end()) return true;
    }
    return false;
  }

  bool killed_suffix(const std::vector<int>& seq) const {
    for (const auto& m : monomials)
      if (m.size() <= seq.size() && std::equal(m.begin(), m.end(), seq.end() - static_cast<long>(m.size())))
        return true;
    return false;
  }

  // Surviving paths of length <= n, grouped by start vertex.
  std::vector<Path> enumerate(size_t n) const {
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(static_cast<int>(v)));
    out = frontier;
    for (size_t len = 1; len <= n; ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier)
        for (size_t a = 0; a < q.arrow_count(); ++a) {
          const Arrow& arr = q.arrow(static_cast<int>(a));
          if (arr.source != p.end) continue;
          Path r = p;
          r.arrows.push_back(static_cast<int>(a));
          r.end = arr.target;
          if (killed_suffix(r.arrows)) continue;
          next.push_back(std::move(r));
        }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    return out;
  }
};

struct Component {
  std::vector<Path> paths;  // ascending path order
  std::map<std::vector<int>, size_t> col;
  std::vector<Vec> rows;
};

}  // namespace

PathAlgebra PathAlgebra::build(Quiver quiver, std::vector<RelationElement> relations, const AlgebraOptions& opts) {
  PathAlgebra A;
  A.quiver_ = std::move(quiver);
  A.field_ = opts.field;
  const Quiver& Q = A.quiver_;
  if (Q.vertex_count() == 0) throw AlgebraError("quiver has no vertices");

  std::vector<RelationElement> rels;
  for (const auto& r : relations)
    for (auto& u : split_uniform(r)) {
      for (auto& t : u.terms) {
        if (t.path.length() == 0) throw AlgebraError("inadmissible relation: trivial path term");
        if (t.path.length() < 2 && !opts.allow_linear)
          throw AlgebraError("inadmissible relation: term '" + path_str(Q, t.path) + "' has length < 2");
        t.coeff = A.field_.embed(t.coeff);
        if (t.coeff.is_zero()) continue;
      }
      std::erase_if(u.terms, [](const RelationTerm& t) { return t.coeff.is_zero(); });
      if (!u.terms.empty()) rels.push_back(std::move(u));
    }
  A.relations_ = rels;

  Builder B{Q, {}};
  std::vector<const RelationElement*> poly;
  for (const auto& r : rels) {
    if (r.terms.size() == 1)
      B.monomials.push_back(r.terms[0].path.arrows);
    else
      poly.push_back(&r);
  }

  auto attempt = [&](int n, std::map<std::pair<int, int>, Component>& comps) -> bool {
    comps.clear();
    size_t top = static_cast<size_t>(n) + 1;
    auto all = B.enumerate(top);
    std::sort(all.begin(), all.end(), [&](const Path& a, const Path& b) { return path_compare(Q, a, b) < 0; });
    std::vector<std::vector<const Path*>> by_start(Q.vertex_count()), by_end(Q.vertex_count());
    for (const auto& p : all) {
      auto& c = comps[{p.start, p.end}];
      c.col[p.arrows] = c.paths.size();
      c.paths.push_back(p);
    }
    for (auto& [k, c] : comps)
      for (const auto& p : c.paths) {
        by_start[static_cast<size_t>(p.start)].push_back(&p);
        by_end[static_cast<size_t>(p.end)].push_back(&p);
      }
    for (const auto* g : poly) {
      int s = g->terms[0].path.start, t = g->terms[0].path.end;
      size_t minlen = g->terms[0].path.length();
      for (const auto& term : g->terms) minlen = std::min(minlen, term.path.length());
      if (minlen > top) continue;
      for (const Path* qp : by_end[static_cast<size_t>(s)]) {
        if (qp->length() + minlen > top) continue;
        for (const Path* pp : by_start[static_cast<size_t>(t)]) {
          if (qp->length() + pp->length() + minlen > top) continue;
          auto& c = comps[{qp->start, pp->end}];
          Vec row(c.paths.size());
          bool any = false;
          for (const auto& term : g->terms) {
            Path full = concat(*pp, concat(term.path, *qp));
            if (full.length() > top || B.killed(full.arrows)) continue;
            row[c.col.at(full.arrows)] += term.coeff;
            any = true;
          }
          if (any && !is_zero(row)) c.rows.push_back(std::move(row));
        }
      }
    }
    for (auto& [k, c] : comps) {
      Subspace span = Subspace::span(c.paths.size(), c.rows);
      for (size_t j = 0; j < c.paths.size(); ++j) {
        if (c.paths[j].length() != top) continue;
        Vec unit(c.paths.size());
        unit[j] = A.field_.one();
        if (!span.contains(unit)) return false;
      }
    }
    return true;
  };

  std::map<std::pair<int, int>, Component> comps;
  if (opts.max_len) {
    if (*opts.max_len < 0) throw AlgebraError("max_len must be nonnegative");
    A.max_len_ = *opts.max_len;
    if (!attempt(A.max_len_, comps)) throw AlgebraError("max_len too small");
  } else {
    bool ok = false;
    for (int n = 1; n <= 24 && !ok; ++n) {
      ok = attempt(n, comps);
      A.max_len_ = n;
    }
    if (!ok) throw AlgebraError("no length bound up to 24 makes the ideal contain all long paths (not admissible?)");
  }

  // Normal forms modulo I inside paths of length <= max_len; leading terms are
  // the smallest paths, so reductions never shorten a path.
  size_t n = static_cast<size_t>(A.max_len_);
  struct Local {
    std::vector<Path> paths;
    std::vector<Vec> rows;
    std::vector<size_t> pivots;
  };
  std::vector<Local> locals;
  std::vector<Path> basis;
  for (auto& [k, c] : comps) {
    Local L;
    size_t keep = 0;
    while (keep < c.paths.size() && c.paths[keep].length() <= n) ++keep;
    L.paths.assign(c.paths.begin(), c.paths.begin() + static_cast<long>(keep));
    for (auto& r : c.rows) {
      Vec t(r.begin(), r.begin() + static_cast<long>(keep));
      if (!is_zero(t)) L.rows.push_back(std::move(t));
    }
    L.pivots = rref(L.rows, keep);
    std::set<size_t> piv(L.pivots.begin(), L.pivots.end());
    for (size_t j = 0; j < keep; ++j)
      if (!piv.count(j)) basis.push_back(L.paths[j]);
    locals.push_back(std::move(L));
  }
  std::sort(basis.begin(), basis.end(), [&](const Path& a, const Path& b) {
    if (a.start != b.start) return a.start < b.start;
    return path_compare(Q, a, b) < 0;
  });
  A.basis_ = basis;
  A.from_.assign(Q.vertex_count(), {});
  for (size_t i = 0; i < basis.size(); ++i) {
    A.index_[key_of(basis[i])] = i;
    A.from_[static_cast<size_t>(basis[i].start)].push_back(i);
  }
  for (const auto& L : locals) {
    std::map<size_t, size_t> pivot_row;
    for (size_t r = 0; r < L.pivots.size(); ++r) pivot_row[L.pivots[r]] = r;
    for (size_t j = 0; j < L.paths.size(); ++j) {
      SparseVec nf;
      auto it = pivot_row.find(j);
      if (it == pivot_row.end()) {
        nf.emplace_back(A.index_.at(key_of(L.paths[j])), A.field_.one());
      } else {
        const Vec& row = L.rows[it->second];
        for (size_t c = 0; c < L.paths.size(); ++c)
          if (c != j && !row[c].is_zero()) nf.emplace_back(A.index_.at(key_of(L.paths[c])), -row[c]);
        std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      }
      A.normal_forms_[key_of(L.paths[j])] = std::move(nf);
    }
  }

  size_t d = A.basis_.size();
  A.products_.assign(d * d, {});
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const Path& a = A.basis_[i];
      const Path& b = A.basis_[j];
      if (b.end != a.start) continue;
      A.products_[i * d + j] = A.reduce(concat(a, b));
    }
  size_t longest = 0;
  for (const auto& p : A.basis_) longest = std::max(longest, p.length());
  A.loewy_length_ = static_cast<int>(longest) + 1;
  return A;
}

std::vector<size_t> PathAlgebra::basis_between(int i, int j, bool radical_only) const {
  std::vector<size_t> out;
  for (size_t k : basis_from(i))
    if (basis_[k].end == j && (!radical_only || basis_[k].length() >= 1)) out.push_back(k);
  return out;
}

std::optional<size_t> PathAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(key_of(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const SparseVec& PathAlgebra::reduce(const Path& p) const {
  static const SparseVec kZero;
  if (p.length() > static_cast<size_t>(max_len_)) return kZero;
  auto it = normal_forms_.find(key_of(p));
  return it == normal_forms_.end() ? kZero : it->second;
}

Vec PathAlgebra::element(const Path& p) const {
  Vec v(dim());
  for (const auto& [k, c] : reduce(p)) v[k] = c;
  return v;
}

Vec PathAlgebra::multiply(const Vec& a, const Vec& b) const {
  size_t d = dim();
  if (a.size() != d || b.size() != d) throw DimensionMismatch("algebra element of wrong length");
  Vec r(d);
  for (size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const auto& pr = product(i, j);
      if (pr.empty()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, x] : pr) r[k] += c * x;
    }
  }
  return r;
}

Vec PathAlgebra::idempotent(int v) const { return element(Path::trivial(v)); }

Vec PathAlgebra::unit() const {
  Vec u(dim());
  for (size_t v = 0; v < vertex_count(); ++v) u = add(u, idempotent(static_cast<int>(v)));
  return u;
}

std::vector<Subspace> PathAlgebra::radical_series() const {
  std::vector<Subspace> out;
  for (int l = 1; l < loewy_length_; ++l) {
    std::vector<Vec> rows;
    for (size_t k = 0; k < dim(); ++k)
      if (basis_[k].length() >= static_cast<size_t>(l)) {
        Vec v(dim());
        v[k] = field_.one();
        rows.push_back(std::move(v));
      }
    out.push_back(Subspace::span(dim(), std::move(rows)));
  }
  return out;
}

Subspace PathAlgebra::idempotent_component(int i, int j, bool radical_only) const {
  std::vector<Vec> rows;
  for (size_t k : basis_between(i, j, radical_only)) {
    Vec v(dim());
    v[k] = field_.one();
    rows.push_back(std::move(v));
  }
  return Subspace::span(dim(), std::move(rows));
}

std::string PathAlgebra::element_str(const Vec& a) const {
  std::string s;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += a[k].str() + " " + path_str(quiver_, basis_[k]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace degenlab
