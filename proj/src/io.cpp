#include "degenlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace degenlab {

ParseError::ParseError(const std::string& msg, size_t line_no, size_t col)
    : std::runtime_error(line_no ? "line " + std::to_string(line_no) + (col ? ", column " + std::to_string(col) : "") + ": " + msg
                                 : msg),
      line(line_no),
      column(col),
      message(msg) {}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

enum class Tok { Num, Name, Star, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;  // 0-based column in the parsed string
};

std::vector<Token> lex(const std::string& s, size_t line_no, size_t col_base) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        size_t k = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == k) throw ParseError("denominator expected after '/'", line_no, col_base + j + 1);
      }
      out.push_back({Tok::Num, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, s.substr(i, j - i), i});
      i = j;
    } else if (c == '*') {
      out.push_back({Tok::Star, "*", i++});
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", i++});
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-", i++});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, col_base + i + 1);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_top_ref(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') return false;
  for (size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
  return true;
}

// One signed term: [number [*]] [name (* name)*]. Top references end the term
// when `allow_top` is set.
struct RawTerm {
  mpq_class coeff = 1;
  std::vector<std::pair<std::string, size_t>> names;
  std::optional<std::pair<std::string, size_t>> top;
  size_t pos = 0;
};

std::vector<RawTerm> parse_terms(const std::vector<Token>& toks, bool allow_top, size_t line_no, size_t col_base) {
  std::vector<RawTerm> terms;
  size_t i = 0;
  auto fail = [&](const std::string& msg, size_t pos) -> ParseError {
    return ParseError(msg, line_no, col_base + pos + 1);
  };
  bool first = true;
  while (toks[i].kind != Tok::End) {
    RawTerm t;
    t.pos = toks[i].pos;
    int sign = 1;
    bool had_sep = false;
    while (toks[i].kind == Tok::Plus || toks[i].kind == Tok::Minus) {
      if (toks[i].kind == Tok::Minus) sign = -sign;
      had_sep = true;
      ++i;
    }
    if (!first && !had_sep) throw fail("'+' or '-' expected between terms", toks[i].pos);
    first = false;
    if (toks[i].kind == Tok::Num) {
      try {
        t.coeff = parse_rational(toks[i].text);
      } catch (const std::invalid_argument&) {
        throw fail("bad number '" + toks[i].text + "'", toks[i].pos);
      }
      ++i;
      if (toks[i].kind == Tok::Star) {
        ++i;
        if (toks[i].kind != Tok::Name) throw fail("path expected after '*'", toks[i].pos);
      }
    }
    t.coeff *= sign;
    while (toks[i].kind == Tok::Name) {
      if (allow_top && is_top_ref(toks[i].text)) {
        t.top = {toks[i].text, toks[i].pos};
        ++i;
        break;
      }
      t.names.emplace_back(toks[i].text, toks[i].pos);
      ++i;
      if (toks[i].kind == Tok::Star) {
        ++i;
        if (toks[i].kind != Tok::Name) throw fail("arrow name expected after '*'", toks[i].pos);
      } else if (toks[i].kind == Tok::Name && !(allow_top && is_top_ref(toks[i].text))) {
        throw fail("'*' expected between arrow names", toks[i].pos);
      }
    }
    if (allow_top && !t.top) throw fail("top reference z<r> expected", toks[i].pos);
    if (!allow_top && t.names.empty()) throw fail("path expected", toks[i].pos);
    if (toks[i].kind == Tok::Num || toks[i].kind == Tok::Star) throw fail("unexpected '" + toks[i].text + "'", toks[i].pos);
    terms.push_back(std::move(t));
  }
  if (terms.empty()) throw fail("empty expression", 0);
  return terms;
}

Path term_path(const Quiver& q, const RawTerm& t, std::optional<int> start, size_t line_no, size_t col_base) {
  if (t.names.empty()) return Path::trivial(*start);
  std::string joined;
  std::vector<size_t> name_at;  // joined offset -> name index
  for (size_t k = 0; k < t.names.size(); ++k) {
    if (k) joined += '*';
    name_at.resize(joined.size() + t.names[k].first.size() + 1, k);
    joined += t.names[k].first;
  }
  try {
    return parse_path(q, joined, start);
  } catch (const PathError& e) {
    size_t k = e.position < name_at.size() ? name_at[e.position] : 0;
    throw ParseError(e.what(), line_no, col_base + t.names[k].second + 1);
  }
}

void enumerate_paths(const Quiver& q, Path cur, size_t len, std::vector<Path>& out) {
  if (cur.length() == len) {
    out.push_back(cur);
    return;
  }
  for (size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    if (arr.source != cur.end) continue;
    Path next = cur;
    next.arrows.push_back(static_cast<int>(a));
    next.end = arr.target;
    enumerate_paths(q, next, len, out);
  }
}

const std::set<std::string>& known_sections() {
  static const std::set<std::string> names{"quiver", "relations", "options", "module", "curve"};
  return names;
}

}  // namespace

Sections split_sections(const std::string& text) {
  Sections out;
  std::istringstream is(text);
  std::string line, current;
  size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("unterminated section header", no, 1);
      current = trim(t.substr(1, t.size() - 2));
      if (!known_sections().count(current)) throw ParseError("unknown section [" + current + "]", no, 1);
      out[current];
      continue;
    }
    if (current.empty()) throw ParseError("content before the first section header", no, 1);
    out[current].push_back({no, line});
  }
  return out;
}

RelationElement parse_relation(const Quiver& q, const std::string& text, size_t line_no) {
  const size_t base = 0;
  auto terms = parse_terms(lex(text, line_no, base), false, line_no, base);
  RelationElement r;
  for (const auto& t : terms) {
    Path p = term_path(q, t, std::nullopt, line_no, base);
    r.terms.push_back({Scalar::rational(t.coeff), std::move(p)});
  }
  return r;
}

AlgebraPtr parse_algebra(const std::string& text, const std::optional<Field>& field) {
  Sections sec = split_sections(text);
  if (!sec.count("quiver")) throw ParseError("missing [quiver] section", 0, 0);
  Quiver q;
  for (const auto& [no, line] : sec["quiver"]) {
    auto w = words(line);
    try {
      if (w[0] == "vertex" && w.size() == 2) {
        q.add_vertex(w[1]);
      } else if (w[0] == "arrow" && w.size() == 4) {
        q.add_arrow(w[1], w[2], w[3]);
      } else {
        throw ParseError("expected 'vertex <id>' or 'arrow <name> <src> <dst>'", no, 1);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), no, 1);
    }
  }
  AlgebraOptions opts;
  for (const auto& [no, line] : sec["options"]) {
    auto w = words(line);
    try {
      if (w.size() == 2 && w[0] == "max_len") {
        opts.max_len = std::stoi(w[1]);
      } else if (w.size() == 2 && w[0] == "field") {
        opts.field = Field::parse(w[1]);
      } else if (w.size() == 2 && w[0] == "allow_linear") {
        opts.allow_linear = w[1] == "true" || w[1] == "1";
      } else {
        throw ParseError("unknown option '" + trim(line) + "'", no, 1);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), no, 1);
    }
  }
  if (field) opts.field = *field;

  std::vector<RelationElement> rels;
  for (const auto& [no, line] : sec["relations"]) {
    auto w = words(line);
    if (!w.empty() && w[0] == "paths_of_length") {
      // Every path of the given length is a relation.
      if (w.size() != 2) throw ParseError("expected 'paths_of_length <n>'", no, 1);
      size_t len = 0;
      try {
        len = static_cast<size_t>(std::stoul(w[1]));
      } catch (const std::exception&) {
        throw ParseError("bad length '" + w[1] + "'", no, 1);
      }
      for (size_t v = 0; v < q.vertex_count(); ++v) {
        std::vector<Path> paths;
        enumerate_paths(q, Path::trivial(static_cast<int>(v)), len, paths);
        for (auto& p : paths) rels.push_back(RelationElement{{{Scalar(1), std::move(p)}}});
      }
      continue;
    }
    rels.push_back(parse_relation(q, line, no));
  }
  try {
    return std::make_shared<const PathAlgebra>(PathAlgebra::build(std::move(q), std::move(rels), opts));
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Vec parse_element(const ProjectivePresentation& pres, const std::string& text, size_t line_no) {
  const size_t base = 0;
  auto terms = parse_terms(lex(text, line_no, base), true, line_no, base);
  Vec v(pres.dim());
  const Field f = pres.field();
  for (const auto& t : terms) {
    size_t r = 0;
    try {
      r = static_cast<size_t>(std::stoul(t.top->first.substr(1)));
    } catch (const std::exception&) {
      r = 0;
    }
    if (r < 1 || r > pres.top_count())
      throw ParseError("no top element " + t.top->first, line_no, base + t.top->second + 1);
    const int start = pres.tops()[r - 1];
    Path p = term_path(pres.algebra().quiver(), t, start, line_no, base);
    Scalar c = f.embed(Scalar::rational(t.coeff));
    for (const auto& [k, coeff] : pres.algebra().reduce(p)) v[pres.index(k, r - 1)] += c * coeff;
  }
  return v;
}

SubmodulePoint parse_module(AlgebraPtr alg, const std::string& text) {
  Sections sec = split_sections(text);
  if (!sec.count("module")) throw ParseError("missing [module] section", 0, 0);
  std::vector<int> tops;
  std::vector<SourceLine> gens;
  for (const auto& line : sec["module"]) {
    std::string t = trim(line.text);
    auto w = words(t);
    if (w[0] == "top") {
      if (w.size() != 2) throw ParseError("expected 'top <vertex>'", line.number, 1);
      if (!gens.empty()) throw ParseError("top lines must precede gen lines", line.number, 1);
      int v = alg->quiver().vertex_index(w[1]);
      if (v < 0) throw ParseError("unknown vertex '" + w[1] + "'", line.number, 1);
      tops.push_back(v);
    } else if (w[0] == "gen") {
      gens.push_back({line.number, line.text});
    } else {
      throw ParseError("expected 'top' or 'gen'", line.number, 1);
    }
  }
  if (tops.empty()) throw ParseError("module needs at least one top line", 0, 0);
  auto pres = make_presentation(alg, tops);
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    size_t at = g.text.find("gen") + 3;
    Vec v;
    try {
      v = parse_element(*pres, g.text.substr(at), 0);
    } catch (const ParseError& e) {
      throw ParseError(e.message, g.number, e.column ? e.column + at : 0);
    }
    vs.push_back(std::move(v));
  }
  return submodule_spin(pres, vs);
}

namespace {

size_t parse_top_ref(const ProjectivePresentation& pres, const std::string& word, size_t line_no, size_t col) {
  size_t r = 0;
  if (word.size() > 1 && word[0] == 'z' && std::all_of(word.begin() + 1, word.end(), ::isdigit)) r = std::stoul(word.substr(1));
  if (r < 1 || r > pres.top_count()) throw ParseError("no top element " + word, line_no, col);
  return r - 1;
}

Vec element_at(const ProjectivePresentation& pres, const SourceLine& line, size_t at) {
  try {
    return parse_element(pres, line.text.substr(at), 0);
  } catch (const ParseError& e) {
    throw ParseError(e.message, line.number, e.column ? e.column + at : 0);
  }
}

}  // namespace

CurveFamily parse_curve(PresentationPtr pres, const std::string& text) {
  Sections sec = split_sections(text);
  if (!sec.count("curve")) throw ParseError("missing [curve] section", 0, 0);
  std::string kind;
  std::vector<Vec> maps(pres->top_count(), pres->zero()), basis;
  std::vector<int> weights;
  std::vector<LaurentVec> laurent(pres->top_count());
  size_t kind_line = 0;
  for (const auto& line : sec["curve"]) {
    auto w = words(line.text);
    size_t arrow = line.text.find("->");
    if (w[0] == "kind") {
      if (w.size() != 2 || (w[1] != "unipotent" && w[1] != "torus" && w[1] != "laurent"))
        throw ParseError("expected 'kind unipotent|torus|laurent'", line.number, 1);
      kind = w[1];
      kind_line = line.number;
    } else if (w[0] == "map") {
      if (w.size() < 4 || w[2] != "->" || arrow == std::string::npos) throw ParseError("expected 'map z<r> -> <element>'", line.number, 1);
      size_t r = parse_top_ref(*pres, w[1], line.number, line.text.find(w[1]) + 1);
      maps[r] = add(maps[r], element_at(*pres, line, arrow + 2));
    } else if (w[0] == "basis") {
      basis.push_back(element_at(*pres, line, line.text.find("basis") + 5));
    } else if (w[0] == "weights") {
      for (size_t k = 1; k < w.size(); ++k) {
        try {
          weights.push_back(std::stoi(w[k]));
        } catch (const std::exception&) {
          throw ParseError("integer weight expected", line.number, line.text.find(w[k]) + 1);
        }
      }
    } else if (w[0] == "image") {
      if (w.size() < 5 || w[3] != "->" || arrow == std::string::npos)
        throw ParseError("expected 'image z<r> <exponent> -> <element>'", line.number, 1);
      size_t r = parse_top_ref(*pres, w[1], line.number, line.text.find(w[1]) + 1);
      int e = 0;
      try {
        e = std::stoi(w[2]);
      } catch (const std::exception&) {
        throw ParseError("integer exponent expected", line.number, line.text.find(w[2]) + 1);
      }
      Vec v = element_at(*pres, line, arrow + 2);
      auto it = laurent[r].find(e);
      laurent[r][e] = it == laurent[r].end() ? v : add(it->second, v);
    } else {
      throw ParseError("unknown curve directive '" + w[0] + "'", line.number, 1);
    }
  }
  try {
    if (kind == "unipotent") return make_unipotent_curve(pres, maps);
    if (kind == "torus") return make_torus_curve(pres, basis, weights);
    if (kind == "laurent") return make_curve(pres, laurent);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), kind_line, 0);
  }
  throw ParseError("curve needs a 'kind' line", 0, 0);
}

std::string relation_str(const Quiver& q, const RelationElement& r) {
  std::string s;
  for (size_t k = 0; k < r.terms.size(); ++k) {
    const auto& t = r.terms[k];
    Scalar c = t.coeff;
    bool neg = c.modulus() == 0 && sgn(c.rational_value()) < 0;
    if (neg) c = -c;
    if (k == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (!c.is_one()) s += c.str() + "*";
    s += path_str(q, t.path);
  }
  return s;
}

std::string write_algebra(const Quiver& q, const std::vector<RelationElement>& relations, const AlgebraOptions& opts) {
  std::ostringstream os;
  os << "[quiver]\n";
  for (size_t v = 0; v < q.vertex_count(); ++v) os << "vertex " << q.vertex_id(static_cast<int>(v)) << "\n";
  for (const auto& a : q.arrows()) os << "arrow " << a.name << ' ' << q.vertex_id(a.source) << ' ' << q.vertex_id(a.target) << "\n";
  os << "[relations]\n";
  for (const auto& r : relations) os << relation_str(q, r) << "\n";
  os << "[options]\n";
  if (opts.max_len) os << "max_len " << *opts.max_len << "\n";
  os << "field " << opts.field.name() << "\n";
  if (opts.allow_linear) os << "allow_linear true\n";
  return os.str();
}

std::string write_algebra(const PathAlgebra& alg) {
  AlgebraOptions opts;
  opts.max_len = alg.max_len();
  opts.field = alg.field();
  for (const auto& r : alg.relations())
    for (const auto& t : r.terms) opts.allow_linear = opts.allow_linear || t.path.length() == 1;
  return write_algebra(alg.quiver(), alg.relations(), opts);
}

std::string write_module(const SubmodulePoint& c) {
  std::ostringstream os;
  const auto& P = *c.pres;
  os << "[module]\n";
  for (int v : P.tops()) os << "top " << P.algebra().quiver().vertex_id(v) << "\n";
  for (const auto& g : submodule_generators(c)) os << "gen " << P.element_str(g) << "\n";
  return os.str();
}

}  // namespace degenlab
