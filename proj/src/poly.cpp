#include "degenlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace degenlab {

namespace {

unsigned total(const Polynomial::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Degree first, then lex; true when a prints before b.
bool prints_before(const Polynomial::Monomial& a, const Polynomial::Monomial& b) {
  const unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials in different variable sets");
}

}  // namespace

Polynomial Polynomial::constant(size_t nvars, const Field& f, const Scalar& c) {
  Polynomial p(nvars, f);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(size_t nvars, const Field& f, size_t i) {
  Polynomial p(nvars, f);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, f.one());
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total(m));
  return d;
}

bool Polynomial::homogeneous() const {
  const unsigned d = degree();
  for (const auto& [m, c] : terms_)
    if (total(m) != d) return false;
  return true;
}

bool Polynomial::involves(size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] != 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != n_) throw std::invalid_argument("monomial has the wrong number of variables");
  Scalar v = f_.embed(c);
  if (v.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out(a.n_, a.f_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(a.n_);
      for (size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  Polynomial out(a.n_, a.f_);
  for (const auto& [m, v] : a.terms_) out.add_term(m, c * v);
  return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& x) const {
  if (x.size() != n_) throw std::invalid_argument("wrong number of values");
  Scalar acc = f_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (size_t i = 0; i < n_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
    acc += term;
  }
  return f_.embed(acc);
}

Polynomial Polynomial::substitute(size_t var, const Polynomial& value) const {
  require_compatible(*this, value);
  Polynomial out(n_, f_);
  std::vector<Polynomial> powers{constant(n_, f_, f_.one())};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    Polynomial t(n_, f_);
    t.add_term(rest, c);
    out = out + t * powers[m[var]];
  }
  return out;
}

std::optional<Scalar> Polynomial::linear_coefficient(size_t var) const {
  std::optional<Scalar> coeff;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    if (m[var] != 1 || total(m) != 1) return std::nullopt;
    coeff = c;
  }
  return coeff;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  const Monomial* lead = nullptr;
  for (const auto& [m, c] : terms_)
    if (!lead || prints_before(m, *lead)) lead = &m;
  Scalar factor;
  if (f_.is_rational()) {
    mpz_class den = 1, num = 0;
    for (const auto& [m, c] : terms_) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational_value().get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational_value().get_num_mpz_t());
    }
    mpq_class q(den, num);
    q.canonicalize();
    factor = Scalar::rational(q);
    if (sgn(terms_.at(*lead).rational_value()) < 0) factor = -factor;
  } else {
    factor = terms_.at(*lead).inverse();
  }
  return factor * *this;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (names.size() != n_) throw std::invalid_argument("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return prints_before(a.first, b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    bool negative = f_.is_rational() && sgn(c.rational_value()) < 0;
    Scalar mag = negative ? -c : c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      factors.push_back(m[i] == 1 ? names[i] : names[i] + "^" + std::to_string(m[i]));
    }
    if (!mag.is_one() || factors.empty()) factors.insert(factors.begin(), mag.str());
    for (size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at column " + std::to_string(i + 1));
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  std::string digits() {
    size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(b, i - b);
  }
};

}  // namespace

size_t polynomial_variable_count(const std::string& text) {
  size_t n = 0;
  for (size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] == 'x' || text[i] == 'X') && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      n = std::max(n, static_cast<size_t>(std::stoul(text.substr(i + 1, j - i - 1))) + 1);
    }
  }
  return n;
}

Polynomial parse_polynomial(const std::string& text, size_t nvars, const Field& f) {
  PolyLexer lx{text};
  Polynomial out(nvars, f);
  if (lx.at_end()) lx.fail("empty polynomial");
  bool first = true;
  while (!lx.at_end()) {
    Scalar sign = f.one();
    char c = lx.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -sign;
      ++lx.i;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    first = false;
    Scalar coeff = sign;
    Polynomial::Monomial m(nvars, 0);
    bool need_factor = true;
    while (need_factor) {
      need_factor = false;
      c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lx.digits();
        if (lx.i < text.size() && text[lx.i] == '/') {
          ++lx.i;
          std::string den = lx.digits();
          if (den.empty()) lx.fail("expected denominator");
          num += "/" + den;
        }
        coeff *= Scalar::rational(parse_rational(num));
      } else if (c == 'x' || c == 'X') {
        ++lx.i;
        std::string idx = lx.digits();
        if (idx.empty()) lx.fail("expected variable index");
        size_t v = std::stoul(idx);
        if (v >= nvars) lx.fail("variable index out of range");
        unsigned e = 1;
        if (lx.peek() == '^') {
          ++lx.i;
          lx.skip();
          std::string ex = lx.digits();
          if (ex.empty()) lx.fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(ex));
        }
        m[v] += e;
      } else {
        lx.fail("expected coefficient or variable");
      }
      if (lx.peek() == '*') {
        ++lx.i;
        need_factor = true;
      }
    }
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace degenlab
