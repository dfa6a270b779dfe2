#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenlab/field.hpp"

namespace degenlab {

// Sparse multivariate polynomial over Q or F_p in a fixed number of
// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  Polynomial() = default;
  Polynomial(size_t nvars, const Field& f) : n_(nvars), f_(f) {}

  static Polynomial constant(size_t nvars, const Field& f, const Scalar& c);
  static Polynomial variable(size_t nvars, const Field& f, size_t i);

  size_t nvars() const { return n_; }
  const Field& field() const { return f_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  bool homogeneous() const;
  bool involves(size_t var) const;

  void add_term(const Monomial& m, const Scalar& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Scalar evaluate(const std::vector<Scalar>& x) const;
  // The polynomial with x_var replaced by `value`.
  Polynomial substitute(size_t var, const Polynomial& value) const;
  // c when the polynomial is c·x_var + R with c constant and R free of x_var.
  std::optional<Scalar> linear_coefficient(size_t var) const;
  // Over Q: primitive integer coefficients; over F_p: leading coefficient 1.
  // Either way the leading term (degree, then lex) is positive.
  Polynomial normalized() const;

  // Terms by descending degree, then descending lex in the exponents.
  std::string str(const std::vector<std::string>& names) const;

 private:
  size_t n_ = 0;
  Field f_;
  std::map<Monomial, Scalar> terms_;
};

// Parses "x0*x2 - x1^2", "3/2*X0^2 + X1*X0"; variables x<i> or X<i> with
// i < nvars. Throws std::invalid_argument with a column on bad input.
Polynomial parse_polynomial(const std::string& text, size_t nvars, const Field& f);
// Largest variable index in the text plus one (0 when there are none).
size_t polynomial_variable_count(const std::string& text);

}  // namespace degenlab
