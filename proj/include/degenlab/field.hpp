#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace degenlab {

// Exact scalar. A value is either an arbitrary-precision rational (modulus 0)
// or a residue modulo a prime. Rational operands meeting a residue are
// reduced into that prime field, so integer literals can be mixed freely with
// field elements; two distinct nonzero moduli never meet.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar residue(uint64_t r, uint32_t p);

  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
  uint32_t modulus() const { return p_; }
  const mpq_class& rational_value() const { return q_; }
  uint32_t residue_value() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used only for deterministic tie-breaks.
  int compare(const Scalar& b) const;

  // "p/q" in lowest terms ("p" when q = 1); residues print as their
  // representative in [0, p).
  std::string str() const;

 private:
  uint32_t reduce_mod(uint32_t p) const;

  mpq_class q_;
  uint32_t p_ = 0;
  uint32_t r_ = 0;
};

// The working field: rationals (p = 0) or F_p.
struct Field {
  uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(uint32_t p);
  // "rational" or "fp:P"; throws std::invalid_argument.
  static Field parse(const std::string& spec);

  bool is_rational() const { return p == 0; }
  Scalar zero() const { return p == 0 ? Scalar() : Scalar::residue(0, p); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  Scalar embed(const Scalar& s) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
};

constexpr uint32_t kDefaultPrime = 32003;

bool is_prime(uint32_t n);

// Parses "a", "-a", "a/b" into a rational; throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

}  // namespace degenlab
