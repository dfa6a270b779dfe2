#include "degenlab/field.hpp"

#include <cctype>
#include <stdexcept>

namespace degenlab {

namespace {

uint32_t common_modulus(uint32_t a, uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw std::logic_error("arithmetic between different prime fields");
}

uint32_t pow_mod(uint64_t b, uint64_t e, uint32_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

}  // namespace

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::residue(uint64_t r, uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = static_cast<uint32_t>(r % p);
  return s;
}

uint32_t Scalar::reduce_mod(uint32_t p) const {
  if (p_ == p) return r_;
  mpz_class num = q_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q_.get_den() % p;
  if (den == 0) throw std::domain_error("rational coefficient has denominator divisible by p = " + std::to_string(p));
  uint64_t n = num.get_ui();
  uint64_t d = den.get_ui();
  return static_cast<uint32_t>(n * pow_mod(d, p - 2, p) % p);
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return rational(-q_);
  return residue(r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return rational(1 / q_);
  return residue(pow_mod(r_, p_ - 2, p_), p_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) {
    Scalar s;
    s.q_ = a.q_ + b.q_;
    return s;
  }
  uint32_t p = common_modulus(a.p_, b.p_);
  return Scalar::residue(static_cast<uint64_t>(a.reduce_mod(p)) + b.reduce_mod(p), p);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) {
    Scalar s;
    s.q_ = a.q_ - b.q_;
    return s;
  }
  uint32_t p = common_modulus(a.p_, b.p_);
  return Scalar::residue(static_cast<uint64_t>(a.reduce_mod(p)) + p - b.reduce_mod(p), p);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) {
    Scalar s;
    s.q_ = a.q_ * b.q_;
    return s;
  }
  uint32_t p = common_modulus(a.p_, b.p_);
  return Scalar::residue(static_cast<uint64_t>(a.reduce_mod(p)) * b.reduce_mod(p), p);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == 0 && b.p_ == 0) return a.q_ == b.q_;
  uint32_t p = common_modulus(a.p_, b.p_);
  return a.reduce_mod(p) == b.reduce_mod(p);
}

int Scalar::compare(const Scalar& b) const {
  if (p_ == 0 && b.p_ == 0) return cmp(q_, b.q_) < 0 ? -1 : (cmp(q_, b.q_) > 0 ? 1 : 0);
  uint32_t p = common_modulus(p_, b.p_);
  uint32_t x = reduce_mod(p), y = b.reduce_mod(p);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(const std::string& spec) {
  if (spec == "rational" || spec == "Q") return rationals();
  if (spec == "fp") return prime(kDefaultPrime);
  if (spec.rfind("fp:", 0) == 0) {
    std::string digits = spec.substr(3);
    if (digits.empty() || digits.size() > 9) throw std::invalid_argument("bad field modulus in '" + spec + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad field modulus in '" + spec + "'");
    return prime(static_cast<uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("unknown field '" + spec + "' (expected rational or fp:P)");
}

Scalar Field::from_int(long v) const {
  if (p == 0) return Scalar(v);
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return Scalar::residue(static_cast<uint64_t>(r), p);
}

Scalar Field::embed(const Scalar& s) const {
  if (p == 0) {
    if (s.modulus() != 0) throw std::logic_error("cannot lift a residue to the rationals");
    return s;
  }
  return s * one();
}

std::string Field::name() const { return p == 0 ? "rational" : "fp:" + std::to_string(p); }

mpq_class parse_rational(const std::string& text) {
  auto bad = [&]() { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  size_t slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  check_int(num, true);
  if (num[0] == '+') num = num.substr(1);
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(num));
  } else {
    std::string den = text.substr(slash + 1);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q = mpq_class(mpz_class(num), d);
  }
  q.canonicalize();
  return q;
}

}  // namespace degenlab
