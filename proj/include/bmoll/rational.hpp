#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bmoll {

// Exact rational scalar backed by GMP. Kept canonical at all times:
// gcd(|num|, den) = 1, den >= 1, zero stored as 0/1. Canonical form makes
// equality a plain field comparison.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
    canonicalize_checked();
  }
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    canonicalize_checked();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { canonicalize_checked(); }

  // Parses base-10 "p" or "p/q".
  static Rational from_string(const std::string& s) {
    mpq_class q;
    // GMP's set_str skips embedded whitespace ("1 2" would read as 12);
    // reject it up front.
    for (char c : s) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        throw std::invalid_argument("not a rational: \"" + s + "\"");
      }
    }
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a rational: \"" + s + "\"");
    }
    if (q.get_den() == 0) {
      throw std::domain_error("zero denominator in \"" + s + "\"");
    }
    q.canonicalize();
    return Rational(std::move(q), canonical_tag{});
  }

  // Doubles are dyadic rationals, so this conversion is exact.
  static Rational from_double(double x) {
    mpq_class q(x);
    q.canonicalize();
    return Rational(std::move(q), canonical_tag{});
  }

  mpz_class numerator() const { return mpz_class(v_.get_num()); }
  mpz_class denominator() const { return mpz_class(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_), canonical_tag{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  struct canonical_tag {};
  Rational(mpq_class q, canonical_tag) : v_(std::move(q)) {}

  void canonicalize_checked() {
    if (v_.get_den() == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned long n) {
  Rational result(1);
  Rational b = base;
  for (; n > 0; n >>= 1) {
    if (n & 1) result *= b;
    if (n > 1) b *= b;
  }
  return result;
}

// 2^k for any sign of k.
inline Rational pow2(long k) {
  mpz_class p = mpz_class(1) << static_cast<unsigned long>(k < 0 ? -k : k);
  return k >= 0 ? Rational(std::move(p)) : Rational(mpz_class(1), p);
}

}  // namespace bmoll
