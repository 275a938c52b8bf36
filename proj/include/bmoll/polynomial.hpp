#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bmoll/rational.hpp"

namespace bmoll {

// Dense univariate polynomial over Rational in the formal variable `a`.
// Coefficients are stored degree-ascending with trailing zeros trimmed; the
// zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  // The variable `a` itself.
  static Poly variable() { return monomial(1); }

  // c * a^k
  static Poly monomial(std::size_t k, Rational c = Rational(1)) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
    } else {
      for (auto& c : coeffs_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned long n) const {
    Poly result(1);
    Poly b = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) result *= b;
      if (n > 1) b *= b;
    }
    return result;
  }

  // Horner evaluation; exact, so it is a ring homomorphism Q[a] -> Q.
  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + coeffs_[i];
    }
    return acc;
  }

  // Degree-descending human-readable form, e.g. "3/2*a^2 + 15/4*a + 21/8".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      bool unit = (mag == Rational(1)) && i != 0;
      if (!unit) out += mag.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace bmoll
