#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "bmoll/polynomial.hpp"
#include "bmoll/rational.hpp"

namespace bmoll {

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k) for nonnegative integers; 0 when k > n.
inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// m! / (parts[0]! * parts[1]! * ...). The parts must sum to m.
inline mpz_class multinomial(unsigned long m, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  if (sum != m) {
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(m));
  }
  mpz_class r = factorial(m);
  for (unsigned long p : parts) r /= factorial(p);
  return r;
}

// x(x+1)...(x+n-1), with the empty product 1 for n = 0.
inline Rational rising_factorial(const Rational& x, unsigned long n) {
  Rational r(1);
  for (unsigned long t = 0; t < n; ++t) r *= x + Rational(static_cast<long>(t));
  return r;
}

// Same product with a polynomial argument: p(p+1)...(p+n-1).
inline Poly rising_factorial(const Poly& p, unsigned long n) {
  Poly r(1);
  for (unsigned long t = 0; t < n; ++t) r *= p + Poly(static_cast<long>(t));
  return r;
}

// x(x-1)...(x-n+1)/n! for arbitrary rational x; 1 when n = 0.
inline Rational generalized_binomial(const Rational& x, unsigned long n) {
  Rational r(1);
  for (unsigned long t = 0; t < n; ++t) r *= x - Rational(static_cast<long>(t));
  return r / Rational(factorial(n));
}

}  // namespace bmoll
