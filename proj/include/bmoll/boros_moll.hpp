#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmoll/factorials.hpp"
#include "bmoll/polynomial.hpp"
#include "bmoll/rational.hpp"

// Four independent closed forms of the Boros-Moll polynomial P_m(a), the
// coefficient formula d_i(m), and exact checkers for the coefficient
// sequence. Everything here is exact; floating point appears only in
// quadrature.hpp.

namespace bmoll {

// P_m(a) as the double sum over j, k of
//   C(2m+1,2j) C(m-j,k) C(2k+2j,k+j) (a+1)^j (a-1)^k / 2^(3(k+j)).
inline Poly double_sum(int m) {
  if (m < 0) throw std::invalid_argument("double_sum: m must be nonnegative");
  const Poly a_plus_1({Rational(1), Rational(1)});
  const Poly a_minus_1({Rational(-1), Rational(1)});
  Poly result;
  Poly pow_j(1);  // (a+1)^j
  for (int j = 0; j <= m; ++j) {
    Poly pow_jk = pow_j;  // (a+1)^j (a-1)^k
    for (int k = 0; k + j <= m; ++k) {
      Rational c(mpz_class(binomial(2 * m + 1, 2 * j) * binomial(m - j, k) *
                           binomial(2 * k + 2 * j, k + j)));
      result += pow_jk * (c * pow2(-3 * (k + j)));
      pow_jk *= a_minus_1;
    }
    pow_j *= a_plus_1;
  }
  return result;
}

// P_m(a) as the single sum 2^(-2m) sum_k 2^k C(2m-2k,m-k) C(m+k,k) (a+1)^k.
inline Poly single_sum(int m) {
  if (m < 0) throw std::invalid_argument("single_sum: m must be nonnegative");
  const Poly a_plus_1({Rational(1), Rational(1)});
  Poly result;
  Poly pow_k(1);
  for (int k = 0; k <= m; ++k) {
    Rational c(mpz_class(binomial(2 * m - 2 * k, m - k) * binomial(m + k, k)));
    result += pow_k * (c * pow2(k));
    pow_k *= a_plus_1;
  }
  return result * pow2(-2 * m);
}

// d_i(m) = 2^(-2m) sum_{k=i}^{m} 2^k C(2m-2k,m-k) C(m+k,k) C(k,i).
inline Rational coefficient(int m, int i) {
  if (m < 0) throw std::invalid_argument("coefficient: m must be nonnegative");
  if (i < 0 || i > m) {
    throw std::out_of_range("coefficient: i=" + std::to_string(i) +
                            " out of range 0.." + std::to_string(m));
  }
  Rational sum(0);
  for (int k = i; k <= m; ++k) {
    sum += Rational(mpz_class(binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) *
                              binomial(k, i))) *
           pow2(k);
  }
  return sum * pow2(-2 * m);
}

// P_m(a) = 2^(-2m) C(2m,m) * sum_{k=0}^{m} (-m)_k (m+1)_k / ((1/2-m)_k k!)
// ((a+1)/2)^k. The series terminates because (-m)_k vanishes for k > m, and
// (1/2-m)_k runs through half-integers so no denominator factor can vanish.
inline Poly hypergeometric_form(int m) {
  if (m < 0) throw std::invalid_argument("hypergeometric_form: m must be nonnegative");
  const Poly half_a_plus_1({Rational(1, 2), Rational(1, 2)});
  Poly series;
  Poly pow_k(1);      // ((a+1)/2)^k
  Rational term(1);   // (-m)_k (m+1)_k / ((1/2-m)_k k!)
  for (int k = 0; k <= m; ++k) {
    series += pow_k * term;
    if (k == m) break;
    Rational lower = Rational(1 - 2 * m, 2) + Rational(k);
    if (lower.is_zero()) {
      throw std::logic_error("hypergeometric_form: vanishing lower factor");
    }
    term *= Rational(-m + k) * Rational(m + 1 + k) / (lower * Rational(k + 1));
    pow_k *= half_a_plus_1;
  }
  return series * (Rational(binomial(2 * m, m)) * pow2(-2 * m));
}

// Jacobi parameters used by the Boros-Moll specialization; alpha + beta = 0.
struct JacobiParams {
  Rational alpha;
  Rational beta;

  static JacobiParams for_order(int m) {
    return JacobiParams{Rational(2 * m + 1, 2), Rational(-2 * m - 1, 2)};
  }
};

// P_m(a) as the Jacobi polynomial with alpha = m+1/2, beta = -m-1/2:
//   sum_k (-1)^(m-k) C(m+beta, m-k) C(m+k+alpha+beta, k) ((1+a)/2)^k
// with generalized binomials at half-integer arguments.
inline Poly jacobi_form(int m) {
  if (m < 0) throw std::invalid_argument("jacobi_form: m must be nonnegative");
  const JacobiParams params = JacobiParams::for_order(m);
  const Poly half_a_plus_1({Rational(1, 2), Rational(1, 2)});
  const Rational upper_b = Rational(m) + params.beta;
  const Rational ab = params.alpha + params.beta;
  Poly result;
  Poly pow_k(1);
  for (int k = 0; k <= m; ++k) {
    Rational c = generalized_binomial(upper_b, m - k) *
                 generalized_binomial(Rational(m + k) + ab, k);
    if ((m - k) % 2 != 0) c = -c;
    result += pow_k * c;
    pow_k *= half_a_plus_1;
  }
  return result;
}

// The coefficient table d_0(m)..d_m(m), built from the closed form.
struct CoeffTable {
  int m = 0;
  std::vector<Rational> d;

  static CoeffTable build(int m) {
    CoeffTable t;
    t.m = m;
    t.d.reserve(m + 1);
    for (int i = 0; i <= m; ++i) t.d.push_back(coefficient(m, i));
    return t;
  }

  Poly to_poly() const { return Poly(d); }
};

inline bool is_positive_sequence(const std::vector<Rational>& d) {
  for (const auto& x : d) {
    if (x.sign() <= 0) return false;
  }
  return true;
}

// Weak unimodality: rises (allowing plateaus) to some pivot, then falls.
inline bool is_unimodal_sequence(const std::vector<Rational>& d) {
  std::size_t i = 0;
  while (i + 1 < d.size() && d[i] <= d[i + 1]) ++i;
  while (i + 1 < d.size() && d[i] >= d[i + 1]) ++i;
  return i + 1 >= d.size();
}

// d_i^2 >= d_{i-1} d_{i+1} for all interior i.
inline bool is_log_concave_sequence(const std::vector<Rational>& d) {
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (d[i] * d[i] < d[i - 1] * d[i + 1]) return false;
  }
  return true;
}

inline bool check_positive(int m) {
  return is_positive_sequence(CoeffTable::build(m).d);
}

inline bool check_unimodal(int m) {
  return is_unimodal_sequence(CoeffTable::build(m).d);
}

inline bool check_log_concave(int m) {
  return is_log_concave_sequence(CoeffTable::build(m).d);
}

}  // namespace bmoll
