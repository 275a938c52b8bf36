#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bmoll/boros_moll.hpp"

// Floating-point cross-check of the quartic integral
//   I(m, a) = \int_0^\infty dx / (x^4 + 2ax^2 + 1)^(m+1)
// against the exact closed form pi * P_m(a) / (2^(m+3/2) (a+1)^(m+1/2)).

namespace bmoll {

// Folds the tail onto [0,1]: x -> 1/x maps [1,inf) to (0,1] and turns the
// integrand into x^(4m+2) / (x^4 + 2ax^2 + 1)^(m+1), so
//   I(m, a) = \int_0^1 (1 + x^(4m+2)) / (x^4 + 2ax^2 + 1)^(m+1) dx,
// a smooth integrand on a compact interval (the quartic is bounded away from
// zero there for a > -1).
inline double quartic_integral(int m, double a, double tol) {
  if (!(a > -1.0)) throw std::domain_error("quartic_integral: require a > -1");
  if (!(tol > 0.0)) throw std::invalid_argument("quartic_integral: require tol > 0");
  const double expo = m + 1;
  const double tail_power = 4.0 * m + 2.0;
  auto f = [=](double x) {
    double x2 = x * x;
    double quartic = x2 * x2 + 2.0 * a * x2 + 1.0;
    return (1.0 + std::pow(x, tail_power)) / std::pow(quartic, expo);
  };
  double err = 0.0;
  double q = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, 0.0, 1.0, /*max_depth=*/15, tol, &err);
  if (!(err <= tol)) {
    throw std::runtime_error("quartic_integral: quadrature did not converge (error estimate " +
                             std::to_string(err) + " > tol " + std::to_string(tol) + ")");
  }
  return q;
}

// pi * P_m(a) / (2^(m+3/2) (a+1)^(m+1/2)); P_m(a) is evaluated exactly at the
// dyadic rational a and only then rounded to double.
inline double closed_form_value(int m, double a) {
  if (!(a > -1.0)) throw std::domain_error("closed_form_value: require a > -1");
  double p = single_sum(m).eval(Rational::from_double(a)).to_double();
  return std::numbers::pi * p /
         (std::pow(2.0, m + 1.5) * std::pow(a + 1.0, m + 0.5));
}

inline double integral_residual(int m, double a, double tol) {
  return std::fabs(quartic_integral(m, a, tol) - closed_form_value(m, a));
}

}  // namespace bmoll
