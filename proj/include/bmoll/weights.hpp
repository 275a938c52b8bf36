#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bmoll/bijections.hpp"
#include "bmoll/boros_moll.hpp"
#include "bmoll/factorials.hpp"
#include "bmoll/meixner.hpp"
#include "bmoll/parallel.hpp"
#include "bmoll/polynomial.hpp"

// The two weight schemes on [m], the exact summation of both sides of the
// weighted-enumeration identity, brute-force totals over the structure
// enumerations, and the per-cycle contribution algebra that reduces one
// scheme to the other. Everything ties back to P_m(a) through
// m! P_m(a) = (-1)^m * (either side).

namespace bmoll {

// Element weights by color/block and cycle weights by cycle class. The same
// constants weight a structure (per piA/piB/piC cycle) and its image
// permutation (per all-white / at-least-one-black / all-red cycle).
struct WeightScheme {
  int m = 0;
  Poly white_element, black_element, red_element;
  Rational white_cycle, black_cycle, red_cycle;

  // Bi-endofunction scheme, also used for 3-colored permutations:
  // elements (-a+1)/2, (a+1)/2, 1; cycles 1/2, -m-1/2, -m.
  static WeightScheme for_bi_endofunctions(int m) {
    WeightScheme s;
    s.m = m;
    s.white_element = Poly({Rational(1, 2), Rational(-1, 2)});
    s.black_element = Poly({Rational(1, 2), Rational(1, 2)});
    s.red_element = Poly(1);
    s.white_cycle = Rational(1, 2);
    s.black_cycle = Rational(-2 * m - 1, 2);
    s.red_cycle = Rational(-m);
    return s;
  }

  // Endofunction scheme, also used for bi-colored permutations:
  // elements 1, (-a-1)/2; cycles 1/2-m, 1+m.
  static WeightScheme for_endofunctions(int m) {
    WeightScheme s;
    s.m = m;
    s.white_element = Poly(1);
    s.black_element = Poly({Rational(-1, 2), Rational(-1, 2)});
    s.red_element = Poly(1);
    s.white_cycle = Rational(1 - 2 * m, 2);
    s.black_cycle = Rational(1 + m);
    s.red_cycle = Rational(1);
    return s;
  }
};

namespace detail {

// Number of cycles of an injective map given by its table. Domain elements
// without a preimage start paths, which carry no cycle; the rest of the
// domain splits into cycles. Works unchanged for permutations.
inline int cycle_count(const std::map<int, int>& pi) {
  std::set<int> image;
  for (const auto& [from, to] : pi) image.insert(to);
  std::set<int> visited;
  for (const auto& [from, to] : pi) {
    if (image.count(from)) continue;
    int cur = from;
    while (pi.count(cur) && !visited.count(cur)) {
      visited.insert(cur);
      cur = pi.at(cur);
    }
  }
  int cycles = 0;
  for (const auto& [from, to] : pi) {
    if (visited.count(from)) continue;
    ++cycles;
    int cur = from;
    while (!visited.count(cur)) {
      visited.insert(cur);
      cur = pi.at(cur);
    }
  }
  return cycles;
}

}  // namespace detail

// Product of element weights and cycle weights; piA paths contribute element
// weights only.
inline Poly weight(const MeixnerBiEndofunction& x, int m) {
  const WeightScheme s = WeightScheme::for_bi_endofunctions(m);
  Rational cyc = pow(s.white_cycle, detail::cycle_count(x.piA)) *
                 pow(s.black_cycle, detail::cycle_count(x.piB)) *
                 pow(s.red_cycle, detail::cycle_count(x.piC));
  return s.white_element.pow(x.A.size()) * s.black_element.pow(x.B.size()) *
         s.red_element.pow(x.C.size()) * cyc;
}

inline Poly weight(const MeixnerEndofunction& x, int m) {
  const WeightScheme s = WeightScheme::for_endofunctions(m);
  Rational cyc = pow(s.white_cycle, detail::cycle_count(x.piA)) *
                 pow(s.black_cycle, detail::cycle_count(x.piB));
  return s.white_element.pow(x.A.size()) * s.black_element.pow(x.B.size()) * cyc;
}

// Weight of a colored permutation under the scheme matching its color count:
// 3 colors pair with the bi-endofunction constants, 2 colors with the
// endofunction constants.
inline Poly weight(const ColoredPermutation& p, int m) {
  p.validate();
  const WeightScheme s = p.colors == 3 ? WeightScheme::for_bi_endofunctions(m)
                                       : WeightScheme::for_endofunctions(m);
  Poly w(1);
  for (Color c : p.coloring) {
    switch (c) {
      case Color::white: w *= s.white_element; break;
      case Color::black: w *= s.black_element; break;
      case Color::red: w *= s.red_element; break;
    }
  }
  Rational cyc(1);
  for (const auto& cycle : p.cycles()) {
    bool has_black = false, has_red = false;
    for (int e : cycle) {
      if (p.color(e) == Color::black) has_black = true;
      if (p.color(e) == Color::red) has_red = true;
    }
    cyc *= has_black ? s.black_cycle : (has_red ? s.red_cycle : s.white_cycle);
  }
  return w * cyc;
}

// sum_{i+j+k=m} C(m;i,j,k) (-m)_i (-m-1/2)_j (j+1/2)_k ((a+1)/2)^j ((-a+1)/2)^k.
// Block sizes under the brute-force sum: |A|=k, |B|=j, |C|=i.
inline Poly identity_lhs(int m) {
  const Poly half_a_plus({Rational(1, 2), Rational(1, 2)});
  const Poly half_a_minus({Rational(1, 2), Rational(-1, 2)});
  std::vector<Poly> pow_plus{Poly(1)}, pow_minus{Poly(1)};
  for (int t = 1; t <= m; ++t) {
    pow_plus.push_back(pow_plus.back() * half_a_plus);
    pow_minus.push_back(pow_minus.back() * half_a_minus);
  }
  Poly total;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; i + j <= m; ++j) {
      int k = m - i - j;
      Rational c = Rational(multinomial(m, {static_cast<unsigned long>(i),
                                            static_cast<unsigned long>(j),
                                            static_cast<unsigned long>(k)})) *
                   rising_factorial(Rational(-m), i) *
                   rising_factorial(Rational(-2 * m - 1, 2), j) *
                   rising_factorial(Rational(2 * j + 1, 2), k);
      total += pow_plus[j] * pow_minus[k] * c;
    }
  }
  return total;
}

// sum_{i+j=m} C(m;i,j) (1/2-j)_j (m+1)_i ((-a-1)/2)^i. Block sizes under the
// brute-force sum: |A|=j, |B|=i.
inline Poly identity_rhs(int m) {
  const Poly half_neg({Rational(-1, 2), Rational(-1, 2)});
  Poly total;
  Poly pow_i(1);
  for (int i = 0; i <= m; ++i) {
    int j = m - i;
    Rational c = Rational(binomial(m, i)) *
                 rising_factorial(Rational(1 - 2 * j, 2), j) *
                 rising_factorial(Rational(m + 1), i);
    total += pow_i * c;
    pow_i *= half_neg;
  }
  return total;
}

// Exact sum of weights over all Meixner bi-endofunctions on [m],
// parallelized over block assignment vectors.
inline Poly brute_total_bi(int m, int limit = kDefaultBruteLimit, unsigned threads = 1) {
  if (m > limit) throw EnumerationLimitError(m, limit, bi_endofunction_count(m));
  return parallel_reduce(
      detail::ipow(3, m), Poly(),
      [m](std::size_t assign) {
        auto blocks = detail::blocks_of(m, 3, assign);
        Poly sub;
        for_each_bi_endofunction_in_composition(
            std::move(blocks[0]), std::move(blocks[1]), std::move(blocks[2]),
            [&](const MeixnerBiEndofunction& x) { sub += weight(x, m); });
        return sub;
      },
      [](Poly acc, Poly part) { return acc + part; }, threads);
}

inline Poly brute_total_endo(int m, int limit = kDefaultBruteLimit, unsigned threads = 1) {
  if (m > limit) throw EnumerationLimitError(m, limit, endofunction_count(m));
  return parallel_reduce(
      detail::ipow(2, m), Poly(),
      [m](std::size_t assign) {
        auto blocks = detail::blocks_of(m, 2, assign);
        Poly sub;
        for_each_endofunction_in_composition(
            std::move(blocks[0]), std::move(blocks[1]),
            [&](const MeixnerEndofunction& x) { sub += weight(x, m); });
        return sub;
      },
      [](Poly acc, Poly part) { return acc + part; }, threads);
}

// Sum of weights over all valid colored permutations on [m]; equals the
// matching brute structure total through the bijection.
inline Poly colored_permutation_total(int m, int colors, int limit = kDefaultBruteLimit,
                                      unsigned threads = 1) {
  if (m > limit) {
    throw EnumerationLimitError(m, limit, colored_permutation_count(m, colors));
  }
  return parallel_reduce(
      detail::ipow(colors, m), Poly(),
      [m, colors](std::size_t assign) {
        std::vector<Color> coloring(m);
        std::size_t rest = assign;
        for (int e = m; e >= 1; --e) {
          coloring[e - 1] = static_cast<Color>(rest % colors);
          rest /= colors;
        }
        Poly sub;
        for_each_colored_permutation_with_coloring(
            m, colors, coloring,
            [&](const ColoredPermutation& p) { sub += weight(p, m); });
        return sub;
      },
      [](Poly acc, Poly part) { return acc + part; }, threads);
}

// Total weight collected by one permutation cycle of length r over all
// admissible 3-colorings of its elements: all-white, at-least-one-black and
// all-red cases summed, checked against the closed form
// -2m - 1/2 + (m+1) ((-a+1)/2)^r.
inline Poly cycle_contribution_3colored(int r, int m) {
  if (r < 1) throw std::invalid_argument("cycle_contribution_3colored: require r >= 1");
  const WeightScheme s = WeightScheme::for_bi_endofunctions(m);
  Poly white_case = s.white_element.pow(r) * s.white_cycle;
  Poly black_case;
  for (int i = 1; i <= r; ++i) {
    black_case += s.black_element.pow(i) * s.white_element.pow(r - i) *
                  Rational(binomial(r, i));
  }
  black_case *= s.black_cycle;
  Poly red_case(s.red_cycle);
  Poly case_sum = white_case + black_case + red_case;
  Poly simplified = Poly(Rational(-4 * m - 1, 2)) +
                    s.white_element.pow(r) * Rational(m + 1);
  if (case_sum != simplified) {
    throw std::logic_error("cycle_contribution_3colored: case sum != simplified form");
  }
  return simplified;
}

// Bi-colored counterpart: 1/2 - m + (1+m)[((-a+1)/2)^r - 1], assembled from
// the all-white case and the binomial sum over black subsets, and checked
// against the 3-colored contribution.
inline Poly cycle_contribution_bicolored(int r, int m) {
  if (r < 1) throw std::invalid_argument("cycle_contribution_bicolored: require r >= 1");
  const WeightScheme s = WeightScheme::for_endofunctions(m);
  Poly white_case(s.white_cycle);
  Poly black_sum;
  for (int i = 1; i <= r; ++i) {
    black_sum += s.black_element.pow(i) * Rational(binomial(r, i));
  }
  Poly total = white_case + black_sum * s.black_cycle;
  if (total != cycle_contribution_3colored(r, m)) {
    throw std::logic_error("cycle_contribution_bicolored: schemes disagree");
  }
  return total;
}

enum class CycleScheme { three_colored, bi_colored };

// sum over permutations of [m] of the product over cycles of the per-cycle
// contribution; matches the brute totals of the corresponding structures.
inline Poly total_via_cycle_products(int m, CycleScheme scheme,
                                     int limit = kDefaultBruteLimit) {
  if (m > limit) throw EnumerationLimitError(m, limit, factorial(m));
  std::vector<Poly> contribution(m + 1);
  for (int r = 1; r <= m; ++r) {
    contribution[r] = scheme == CycleScheme::three_colored
                          ? cycle_contribution_3colored(r, m)
                          : cycle_contribution_bicolored(r, m);
  }
  Poly total;
  std::vector<int> sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = i + 1;
  do {
    Poly prod(1);
    std::vector<bool> seen(m, false);
    for (int s = 1; s <= m; ++s) {
      if (seen[s - 1]) continue;
      int len = 0;
      int cur = s;
      do {
        seen[cur - 1] = true;
        ++len;
        cur = sigma[cur - 1];
      } while (cur != s);
      prod *= contribution[len];
    }
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// m! * double_sum(m) = (-1)^m * identity_lhs(m) and
// m! * single_sum(m) = (-1)^m * identity_rhs(m).
inline bool derivation_chain_check(int m) {
  const Rational mf{mpz_class(factorial(m))};
  const Rational sign(m % 2 == 0 ? 1 : -1);
  return double_sum(m) * mf == identity_lhs(m) * sign &&
         single_sum(m) * mf == identity_rhs(m) * sign;
}

// Everything a single m contributes to the central identity, with brute
// totals included when m is within the enumeration limit.
struct IdentityReport {
  int m = 0;
  Poly double_sum_form;
  Poly single_sum_form;
  Poly weighted_lhs;
  Poly weighted_rhs;
  std::optional<Poly> brute_bi;
  std::optional<Poly> brute_endo;
  bool all_equal = false;

  static IdentityReport build(int m, int brute_limit = kDefaultBruteLimit,
                              unsigned threads = 1) {
    IdentityReport rep;
    rep.m = m;
    rep.double_sum_form = double_sum(m);
    rep.single_sum_form = single_sum(m);
    rep.weighted_lhs = identity_lhs(m);
    rep.weighted_rhs = identity_rhs(m);
    if (m <= brute_limit) {
      rep.brute_bi = brute_total_bi(m, brute_limit, threads);
      rep.brute_endo = brute_total_endo(m, brute_limit, threads);
    }
    const Rational mf{mpz_class(factorial(m))};
    const Rational sign(m % 2 == 0 ? 1 : -1);
    rep.all_equal = rep.weighted_lhs == rep.weighted_rhs &&
                    rep.double_sum_form == rep.single_sum_form &&
                    rep.double_sum_form * mf == rep.weighted_lhs * sign &&
                    rep.single_sum_form * mf == rep.weighted_rhs * sign &&
                    (!rep.brute_bi || *rep.brute_bi == rep.weighted_lhs) &&
                    (!rep.brute_endo || *rep.brute_endo == rep.weighted_rhs);
    return rep;
  }
};

}  // namespace bmoll
