#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmoll/factorials.hpp"

// Compositions of [m] carrying injections and permutations: Meixner
// endofunctions (A,B; piA; piB), Meixner bi-endofunctions
// (A,B,C; piA; piB, piC), and 2-/3-colored permutations. Enumerators are
// exhaustive, duplicate-free, and deterministic: lexicographic on the block
// assignment vector, then on the function table.

namespace bmoll {

inline constexpr int kDefaultBruteLimit = 7;

// Thrown instead of attempting an enumeration whose size would be hopeless.
struct EnumerationLimitError : std::runtime_error {
  mpz_class estimated_count;

  EnumerationLimitError(int m, int limit, mpz_class count)
      : std::runtime_error("enumeration refused: m=" + std::to_string(m) +
                           " exceeds brute-force limit " + std::to_string(limit) +
                           " (estimated " + count.get_str() + " objects)"),
        estimated_count(std::move(count)) {}
};

namespace detail {

inline void require_perm_of(const std::map<int, int>& pi, const std::vector<int>& block,
                            const char* name) {
  if (pi.size() != block.size()) {
    throw std::invalid_argument(std::string(name) + " must have domain exactly its block");
  }
  std::set<int> values;
  for (const auto& [from, to] : pi) {
    if (!std::binary_search(block.begin(), block.end(), from) ||
        !std::binary_search(block.begin(), block.end(), to) ||
        !values.insert(to).second) {
      throw std::invalid_argument(std::string(name) + " is not a permutation of its block");
    }
  }
}

inline void require_composition(const std::vector<std::vector<int>>& blocks, int m) {
  std::vector<int> all;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (b[i] >= b[i + 1]) {
        throw std::invalid_argument("composition blocks must be strictly increasing");
      }
    }
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != m) {
    throw std::invalid_argument("composition blocks must cover [m]");
  }
  for (int i = 0; i < m; ++i) {
    if (all[i] != i + 1) {
      throw std::invalid_argument("composition blocks must cover [m]");
    }
  }
}

}  // namespace detail

// (A,B; piA; piB): piA injective from A into all of [m], piB a permutation
// of B.
struct MeixnerEndofunction {
  std::vector<int> A, B;
  std::map<int, int> piA;
  std::map<int, int> piB;

  int ground_size() const { return static_cast<int>(A.size() + B.size()); }

  void validate() const {
    const int m = ground_size();
    detail::require_composition({A, B}, m);
    if (piA.size() != A.size()) {
      throw std::invalid_argument("piA must have domain exactly A");
    }
    std::set<int> values;
    for (const auto& [from, to] : piA) {
      if (!std::binary_search(A.begin(), A.end(), from) || to < 1 || to > m ||
          !values.insert(to).second) {
        throw std::invalid_argument("piA is not an injection from A into [m]");
      }
    }
    detail::require_perm_of(piB, B, "piB");
  }

  friend bool operator==(const MeixnerEndofunction& x, const MeixnerEndofunction& y) {
    return x.A == y.A && x.B == y.B && x.piA == y.piA && x.piB == y.piB;
  }
};

// (A,B,C; piA; piB, piC): piA injective from A into A u B (values avoid C),
// piB and piC permutations of their blocks.
struct MeixnerBiEndofunction {
  std::vector<int> A, B, C;
  std::map<int, int> piA;
  std::map<int, int> piB;
  std::map<int, int> piC;

  int ground_size() const { return static_cast<int>(A.size() + B.size() + C.size()); }

  void validate() const {
    detail::require_composition({A, B, C}, ground_size());
    if (piA.size() != A.size()) {
      throw std::invalid_argument("piA must have domain exactly A");
    }
    std::set<int> values;
    for (const auto& [from, to] : piA) {
      bool in_ab = std::binary_search(A.begin(), A.end(), to) ||
                   std::binary_search(B.begin(), B.end(), to);
      if (!std::binary_search(A.begin(), A.end(), from) || !in_ab ||
          !values.insert(to).second) {
        throw std::invalid_argument("piA is not an injection from A into A u B");
      }
    }
    detail::require_perm_of(piB, B, "piB");
    detail::require_perm_of(piC, C, "piC");
  }

  friend bool operator==(const MeixnerBiEndofunction& x, const MeixnerBiEndofunction& y) {
    return x.A == y.A && x.B == y.B && x.C == y.C && x.piA == y.piA &&
           x.piB == y.piB && x.piC == y.piC;
  }
};

enum class Color { white, black, red };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::white: return "white";
    case Color::black: return "black";
    case Color::red: return "red";
  }
  return "?";
}

// A permutation of [m] with a 2- or 3-coloring; in the 3-color case no cycle
// may contain a red element together with a non-red one.
struct ColoredPermutation {
  int m = 0;
  int colors = 2;                // 2 or 3
  std::vector<Color> coloring;   // coloring[i] is the color of i+1
  std::vector<int> sigma;        // one-line: sigma[i] is the image of i+1

  int image(int x) const { return sigma[x - 1]; }
  Color color(int x) const { return coloring[x - 1]; }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(m, false);
    for (int s = 1; s <= m; ++s) {
      if (seen[s - 1]) continue;
      std::vector<int> cycle;
      int cur = s;
      do {
        cycle.push_back(cur);
        seen[cur - 1] = true;
        cur = image(cur);
      } while (cur != s);
      out.push_back(std::move(cycle));
    }
    return out;
  }

  void validate() const {
    if (colors != 2 && colors != 3) {
      throw std::invalid_argument("ColoredPermutation: colors must be 2 or 3");
    }
    if (static_cast<int>(coloring.size()) != m ||
        static_cast<int>(sigma.size()) != m) {
      throw std::invalid_argument("ColoredPermutation: coloring and sigma must have length m");
    }
    std::vector<bool> hit(m, false);
    for (int v : sigma) {
      if (v < 1 || v > m || hit[v - 1]) {
        throw std::invalid_argument("ColoredPermutation: sigma is not a permutation of [m]");
      }
      hit[v - 1] = true;
    }
    for (Color c : coloring) {
      if (colors == 2 && c == Color::red) {
        throw std::invalid_argument("ColoredPermutation: red is not allowed with 2 colors");
      }
    }
    if (colors == 3) {
      for (const auto& cycle : cycles()) {
        bool has_red = false, has_other = false;
        for (int x : cycle) (color(x) == Color::red ? has_red : has_other) = true;
        if (has_red && has_other) {
          throw std::invalid_argument(
              "ColoredPermutation: a cycle mixes red with non-red elements");
        }
      }
    }
  }

  friend bool operator==(const ColoredPermutation& x, const ColoredPermutation& y) {
    return x.m == y.m && x.colors == y.colors && x.coloring == y.coloring &&
           x.sigma == y.sigma;
  }
};

// ---- counts (used for pre-flight estimates and count checks) ----

// sum over |A|=p of C(m,p) * (m!/(m-p)!) * (m-p)! = 2^m m!.
inline mpz_class endofunction_count(int m) {
  return (mpz_class(1) << m) * factorial(m);
}

inline mpz_class bi_endofunction_count(int m) {
  mpz_class total = 0;
  for (int p = 0; p <= m; ++p) {
    for (int q = 0; p + q <= m; ++q) {
      int r = m - p - q;
      total += multinomial(m, {static_cast<unsigned long>(p), static_cast<unsigned long>(q),
                               static_cast<unsigned long>(r)}) *
               factorial(p + q) * factorial(r);
    }
  }
  return total;
}

inline mpz_class colored_permutation_count(int m, int colors) {
  if (colors == 2) return (mpz_class(1) << m) * factorial(m);
  mpz_class total = 0;
  for (int r = 0; r <= m; ++r) {
    total += binomial(m, r) * factorial(r) * (mpz_class(1) << (m - r)) * factorial(m - r);
  }
  return total;
}

// ---- enumeration helpers ----

namespace detail {

// All injective value tuples for `domain` drawn from `values`, lexicographic.
template <class Fn>
void for_each_injection(const std::vector<int>& domain, const std::vector<int>& values,
                        Fn&& fn) {
  std::map<int, int> image;
  std::vector<bool> used(values.size(), false);
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == domain.size()) {
      fn(static_cast<const std::map<int, int>&>(image));
      return;
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[domain[idx]] = values[v];
      self(self, idx + 1);
      image.erase(domain[idx]);
      used[v] = false;
    }
  };
  recurse(recurse, 0);
}

// All permutations of `block` (sorted ascending), lexicographic one-line.
template <class Fn>
void for_each_block_permutation(const std::vector<int>& block, Fn&& fn) {
  std::vector<int> images = block;
  do {
    std::map<int, int> pi;
    for (std::size_t i = 0; i < block.size(); ++i) pi[block[i]] = images[i];
    fn(static_cast<const std::map<int, int>&>(pi));
  } while (std::next_permutation(images.begin(), images.end()));
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Splits [m] by the base-`k` digits of `assignment` (element 1 is the most
// significant digit), so increasing `assignment` walks block assignment
// vectors in lexicographic order.
inline std::vector<std::vector<int>> blocks_of(int m, int k, std::uint64_t assignment) {
  std::vector<std::vector<int>> blocks(k);
  for (int e = m; e >= 1; --e) {
    blocks[assignment % k].push_back(e);
    assignment /= k;
  }
  for (auto& b : blocks) std::reverse(b.begin(), b.end());
  return blocks;
}

}  // namespace detail

// ---- enumerators ----

template <class Fn>
void for_each_endofunction_in_composition(std::vector<int> A, std::vector<int> B,
                                          Fn&& fn) {
  std::vector<int> ground;
  ground.reserve(A.size() + B.size());
  ground.insert(ground.end(), A.begin(), A.end());
  ground.insert(ground.end(), B.begin(), B.end());
  std::sort(ground.begin(), ground.end());
  detail::for_each_injection(A, ground, [&](const std::map<int, int>& piA) {
    detail::for_each_block_permutation(B, [&](const std::map<int, int>& piB) {
      fn(MeixnerEndofunction{A, B, piA, piB});
    });
  });
}

template <class Fn>
void for_each_endofunction(int m, int limit, Fn&& fn) {
  if (m > limit) throw EnumerationLimitError(m, limit, endofunction_count(m));
  for (std::uint64_t assign = 0; assign < detail::ipow(2, m); ++assign) {
    auto blocks = detail::blocks_of(m, 2, assign);
    for_each_endofunction_in_composition(std::move(blocks[0]), std::move(blocks[1]), fn);
  }
}

template <class Fn>
void for_each_bi_endofunction_in_composition(std::vector<int> A, std::vector<int> B,
                                             std::vector<int> C, Fn&& fn) {
  std::vector<int> ab;
  ab.reserve(A.size() + B.size());
  ab.insert(ab.end(), A.begin(), A.end());
  ab.insert(ab.end(), B.begin(), B.end());
  std::sort(ab.begin(), ab.end());
  detail::for_each_injection(A, ab, [&](const std::map<int, int>& piA) {
    detail::for_each_block_permutation(B, [&](const std::map<int, int>& piB) {
      detail::for_each_block_permutation(C, [&](const std::map<int, int>& piC) {
        fn(MeixnerBiEndofunction{A, B, C, piA, piB, piC});
      });
    });
  });
}

template <class Fn>
void for_each_bi_endofunction(int m, int limit, Fn&& fn) {
  if (m > limit) throw EnumerationLimitError(m, limit, bi_endofunction_count(m));
  for (std::uint64_t assign = 0; assign < detail::ipow(3, m); ++assign) {
    auto blocks = detail::blocks_of(m, 3, assign);
    for_each_bi_endofunction_in_composition(std::move(blocks[0]), std::move(blocks[1]),
                                            std::move(blocks[2]), fn);
  }
}

// All (coloring, sigma) pairs for one coloring, lexicographic in one-line
// sigma. For three colors only permutations fixing the red set setwise
// satisfy the cycle constraint.
template <class Fn>
void for_each_colored_permutation_with_coloring(int m, int colors,
                                                const std::vector<Color>& coloring,
                                                Fn&& fn) {
  std::vector<int> sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = i + 1;
  do {
    bool ok = true;
    if (colors == 3) {
      for (int x = 1; x <= m && ok; ++x) {
        if ((coloring[x - 1] == Color::red) != (coloring[sigma[x - 1] - 1] == Color::red)) {
          ok = false;
        }
      }
    }
    if (ok) fn(ColoredPermutation{m, colors, coloring, sigma});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

template <class Fn>
void for_each_colored_permutation(int m, int colors, int limit, Fn&& fn) {
  if (colors != 2 && colors != 3) {
    throw std::invalid_argument("for_each_colored_permutation: colors must be 2 or 3");
  }
  if (m > limit) {
    throw EnumerationLimitError(m, limit, colored_permutation_count(m, colors));
  }
  for (std::uint64_t assign = 0; assign < detail::ipow(colors, m); ++assign) {
    std::vector<Color> coloring(m);
    std::uint64_t rest = assign;
    for (int e = m; e >= 1; --e) {
      coloring[e - 1] = static_cast<Color>(rest % colors);
      rest /= colors;
    }
    for_each_colored_permutation_with_coloring(m, colors, coloring, fn);
  }
}

// The C = {} embedding and its inverse.
inline MeixnerBiEndofunction embed(const MeixnerEndofunction& x) {
  return MeixnerBiEndofunction{x.A, x.B, {}, x.piA, x.piB, {}};
}

inline MeixnerEndofunction project(const MeixnerBiEndofunction& x) {
  if (!x.C.empty()) {
    throw std::invalid_argument("project: C must be empty");
  }
  return MeixnerEndofunction{x.A, x.B, x.piA, x.piB};
}

}  // namespace bmoll
