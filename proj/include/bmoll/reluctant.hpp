#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmoll/factorials.hpp"
#include "bmoll/polynomial.hpp"

// Reluctant functions: injective maps f from a set A into A u B (A, B
// disjoint). The functional digraph splits uniquely into cycles on A and
// directed paths ending at a terminal in B, which yields a canonical word
// encoding recoverable from left-to-right minima and B-membership.

namespace bmoll {

struct ReluctantFunction {
  std::vector<int> A;    // strictly increasing
  std::vector<int> B;    // strictly increasing, disjoint from A
  std::map<int, int> f;  // domain exactly A, injective, values in A u B

  void validate() const {
    auto require_sorted_set = [](const std::vector<int>& v, const char* name) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] >= v[i + 1]) {
          throw std::invalid_argument(std::string("ReluctantFunction: ") + name +
                                      " must be strictly increasing");
        }
      }
    };
    require_sorted_set(A, "A");
    require_sorted_set(B, "B");
    std::set<int> ground(A.begin(), A.end());
    for (int b : B) {
      if (!ground.insert(b).second) {
        throw std::invalid_argument("ReluctantFunction: A and B must be disjoint");
      }
    }
    if (f.size() != A.size()) {
      throw std::invalid_argument("ReluctantFunction: domain of f must be exactly A");
    }
    std::set<int> values;
    for (const auto& [from, to] : f) {
      if (!std::binary_search(A.begin(), A.end(), from)) {
        throw std::invalid_argument("ReluctantFunction: f defined outside A");
      }
      if (ground.count(to) == 0) {
        throw std::invalid_argument("ReluctantFunction: f value outside A u B");
      }
      if (!values.insert(to).second) {
        throw std::invalid_argument("ReluctantFunction: f is not injective");
      }
    }
  }

  friend bool operator==(const ReluctantFunction& x, const ReluctantFunction& y) {
    return x.A == y.A && x.B == y.B && x.f == y.f;
  }
};

// Cycles are stored minimum-first and listed by decreasing minima; paths are
// stored terminal-first (the B element leads, then the A elements walking
// against the arrows) and listed by increasing terminal.
struct DigraphDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> paths;

  friend bool operator==(const DigraphDecomposition& x, const DigraphDecomposition& y) {
    return x.cycles == y.cycles && x.paths == y.paths;
  }
};

struct CanonicalWord {
  std::vector<int> word;
  std::vector<int> A;
  std::vector<int> B;

  friend bool operator==(const CanonicalWord& x, const CanonicalWord& y) {
    return x.word == y.word && x.A == y.A && x.B == y.B;
  }
};

inline DigraphDecomposition decompose(const ReluctantFunction& rf) {
  rf.validate();
  DigraphDecomposition out;
  std::set<int> image;
  for (const auto& [from, to] : rf.f) image.insert(to);
  std::set<int> b_set(rf.B.begin(), rf.B.end());
  std::set<int> visited;

  // Path starts are exactly the A elements with no preimage; injectivity
  // rules out trees hanging off cycles, so everything else lies on a cycle.
  for (int a : rf.A) {
    if (image.count(a)) continue;
    std::vector<int> forward;
    int cur = a;
    while (!b_set.count(cur)) {
      forward.push_back(cur);
      visited.insert(cur);
      cur = rf.f.at(cur);
    }
    std::vector<int> path;
    path.push_back(cur);  // terminal in B
    path.insert(path.end(), forward.rbegin(), forward.rend());
    out.paths.push_back(std::move(path));
  }
  for (int a : rf.A) {
    if (visited.count(a)) continue;
    std::vector<int> cycle;
    int cur = a;
    do {
      cycle.push_back(cur);
      visited.insert(cur);
      cur = rf.f.at(cur);
    } while (cur != a);
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    out.cycles.push_back(std::move(cycle));
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& x, const auto& y) { return x[0] > y[0]; });
  std::sort(out.paths.begin(), out.paths.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

inline CanonicalWord canonical_word(const ReluctantFunction& rf) {
  DigraphDecomposition dec = decompose(rf);
  CanonicalWord w;
  w.A = rf.A;
  w.B = rf.B;
  for (const auto& c : dec.cycles) w.word.insert(w.word.end(), c.begin(), c.end());
  for (const auto& p : dec.paths) w.word.insert(w.word.end(), p.begin(), p.end());
  return w;
}

// Positions i with seq[i] < seq[j] for all j < i; position 0 always counts.
inline std::vector<std::size_t> left_to_right_minima(const std::vector<int>& seq) {
  std::set<int> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) {
    throw std::invalid_argument("left_to_right_minima: entries must be distinct");
  }
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (positions.empty() || seq[i] < seq[positions.back()]) positions.push_back(i);
  }
  return positions;
}

// Inverts canonical_word: a left parenthesis opens before every B element,
// and before every left-to-right minimum inside the leading all-A prefix.
inline ReluctantFunction parse_word(const CanonicalWord& w) {
  ReluctantFunction rf;
  rf.A = w.A;
  rf.B = w.B;

  std::set<int> a_set(w.A.begin(), w.A.end());
  std::set<int> b_set(w.B.begin(), w.B.end());
  if (a_set.size() != w.A.size() || b_set.size() != w.B.size()) {
    throw std::invalid_argument("parse_word: A and B must be sets");
  }
  std::set<int> seen;
  for (int x : w.word) {
    if (!a_set.count(x) && !b_set.count(x)) {
      throw std::invalid_argument("parse_word: element " + std::to_string(x) +
                                  " outside A u B");
    }
    if (!seen.insert(x).second) {
      throw std::invalid_argument("parse_word: element " + std::to_string(x) +
                                  " repeated");
    }
  }
  for (int a : w.A) {
    if (!seen.count(a)) {
      throw std::invalid_argument("parse_word: element " + std::to_string(a) +
                                  " of A missing from word");
    }
  }

  std::size_t prefix_end = 0;
  while (prefix_end < w.word.size() && a_set.count(w.word[prefix_end])) ++prefix_end;

  // Cycle region: split the prefix at its left-to-right minima.
  std::vector<int> prefix(w.word.begin(), w.word.begin() + prefix_end);
  std::vector<std::size_t> minima = left_to_right_minima(prefix);
  for (std::size_t s = 0; s < minima.size(); ++s) {
    std::size_t begin = minima[s];
    std::size_t end = (s + 1 < minima.size()) ? minima[s + 1] : prefix_end;
    for (std::size_t i = begin; i < end; ++i) {
      int from = w.word[i];
      int to = w.word[(i + 1 < end) ? i + 1 : begin];
      rf.f[from] = to;
    }
  }

  // Path region: each B element starts a path and must absorb at least one
  // A element; paths must appear by increasing terminal.
  int last_terminal = 0;
  bool have_terminal = false;
  std::size_t i = prefix_end;
  while (i < w.word.size()) {
    int terminal = w.word[i];
    if (!b_set.count(terminal)) {
      throw std::invalid_argument("parse_word: misplaced element " +
                                  std::to_string(terminal));
    }
    if (have_terminal && terminal < last_terminal) {
      throw std::invalid_argument("parse_word: path terminals out of order");
    }
    last_terminal = terminal;
    have_terminal = true;
    std::size_t j = i + 1;
    int prev = terminal;
    while (j < w.word.size() && a_set.count(w.word[j])) {
      rf.f[w.word[j]] = prev;
      prev = w.word[j];
      ++j;
    }
    if (j == i + 1) {
      throw std::invalid_argument("parse_word: bare terminal " +
                                  std::to_string(terminal));
    }
    i = j;
  }

  rf.validate();
  return rf;
}

// a^k where k is the number of cycles in the functional digraph.
inline Poly cycle_weight_monomial(const ReluctantFunction& rf) {
  return Poly::monomial(decompose(rf).cycles.size());
}

// (|A| + |B|)! / |B|!, the number of injections of A into A u B.
inline mpz_class reluctant_count(unsigned long a_size, unsigned long b_size) {
  return factorial(a_size + b_size) / factorial(b_size);
}

// Enumerates all reluctant functions from A to B in lexicographic order of
// the value tuple (f(a_1), f(a_2), ...) with A sorted ascending.
template <class Fn>
void for_each_reluctant(const std::vector<int>& A, const std::vector<int>& B, Fn&& fn) {
  std::vector<int> ground;
  ground.reserve(A.size() + B.size());
  ground.insert(ground.end(), A.begin(), A.end());
  ground.insert(ground.end(), B.begin(), B.end());
  std::sort(ground.begin(), ground.end());

  ReluctantFunction rf;
  rf.A = A;
  rf.B = B;
  std::sort(rf.A.begin(), rf.A.end());
  std::sort(rf.B.begin(), rf.B.end());

  std::vector<bool> used(ground.size(), false);
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == rf.A.size()) {
      fn(static_cast<const ReluctantFunction&>(rf));
      return;
    }
    for (std::size_t v = 0; v < ground.size(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      rf.f[rf.A[idx]] = ground[v];
      self(self, idx + 1);
      rf.f.erase(rf.A[idx]);
      used[v] = false;
    }
  };
  recurse(recurse, 0);
}

inline std::vector<ReluctantFunction> enumerate_reluctant(const std::vector<int>& A,
                                                          const std::vector<int>& B) {
  std::vector<ReluctantFunction> out;
  for_each_reluctant(A, B, [&](const ReluctantFunction& rf) { out.push_back(rf); });
  return out;
}

// Sum of a^(#cycles) over all reluctant functions from an i-set to a j-set;
// equals the rising factorial (a+j)_i.
inline Poly reluctant_weighted_sum(int i, int j) {
  std::vector<int> A, B;
  for (int t = 1; t <= i; ++t) A.push_back(t);
  for (int t = i + 1; t <= i + j; ++t) B.push_back(t);
  Poly total;
  for_each_reluctant(A, B, [&](const ReluctantFunction& rf) {
    total += cycle_weight_monomial(rf);
  });
  return total;
}

}  // namespace bmoll
