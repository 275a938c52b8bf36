#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bmoll/meixner.hpp"

// The weight-preserving bijection between Meixner bi-endofunctions and
// 3-colored permutations, and its restriction (C = {}) to Foata's bijection
// between Meixner endofunctions and bi-colored permutations.
//
// Forward: color A/B/C white/black/red. piA decomposes into cycles on A and
// paths attached to terminals in B (injectivity allows at most one path per
// terminal). For a terminal x on a piB-cycle with incoming arc (y, x), the
// arc is broken and y is redirected to the start of the path, which then
// runs into x. Each rewrite touches a distinct arc, so the result does not
// depend on processing order.

namespace bmoll {

namespace detail {

// Walks piA-preimages from `x` back to the start of the attached path;
// returns x itself when no path is attached.
inline int path_start(const std::map<int, int>& piA_inverse, int x) {
  int cur = x;
  auto it = piA_inverse.find(cur);
  while (it != piA_inverse.end()) {
    cur = it->second;
    it = piA_inverse.find(cur);
  }
  return cur;
}

}  // namespace detail

inline ColoredPermutation extended_forward(const MeixnerBiEndofunction& x) {
  x.validate();
  const int m = x.ground_size();

  std::map<int, int> piA_inverse;
  for (const auto& [from, to] : x.piA) piA_inverse[to] = from;

  ColoredPermutation p;
  p.m = m;
  p.colors = 3;
  p.coloring.assign(m, Color::white);
  for (int b : x.B) p.coloring[b - 1] = Color::black;
  for (int c : x.C) p.coloring[c - 1] = Color::red;
  p.sigma.assign(m, 0);
  for (const auto& [from, to] : x.piA) p.sigma[from - 1] = to;
  for (const auto& [from, to] : x.piC) p.sigma[from - 1] = to;
  for (const auto& [from, to] : x.piB) {
    p.sigma[from - 1] = detail::path_start(piA_inverse, to);
  }

  p.validate();
  return p;
}

inline MeixnerBiEndofunction extended_backward(const ColoredPermutation& p) {
  if (p.colors != 3) {
    throw std::invalid_argument("extended_backward: expected a 3-colored permutation");
  }
  p.validate();

  MeixnerBiEndofunction x;
  for (int e = 1; e <= p.m; ++e) {
    switch (p.color(e)) {
      case Color::white: x.A.push_back(e); break;
      case Color::black: x.B.push_back(e); break;
      case Color::red: x.C.push_back(e); break;
    }
  }

  for (const auto& cycle : p.cycles()) {
    bool has_black = false, has_red = false;
    for (int e : cycle) {
      if (p.color(e) == Color::black) has_black = true;
      if (p.color(e) == Color::red) has_red = true;
    }
    if (has_red) {
      for (int e : cycle) x.piC[e] = p.image(e);
    } else if (!has_black) {
      for (int e : cycle) x.piA[e] = p.image(e);
    } else {
      // Mixed cycle: black elements in cyclic order rebuild the piB-cycle;
      // each maximal white run becomes a piA-path into the black element
      // that follows it.
      for (int e : cycle) {
        if (p.color(e) == Color::white) {
          x.piA[e] = p.image(e);
        } else {
          int cur = p.image(e);
          while (p.color(cur) == Color::white) cur = p.image(cur);
          x.piB[e] = cur;
        }
      }
    }
  }

  x.validate();
  return x;
}

inline ColoredPermutation foata_forward(const MeixnerEndofunction& x) {
  x.validate();
  ColoredPermutation p = extended_forward(embed(x));
  p.colors = 2;
  return p;
}

inline MeixnerEndofunction foata_backward(const ColoredPermutation& p) {
  if (p.colors != 2) {
    throw std::invalid_argument("foata_backward: expected a bi-colored permutation");
  }
  p.validate();
  ColoredPermutation lifted = p;
  lifted.colors = 3;
  return project(extended_backward(lifted));
}

// One broken arc per attached path: the piB-arc (broken_from, broken_to) is
// replaced by broken_from -> path.front(), and `path` (in arrow order) runs
// into broken_to. Records are ordered by (cycle_min, broken_to).
struct TraceRecord {
  int cycle_min = 0;
  int broken_from = 0;
  int broken_to = 0;
  std::vector<int> path;

  friend bool operator==(const TraceRecord& x, const TraceRecord& y) {
    return x.cycle_min == y.cycle_min && x.broken_from == y.broken_from &&
           x.broken_to == y.broken_to && x.path == y.path;
  }
};

inline std::vector<TraceRecord> absorption_trace(const MeixnerBiEndofunction& x) {
  x.validate();
  std::map<int, int> piA_inverse;
  for (const auto& [from, to] : x.piA) piA_inverse[to] = from;

  // Cycle minimum per element of B.
  std::map<int, int> cycle_min;
  {
    std::set<int> seen;
    for (int b : x.B) {
      if (seen.count(b)) continue;
      std::vector<int> cycle;
      int cur = b;
      do {
        cycle.push_back(cur);
        seen.insert(cur);
        cur = x.piB.at(cur);
      } while (cur != b);
      int mn = *std::min_element(cycle.begin(), cycle.end());
      for (int e : cycle) cycle_min[e] = mn;
    }
  }

  std::vector<TraceRecord> out;
  for (const auto& [y, target] : x.piB) {
    if (!piA_inverse.count(target)) continue;  // no path attached to target
    TraceRecord rec;
    rec.cycle_min = cycle_min.at(target);
    rec.broken_from = y;
    rec.broken_to = target;
    int cur = target;
    while (piA_inverse.count(cur)) {
      cur = piA_inverse.at(cur);
      rec.path.push_back(cur);
    }
    std::reverse(rec.path.begin(), rec.path.end());
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const TraceRecord& r, const TraceRecord& s) {
    return r.cycle_min != s.cycle_min ? r.cycle_min < s.cycle_min
                                      : r.broken_to < s.broken_to;
  });
  return out;
}

}  // namespace bmoll
