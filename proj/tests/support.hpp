#pragma once

// Shared fixtures and independent oracles for the test binaries. Oracles work
// on plain tables and brute force; they do not call the routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ample/builders.hpp"
#include "ample/cohomology.hpp"
#include "ample/groupoid.hpp"

namespace testing {

using ample::ArrowId;
using ample::FiniteGroupoid;
using ample::GroupoidPtr;

inline GroupoidPtr make(const std::string& spec) {
  return std::make_shared<const FiniteGroupoid>(ample::build(ample::parse_spec(spec)));
}

struct Named {
  std::string name;
  GroupoidPtr g;
};

// Small corpus used by most property tests.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (const char* s : {"pair(1)", "pair(2)", "pair(3)", "group(cyclic 1)", "group(cyclic 2)",
                        "group(cyclic 3)", "group(cyclic 4)", "group(cyclic 5)", "group(cyclic 6)",
                        "group(sym 3)", "action(cyclic 2, 2, [[1,0]])",
                        "action(cyclic 3, 3, [[1,2,0]])", "action(cyclic 2, 2, [[0,1]])",
                        "union(pair(2), group(cyclic 2))", "product(pair(2), group(cyclic 2))",
                        "union(pair(1), pair(1))"}) {
    out.push_back({s, make(s)});
  }
  return out;
}

// Effective members of the corpus plus a free action.
inline std::vector<Named> effective_corpus() {
  std::vector<Named> out;
  for (const char* s : {"pair(1)", "pair(2)", "pair(3)", "action(cyclic 2, 2, [[1,0]])",
                        "action(cyclic 3, 3, [[1,2,0]])", "union(pair(2), pair(1))"}) {
    out.push_back({s, make(s)});
  }
  return out;
}

// Arrows x, y with src(x) = rng(y), read off the raw tables.
inline std::vector<std::pair<ArrowId, ArrowId>> composable_pairs(const FiniteGroupoid& g) {
  std::vector<std::pair<ArrowId, ArrowId>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto x = static_cast<ArrowId>(i), y = static_cast<ArrowId>(j);
      if (g.src(x) == g.rng(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

// Number of full bisections: the permanent of the unit-by-unit hom-set size
// matrix, by brute force over permutations.
inline std::uint64_t full_group_order_oracle(const FiniteGroupoid& g) {
  const auto& units = g.units();
  const std::size_t n = units.size();
  std::vector<std::vector<std::uint64_t>> hom(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto x = static_cast<ArrowId>(a);
    ++hom[static_cast<std::size_t>(g.unit_index(g.rng(x)))][static_cast<std::size_t>(g.unit_index(g.src(x)))];
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= hom[i][p[i]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Bijections of arrows that commute with src, rng, inv and comp, by
// backtracking over arrows in order with a full check at each step.
inline std::vector<std::vector<ArrowId>> isomorphisms(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                                      std::size_t stop_after = SIZE_MAX) {
  std::vector<std::vector<ArrowId>> out;
  if (a.size() != b.size()) return out;
  const std::size_t m = a.size();
  std::vector<ArrowId> f(m, -1);
  std::vector<bool> used(m, false);
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      const auto x = static_cast<ArrowId>(i);
      const ArrowId fx = f[i];
      if (a.is_unit(x) != b.is_unit(fx)) return false;
      auto mapped = [&](ArrowId y) { return static_cast<std::size_t>(y) <= upto; };
      if (mapped(a.src(x)) && f[static_cast<std::size_t>(a.src(x))] != b.src(fx)) return false;
      if (mapped(a.rng(x)) && f[static_cast<std::size_t>(a.rng(x))] != b.rng(fx)) return false;
      if (mapped(a.inv(x)) && f[static_cast<std::size_t>(a.inv(x))] != b.inv(fx)) return false;
      for (std::size_t j = 0; j <= upto; ++j) {
        const auto y = static_cast<ArrowId>(j);
        if (a.src(x) != a.rng(y)) continue;
        const ArrowId xy = a.comp(x, y);
        if (mapped(xy) && b.comp(fx, f[j]) != f[static_cast<std::size_t>(xy)]) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.size() >= stop_after) return;
    if (i == m) {
      out.push_back(f);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      f[i] = static_cast<ArrowId>(c);
      used[c] = true;
      if (consistent(i)) go(i + 1);
      used[c] = false;
      f[i] = -1;
    }
  };
  go(0);
  return out;
}

// Group homomorphisms from a Cayley table into Z/den, as exponent lists:
// every assignment of k/den to elements, filtered by the homomorphism law.
inline std::size_t homomorphism_count(const std::vector<std::vector<int>>& table, int den) {
  const std::size_t n = table.size();
  std::size_t count = 0;
  std::vector<int> k(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if ((k[a] + k[b]) % den != k[static_cast<std::size_t>(table[a][b])]) return;
        }
      }
      ++count;
      return;
    }
    for (int v = 0; v < den; ++v) {
      k[i] = v;
      // Prune as soon as a fully assigned product disagrees.
      bool ok = true;
      for (std::size_t a = 0; a <= i && ok; ++a) {
        for (std::size_t b = 0; b <= i && ok; ++b) {
          const auto ab = static_cast<std::size_t>(table[a][b]);
          if (ab <= i && (k[a] + k[b]) % den != k[ab]) ok = false;
        }
      }
      if (ok) go(i + 1);
    }
  };
  go(0);
  return count;
}

inline constexpr int kCocycleDen = 12;

// All cocycles with values in (1/12)Z/Z, as exponent vectors, by
// backtracking over arrows with every fully assigned composable pair checked.
inline std::vector<std::vector<int>> cocycles_oracle(const FiniteGroupoid& g) {
  const std::size_t m = g.size();
  const auto pairs = testing::composable_pairs(g);
  std::vector<std::vector<std::pair<ArrowId, ArrowId>>> by_max(m);
  for (auto [x, y] : pairs) {
    const auto top = static_cast<std::size_t>(std::max({x, y, g.comp(x, y)}));
    by_max[top].emplace_back(x, y);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> k(m, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == m) {
      out.push_back(k);
      return;
    }
    for (int v = 0; v < kCocycleDen; ++v) {
      if (g.is_unit(static_cast<ArrowId>(i)) && v != 0) break;
      k[i] = v;
      bool ok = true;
      for (auto [x, y] : by_max[i]) {
        const auto xy = static_cast<std::size_t>(g.comp(x, y));
        if ((k[static_cast<std::size_t>(x)] + k[static_cast<std::size_t>(y)]) % kCocycleDen != k[xy]) {
          ok = false;
          break;
        }
      }
      if (ok) go(i + 1);
    }
  };
  go(0);
  return out;
}

inline ample::Cocycle to_cocycle(const std::vector<int>& k) {
  ample::Cocycle xi;
  for (int v : k) xi.emplace_back(v, kCocycleDen);
  return xi;
}

// Coboundaries of all 12-valued unit functions.
inline std::set<std::vector<int>> coboundaries_oracle(const FiniteGroupoid& g) {
  const auto& units = g.units();
  std::set<std::vector<int>> out;
  std::vector<int> f(units.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == units.size()) {
      std::vector<int> k(g.size());
      for (std::size_t a = 0; a < g.size(); ++a) {
        const auto x = static_cast<ArrowId>(a);
        const int fs = f[static_cast<std::size_t>(g.unit_index(g.src(x)))];
        const int fr = f[static_cast<std::size_t>(g.unit_index(g.rng(x)))];
        k[a] = ((fs - fr) % kCocycleDen + kCocycleDen) % kCocycleDen;
      }
      out.insert(k);
      return;
    }
    for (int v = 0; v < kCocycleDen; ++v) {
      f[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace testing
