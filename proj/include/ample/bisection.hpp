#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ample/groupoid.hpp"

namespace ample {

// A set of arrows on which src and rng are both injective. Stored sorted, so
// equality is set equality. The empty bisection is the zero of the inverse
// semigroup.
class Bisection {
 public:
  Bisection() = default;

  // Throws NotABisection if src or rng fails to be injective on the set and
  // GroupoidMismatch if an arrow is not in g.
  static Bisection from_arrows(const FiniteGroupoid& g, std::vector<ArrowId> arrows);
  static Bisection units(const FiniteGroupoid& g);

  const std::vector<ArrowId>& arrows() const& { return arrows_; }
  // By value on temporaries, so range-for over f(...).arrows() stays valid.
  std::vector<ArrowId> arrows() && { return std::move(arrows_); }
  std::size_t size() const { return arrows_.size(); }
  bool empty() const { return arrows_.empty(); }
  bool contains(ArrowId a) const;

  auto operator<=>(const Bisection&) const = default;

  std::string str() const;  // "[0,4,8]"

 private:
  explicit Bisection(std::vector<ArrowId> sorted) : arrows_(std::move(sorted)) {}
  friend Bisection multiply(const FiniteGroupoid&, const Bisection&, const Bisection&);
  friend Bisection inverse(const FiniteGroupoid&, const Bisection&);
  friend Bisection source_set(const FiniteGroupoid&, const Bisection&);
  friend Bisection range_set(const FiniteGroupoid&, const Bisection&);

  std::vector<ArrowId> arrows_;
};

// Permutation of units, indexed by position in g.units().
using UnitPermutation = std::vector<int>;

bool is_bisection(const FiniteGroupoid& g, const std::vector<ArrowId>& arrows);
std::string format_arrows(const std::vector<ArrowId>& arrows);

// {ab : a in A, b in B, src(a) = rng(b)}
Bisection multiply(const FiniteGroupoid& g, const Bisection& a, const Bisection& b);
Bisection inverse(const FiniteGroupoid& g, const Bisection& a);
// s(A) and r(A) as idempotent (unit) bisections.
Bisection source_set(const FiniteGroupoid& g, const Bisection& a);
Bisection range_set(const FiniteGroupoid& g, const Bisection& a);

// Order of the inverse semigroup: A <= B iff A = B A^-1 A.
bool leq(const FiniteGroupoid& g, const Bisection& a, const Bisection& b);
bool is_subset(const Bisection& a, const Bisection& b);

bool is_full(const FiniteGroupoid& g, const Bisection& b);

// rho_B(u) = r(Bu). Throws NotFullBisection unless b is full.
UnitPermutation rho(const FiniteGroupoid& g, const Bisection& b);

UnitPermutation compose(const UnitPermutation& outer, const UnitPermutation& inner);
UnitPermutation inverse(const UnitPermutation& p);

inline constexpr std::size_t kDefaultFullGroupLimit = 1'000'000;

// All full bisections in lexicographic order, via perfect matchings of the
// bipartite graph units x units with one edge per arrow. Throws
// SizeLimitExceeded past `limit` elements.
std::vector<Bisection> full_group(const FiniteGroupoid& g,
                                  std::size_t limit = kDefaultFullGroupLimit);

// Every bisection (including the empty one), lexicographic. Intended for
// exhaustive checks on small groupoids.
std::vector<Bisection> all_bisections(const FiniteGroupoid& g, std::size_t limit);

// Greedy extension of {x} by arrows in increasing order; a maximal bisection
// containing x.
Bisection maximal_bisection_containing(const FiniteGroupoid& g, ArrowId x);

}  // namespace ample
