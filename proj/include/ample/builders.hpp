#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ample/convolution.hpp"
#include "ample/groupoid.hpp"

namespace ample {

// Largest groupoid any builder will produce; the composition table is m^2.
inline constexpr std::size_t kMaxArrows = 4096;

struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Table };
  Kind kind = Kind::Cyclic;
  int n = 1;                               // Cyclic / Symmetric
  std::vector<std::vector<int>> table;     // Table: table[a][b] = a b
};

struct ExplicitTables {
  int arrows = 0;
  std::vector<int> units, src, rng, inv;
  std::vector<std::vector<int>> comp;      // triples [a, b, ab]
};

struct GroupoidSpec {
  enum class Kind { Pair, Group, Action, Union, Product, Explicit };
  Kind kind = Kind::Pair;
  int n = 0;                               // Pair: points; Action: points
  GroupSpec group;                         // Group, Action
  std::vector<std::vector<int>> perms;     // Action: one permutation per generator
  std::shared_ptr<const GroupoidSpec> left, right;  // Union, Product
  ExplicitTables tables;                   // Explicit
};

// Multiplication table of a group with its canonical element numbering:
// cyclic n: k is the residue k; sym n: permutations of {0..n-1} in
// lexicographic order of their image lists, (s t)(i) = s(t(i)); table: as given.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> generators;  // cyclic: {1}; sym: (0 1), (0 1 ... n-1); table: all
};

FiniteGroup make_group(const GroupSpec& spec);

// Canonical numbering:
//   pair(n): arrow (i, j) from j to i is i n + j.
//   group(G): arrow k is element k; the identity is the unit.
//   action(G, n, perms): arrow (x, g) from x to g.x is x |G| + g.
//   union(S, T): arrows of S, then those of T shifted by |S|.
//   product(S, T): arrow (a, b) is a |T| + b.
//   explicit: verbatim.
// Throws MalformedTable, NotAGroupAction or SizeLimitExceeded.
FiniteGroupoid build(const GroupoidSpec& spec);

GroupoidSpec parse_spec(const std::string& text);
std::string print_spec(const GroupoidSpec& spec);

// Reads and builds a spec file; the result is not validated.
GroupoidPtr load_groupoid(const std::string& path);

// Element grammar:
//   E := ind([a, ...]) | phase(u:p/q, ...)*ind([a, ...]) | sum(E, E)
//      | scale(RE, IM, E) | mul(E, E)
// with u a unit arrow id, RE and IM exact decimals or fractions, and mul the
// convolution product. Units missing from phase(...) get angle 0.
ExactElement parse_element(const std::string& text, const GroupoidPtr& g);

}  // namespace ample
