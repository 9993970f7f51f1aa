#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ample/convolution.hpp"
#include "ample/groupoid.hpp"
#include "ample/scalar.hpp"

namespace ample {

// Groupoid homomorphism into Q/Z, indexed by arrow.
using Cocycle = std::vector<Angle>;

Cocycle trivial_cocycle(const FiniteGroupoid& g);

struct CocycleCheck {
  bool ok = true;
  // First composable pair (a, b) with xi(ab) != xi(a) + xi(b), or the unit u
  // with xi(u) != 0 reported as (u, u).
  std::optional<std::pair<ArrowId, ArrowId>> witness;
};

CocycleCheck is_cocycle(const FiniteGroupoid& g, const Cocycle& xi);

// f^(x) = conj(f(r(x))) f(s(x)). Throws PartialFunction unless f is total on units.
Cocycle coboundary(const FiniteGroupoid& g, const CircleFunction& f);

Cocycle add(const Cocycle& a, const Cocycle& b);
Cocycle negate(const Cocycle& a);

// Smith normal form D = U A V of an integer matrix. Only the column
// transform is kept, with its inverse.
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // nonzero d_1 | d_2 | ...
  std::vector<std::vector<std::int64_t>> v, v_inverse;  // n x n
};
SmithForm smith_normal_form(std::vector<std::vector<std::int64_t>> rows, std::size_t columns);

// Canonical coordinates on one transitive component.
struct OrbitFrame {
  IsotropyGroup isotropy;             // at the base (least) unit
  std::vector<ArrowId> tree;          // tree[i]: arrow base -> isotropy.orbit[i], breadth first
  // Abelianization of the isotropy group: Z/d_1 + ... with each d_i > 1.
  std::vector<std::int64_t> invariants;
  // characters[i][k]: value of the i-th generator character, of order
  // invariants[i], on isotropy.elements[k].
  std::vector<std::vector<Angle>> characters;
  // dual[i][k]: integer weights with k_i / d_i = sum_k dual[i][k] chi(elements[k]).
  std::vector<std::vector<std::int64_t>> dual;
};

// Z^1(G, Q/Z) = prod over orbits of (Q/Z)^(|orbit|-1) x Hom(Iso_base, Q/Z).
struct CocycleGroup {
  std::vector<OrbitFrame> orbits;
  std::size_t torus_rank = 0;
};

CocycleGroup cocycle_group(const FiniteGroupoid& g);

// Coordinates of a cocycle: per orbit, tau[i] = xi(tree[i]) and the
// exponents k_i in Z/d_i of the isotropy character sum k_i chi_i.
struct CocycleCoordinates {
  std::vector<std::vector<Angle>> tau;
  std::vector<std::vector<std::int64_t>> character;
  bool operator==(const CocycleCoordinates&) const = default;
};

// Throws NotACocycle.
CocycleCoordinates decompose(const FiniteGroupoid& g, const CocycleGroup& z, const Cocycle& xi);
// xi(x) = tau(r) + chi(t_r^-1 x t_s) - tau(s) for x: s -> r.
Cocycle assemble(const FiniteGroupoid& g, const CocycleGroup& z, const CocycleCoordinates& c);

// A finite generating sample of Z^1: the character generators chi_i and, per
// non-base unit v, the tree cocycle with tau(v) = 1/denominator.
std::vector<Cocycle> cocycle_generators(const FiniteGroupoid& g, const CocycleGroup& z,
                                        std::int64_t denominator = 12);

// H^1 = Z^1 / B^1 = sum over orbits of Hom(Iso_base^ab, Q/Z).
struct H1Description {
  CocycleGroup z1;
  std::vector<std::int64_t> invariants;  // all orbits, ascending
  std::size_t order() const;
  std::string str() const;  // "0" or "Z/2+Z/3"
};

H1Description h1(const FiniteGroupoid& g);

// Class of xi in H^1: the character exponents per orbit.
std::vector<std::vector<std::int64_t>> cohomology_class(const FiniteGroupoid& g,
                                                        const CocycleGroup& z,
                                                        const Cocycle& xi);

// f with coboundary(f) = xi and f(base) = 0 on every orbit, or nullopt when xi
// has a nontrivial isotropy character. Throws NotACocycle.
std::optional<CircleFunction> is_coboundary(const FiniteGroupoid& g, const CocycleGroup& z,
                                            const Cocycle& xi);

std::string format_cocycle(const Cocycle& xi);

}  // namespace ample
