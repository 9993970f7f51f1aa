#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ample {

using ArrowId = std::int32_t;
inline constexpr ArrowId kNoArrow = -1;

// A finite groupoid given by its structure tables. Arrows are 0..m-1 and each
// unit is its own identity arrow. comp(a, b) is defined exactly when
// src(a) == rng(b) and is read right to left: first b, then a.
//
// The tables are stored verbatim; call validate() before relying on the
// groupoid axioms. Every other operation in the library assumes a valid
// groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<bool> is_unit, std::vector<ArrowId> src, std::vector<ArrowId> rng,
                 std::vector<ArrowId> comp, std::vector<ArrowId> inv);

  std::size_t size() const { return src_.size(); }
  std::size_t unit_count() const { return units_.size(); }

  bool is_unit(ArrowId a) const { return is_unit_[static_cast<std::size_t>(a)]; }
  const std::vector<ArrowId>& units() const { return units_; }
  // Position of a unit in units(), or -1.
  int unit_index(ArrowId u) const { return unit_index_[static_cast<std::size_t>(u)]; }

  ArrowId src(ArrowId a) const { return src_[static_cast<std::size_t>(a)]; }
  ArrowId rng(ArrowId a) const { return rng_[static_cast<std::size_t>(a)]; }
  ArrowId inv(ArrowId a) const { return inv_[static_cast<std::size_t>(a)]; }
  // kNoArrow when the table has no entry.
  ArrowId comp(ArrowId a, ArrowId b) const {
    return comp_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  bool composable(ArrowId a, ArrowId b) const { return src(a) == rng(b); }

  // Arrows with the given range (resp. source) unit, in increasing order.
  const std::vector<ArrowId>& range_fiber(ArrowId u) const;
  const std::vector<ArrowId>& source_fiber(ArrowId u) const;

  bool contains(ArrowId a) const { return a >= 0 && static_cast<std::size_t>(a) < size(); }

  bool operator==(const FiniteGroupoid& other) const;

 private:
  std::vector<bool> is_unit_;
  std::vector<ArrowId> units_;
  std::vector<int> unit_index_;
  std::vector<ArrowId> src_, rng_, comp_, inv_;
  std::vector<std::vector<ArrowId>> range_fibers_, source_fibers_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every groupoid axiom exhaustively. At most `max_per_kind`
// violations of each kind are listed.
ValidationReport validate(const FiniteGroupoid& g, std::size_t max_per_kind = 8);

// Transitivity classes of units, each sorted, ordered by least unit.
std::vector<std::vector<ArrowId>> orbits(const FiniteGroupoid& g);

// No non-unit arrow has src == rng. For a finite discrete groupoid the
// interior of the isotropy is the isotropy itself, so effective and
// principal agree.
bool is_effective(const FiniteGroupoid& g);

struct IsotropyGroup {
  ArrowId base = kNoArrow;            // least unit of the orbit
  std::vector<ArrowId> orbit;         // units of the orbit
  std::vector<ArrowId> elements;      // arrows from base to base, increasing
  // table[i][j] = index of elements[i] * elements[j]
  std::vector<std::vector<int>> table;
  int identity = 0;                   // index of base in elements
};

struct IsotropySummary {
  std::vector<std::vector<ArrowId>> per_unit;  // indexed like units()
  std::vector<IsotropyGroup> per_orbit;
};

IsotropySummary isotropy(const FiniteGroupoid& g);

}  // namespace ample
