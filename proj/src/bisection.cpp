#include "ample/bisection.hpp"

#include <algorithm>
#include <sstream>

#include "ample/errors.hpp"

namespace ample {

bool is_bisection(const FiniteGroupoid& g, const std::vector<ArrowId>& arrows) {
  std::vector<bool> seen_src(g.size(), false), seen_rng(g.size(), false);
  for (ArrowId a : arrows) {
    auto s = static_cast<std::size_t>(g.src(a));
    auto r = static_cast<std::size_t>(g.rng(a));
    if (seen_src[s] || seen_rng[r]) return false;
    seen_src[s] = seen_rng[r] = true;
  }
  return true;
}

Bisection Bisection::from_arrows(const FiniteGroupoid& g, std::vector<ArrowId> arrows) {
  for (ArrowId a : arrows) {
    if (!g.contains(a)) throw GroupoidMismatch("arrow " + std::to_string(a) + " not in groupoid");
  }
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  if (!is_bisection(g, arrows)) {
    throw NotABisection(format_arrows(arrows) + " is not a bisection");
  }
  return Bisection(std::move(arrows));
}

Bisection Bisection::units(const FiniteGroupoid& g) { return Bisection(g.units()); }

bool Bisection::contains(ArrowId a) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), a);
}

std::string format_arrows(const std::vector<ArrowId>& arrows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) os << ",";
    os << arrows[i];
  }
  os << "]";
  return os.str();
}

std::string Bisection::str() const { return format_arrows(arrows_); }

namespace {

void check_members(const FiniteGroupoid& g, const Bisection& b) {
  for (ArrowId a : b.arrows()) {
    if (!g.contains(a)) throw GroupoidMismatch("bisection " + b.str() + " not over this groupoid");
  }
}

}  // namespace

Bisection multiply(const FiniteGroupoid& g, const Bisection& a, const Bisection& b) {
  check_members(g, a);
  check_members(g, b);
  // rng is injective on b, so each x in a meets at most one y in b.
  std::vector<ArrowId> by_range(g.size(), kNoArrow);
  for (ArrowId y : b.arrows()) by_range[static_cast<std::size_t>(g.rng(y))] = y;
  std::vector<ArrowId> out;
  for (ArrowId x : a.arrows()) {
    ArrowId y = by_range[static_cast<std::size_t>(g.src(x))];
    if (y != kNoArrow) out.push_back(g.comp(x, y));
  }
  std::sort(out.begin(), out.end());
  return Bisection(std::move(out));
}

Bisection inverse(const FiniteGroupoid& g, const Bisection& a) {
  check_members(g, a);
  std::vector<ArrowId> out;
  out.reserve(a.size());
  for (ArrowId x : a.arrows()) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  return Bisection(std::move(out));
}

Bisection source_set(const FiniteGroupoid& g, const Bisection& a) {
  std::vector<ArrowId> out;
  for (ArrowId x : a.arrows()) out.push_back(g.src(x));
  std::sort(out.begin(), out.end());
  return Bisection(std::move(out));
}

Bisection range_set(const FiniteGroupoid& g, const Bisection& a) {
  std::vector<ArrowId> out;
  for (ArrowId x : a.arrows()) out.push_back(g.rng(x));
  std::sort(out.begin(), out.end());
  return Bisection(std::move(out));
}

bool leq(const FiniteGroupoid& g, const Bisection& a, const Bisection& b) {
  return a == multiply(g, b, multiply(g, inverse(g, a), a));
}

bool is_subset(const Bisection& a, const Bisection& b) {
  return std::includes(b.arrows().begin(), b.arrows().end(), a.arrows().begin(), a.arrows().end());
}

bool is_full(const FiniteGroupoid& g, const Bisection& b) {
  return b.size() == g.unit_count();
}

UnitPermutation rho(const FiniteGroupoid& g, const Bisection& b) {
  if (!is_full(g, b)) throw NotFullBisection(b.str() + " is not a full bisection");
  UnitPermutation p(g.unit_count(), -1);
  for (ArrowId x : b.arrows()) {
    p[static_cast<std::size_t>(g.unit_index(g.src(x)))] = g.unit_index(g.rng(x));
  }
  return p;
}

UnitPermutation compose(const UnitPermutation& outer, const UnitPermutation& inner) {
  UnitPermutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  }
  return out;
}

UnitPermutation inverse(const UnitPermutation& p) {
  UnitPermutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

std::vector<Bisection> full_group(const FiniteGroupoid& g, std::size_t limit) {
  const auto& units = g.units();
  const std::size_t k = units.size();
  std::vector<Bisection> out;
  std::vector<ArrowId> chosen;
  std::vector<bool> range_used(g.size(), false);
  chosen.reserve(k);

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (out.size() >= limit) {
        throw SizeLimitExceeded("full group has more than " + std::to_string(limit) + " elements");
      }
      std::vector<ArrowId> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(Bisection::from_arrows(g, std::move(sorted)));
      return;
    }
    for (ArrowId x : g.source_fiber(units[i])) {
      auto r = static_cast<std::size_t>(g.rng(x));
      if (range_used[r]) continue;
      range_used[r] = true;
      chosen.push_back(x);
      self(self, i + 1);
      chosen.pop_back();
      range_used[r] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bisection> all_bisections(const FiniteGroupoid& g, std::size_t limit) {
  // Choose for each unit (as a source) either nothing or one arrow out of it.
  const auto& units = g.units();
  std::vector<Bisection> out;
  std::vector<ArrowId> chosen;
  std::vector<bool> range_used(g.size(), false);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == units.size()) {
      if (out.size() >= limit) {
        throw SizeLimitExceeded("more than " + std::to_string(limit) + " bisections");
      }
      out.push_back(Bisection::from_arrows(g, chosen));
      return;
    }
    self(self, i + 1);
    for (ArrowId x : g.source_fiber(units[i])) {
      auto r = static_cast<std::size_t>(g.rng(x));
      if (range_used[r]) continue;
      range_used[r] = true;
      chosen.push_back(x);
      self(self, i + 1);
      chosen.pop_back();
      range_used[r] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Bisection maximal_bisection_containing(const FiniteGroupoid& g, ArrowId x) {
  std::vector<bool> src_used(g.size(), false), rng_used(g.size(), false);
  std::vector<ArrowId> arrows{x};
  src_used[static_cast<std::size_t>(g.src(x))] = true;
  rng_used[static_cast<std::size_t>(g.rng(x))] = true;
  for (std::size_t a = 0; a < g.size(); ++a) {
    auto y = static_cast<ArrowId>(a);
    auto s = static_cast<std::size_t>(g.src(y));
    auto r = static_cast<std::size_t>(g.rng(y));
    if (src_used[s] || rng_used[r]) continue;
    src_used[s] = rng_used[r] = true;
    arrows.push_back(y);
  }
  return Bisection::from_arrows(g, std::move(arrows));
}

}  // namespace ample
