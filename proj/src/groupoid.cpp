#include "ample/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ample/errors.hpp"

namespace ample {

FiniteGroupoid::FiniteGroupoid(std::vector<bool> is_unit, std::vector<ArrowId> src,
                               std::vector<ArrowId> rng, std::vector<ArrowId> comp,
                               std::vector<ArrowId> inv)
    : is_unit_(std::move(is_unit)),
      src_(std::move(src)),
      rng_(std::move(rng)),
      comp_(std::move(comp)),
      inv_(std::move(inv)) {
  const std::size_t m = src_.size();
  if (is_unit_.size() != m || rng_.size() != m || inv_.size() != m || comp_.size() != m * m) {
    throw MalformedTable("structure tables disagree on the number of arrows");
  }
  auto in_range = [m](ArrowId a) { return a >= 0 && static_cast<std::size_t>(a) < m; };
  for (std::size_t a = 0; a < m; ++a) {
    if (!in_range(src_[a]) || !in_range(rng_[a]) || !in_range(inv_[a])) {
      throw MalformedTable("arrow id out of range in tables of arrow " + std::to_string(a));
    }
  }
  for (ArrowId c : comp_) {
    if (c != kNoArrow && !in_range(c)) throw MalformedTable("composition entry out of range");
  }
  unit_index_.assign(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    if (is_unit_[a]) {
      unit_index_[a] = static_cast<int>(units_.size());
      units_.push_back(static_cast<ArrowId>(a));
    }
  }
  range_fibers_.resize(m);
  source_fibers_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    range_fibers_[static_cast<std::size_t>(rng_[a])].push_back(static_cast<ArrowId>(a));
    source_fibers_[static_cast<std::size_t>(src_[a])].push_back(static_cast<ArrowId>(a));
  }
}

const std::vector<ArrowId>& FiniteGroupoid::range_fiber(ArrowId u) const {
  return range_fibers_[static_cast<std::size_t>(u)];
}

const std::vector<ArrowId>& FiniteGroupoid::source_fiber(ArrowId u) const {
  return source_fibers_[static_cast<std::size_t>(u)];
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const {
  return is_unit_ == other.is_unit_ && src_ == other.src_ && rng_ == other.rng_ &&
         comp_ == other.comp_ && inv_ == other.inv_;
}

namespace {

class ViolationLog {
 public:
  ViolationLog(ValidationReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void add(const std::string& kind, const std::string& message) {
    auto& n = counts_[kind];
    if (n++ < cap_) report_.violations.push_back(message);
  }

 private:
  ValidationReport& report_;
  std::size_t cap_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace

ValidationReport validate(const FiniteGroupoid& g, std::size_t max_per_kind) {
  ValidationReport report;
  ViolationLog log(report, max_per_kind);
  const auto m = static_cast<ArrowId>(g.size());
  if (g.unit_count() == 0) {
    log.add("empty", "unit space is empty");
    return report;
  }
  for (ArrowId u : g.units()) {
    if (g.src(u) != u || g.rng(u) != u) {
      log.add("unit", "unit law at " + std::to_string(u));
    }
  }
  bool endpoints_ok = true;
  for (ArrowId a = 0; a < m; ++a) {
    if (!g.is_unit(g.src(a)) || !g.is_unit(g.rng(a))) {
      log.add("endpoint", "source or range of " + std::to_string(a) + " is not a unit");
      endpoints_ok = false;
    }
  }
  if (!endpoints_ok) return report;

  for (ArrowId a = 0; a < m; ++a) {
    for (ArrowId b = 0; b < m; ++b) {
      const ArrowId c = g.comp(a, b);
      const bool should = g.composable(a, b);
      if (should && c == kNoArrow) {
        log.add("domain", "composition undefined at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
      } else if (!should && c != kNoArrow) {
        log.add("domain", "composition defined at non-composable (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
      } else if (should && (g.src(c) != g.src(b) || g.rng(c) != g.rng(a))) {
        log.add("endpoints", "source/range of composite at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      }
    }
  }
  for (ArrowId a = 0; a < m; ++a) {
    if (g.comp(a, g.src(a)) != a || g.comp(g.rng(a), a) != a) {
      log.add("identity", "identity law at " + std::to_string(a));
    }
  }
  for (ArrowId a = 0; a < m; ++a) {
    const ArrowId i = g.inv(a);
    if (g.comp(i, a) != g.src(a) || g.comp(a, i) != g.rng(a) || g.inv(i) != a) {
      log.add("inverse", "inverse law at " + std::to_string(a));
    }
  }
  for (ArrowId a = 0; a < m; ++a) {
    for (ArrowId b : g.range_fiber(g.src(a))) {
      const ArrowId ab = g.comp(a, b);
      if (ab == kNoArrow) continue;
      for (ArrowId c : g.range_fiber(g.src(b))) {
        const ArrowId bc = g.comp(b, c);
        if (bc == kNoArrow) continue;
        const ArrowId left = g.comp(ab, c);
        const ArrowId right = g.comp(a, bc);
        if (left != right) {
          log.add("assoc", "associativity at (" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return report;
}

std::vector<std::vector<ArrowId>> orbits(const FiniteGroupoid& g) {
  const std::size_t m = g.size();
  std::vector<ArrowId> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ArrowId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  for (std::size_t a = 0; a < m; ++a) {
    ArrowId s = find(g.src(static_cast<ArrowId>(a)));
    ArrowId r = find(g.rng(static_cast<ArrowId>(a)));
    if (s != r) parent[static_cast<std::size_t>(std::max(s, r))] = std::min(s, r);
  }
  std::map<ArrowId, std::vector<ArrowId>> blocks;
  for (ArrowId u : g.units()) blocks[find(u)].push_back(u);
  std::vector<std::vector<ArrowId>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_effective(const FiniteGroupoid& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto x = static_cast<ArrowId>(a);
    if (!g.is_unit(x) && g.src(x) == g.rng(x)) return false;
  }
  return true;
}

IsotropySummary isotropy(const FiniteGroupoid& g) {
  IsotropySummary out;
  out.per_unit.resize(g.unit_count());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto x = static_cast<ArrowId>(a);
    if (g.src(x) == g.rng(x)) out.per_unit[static_cast<std::size_t>(g.unit_index(g.src(x)))].push_back(x);
  }
  for (auto& orbit : orbits(g)) {
    IsotropyGroup group;
    group.base = orbit.front();
    group.orbit = orbit;
    group.elements = out.per_unit[static_cast<std::size_t>(g.unit_index(group.base))];
    const std::size_t n = group.elements.size();
    std::map<ArrowId, int> index;
    for (std::size_t i = 0; i < n; ++i) index[group.elements[i]] = static_cast<int>(i);
    group.identity = index.at(group.base);
    group.table.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        group.table[i][j] = index.at(g.comp(group.elements[i], group.elements[j]));
      }
    }
    out.per_orbit.push_back(std::move(group));
  }
  return out;
}

}  // namespace ample
