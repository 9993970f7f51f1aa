#include "ample/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace ample {

bool is_automorphism(const FiniteGroupoid& g, const GroupoidAut& theta) {
  const std::size_t m = g.size();
  if (theta.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (ArrowId y : theta) {
    if (!g.contains(y) || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  auto t = [&](ArrowId x) { return theta[static_cast<std::size_t>(x)]; };
  for (std::size_t i = 0; i < m; ++i) {
    const auto x = static_cast<ArrowId>(i);
    if (g.is_unit(x) != g.is_unit(t(x))) return false;
    if (t(g.src(x)) != g.src(t(x)) || t(g.rng(x)) != g.rng(t(x))) return false;
    if (t(g.inv(x)) != g.inv(t(x))) return false;
    for (ArrowId b : g.range_fiber(g.src(x))) {
      if (t(g.comp(x, b)) != g.comp(t(x), t(b))) return false;
    }
  }
  return true;
}

GroupoidAut identity_aut(const FiniteGroupoid& g) {
  GroupoidAut out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<ArrowId>(i);
  return out;
}

UnitPermutation on_units(const FiniteGroupoid& g, const GroupoidAut& theta) {
  UnitPermutation p(g.unit_count());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = g.unit_index(theta[static_cast<std::size_t>(g.units()[i])]);
  }
  return p;
}

Bisection image(const FiniteGroupoid& g, const GroupoidAut& theta, const Bisection& b) {
  std::vector<ArrowId> out;
  for (ArrowId x : b.arrows()) out.push_back(theta[static_cast<std::size_t>(x)]);
  return Bisection::from_arrows(g, std::move(out));
}

std::string format_aut(const GroupoidAut& theta) { return format_arrows(theta); }

namespace {

// Isomorphism invariants used to prune candidate images.
struct Invariants {
  std::vector<std::tuple<int, int, int, int>> arrow;  // unit?, loop?, loop order, hom-set size

  explicit Invariants(const FiniteGroupoid& g) {
    const std::size_t m = g.size();
    std::map<std::pair<ArrowId, ArrowId>, int> hom;
    for (std::size_t i = 0; i < m; ++i) {
      const auto x = static_cast<ArrowId>(i);
      ++hom[{g.src(x), g.rng(x)}];
    }
    std::vector<int> orbit_size(m, 0), iso_size(m, 0);
    for (const auto& orbit : orbits(g)) {
      for (ArrowId u : orbit) orbit_size[static_cast<std::size_t>(u)] = static_cast<int>(orbit.size());
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto x = static_cast<ArrowId>(i);
      const bool loop = g.src(x) == g.rng(x);
      int order = 0;
      if (loop) {
        ArrowId p = x;
        order = 1;
        while (p != g.src(x)) {
          p = g.comp(p, x);
          ++order;
        }
      }
      // For units, fold in the orbit size; for loops, the hom-set is the isotropy.
      const int size = hom.at({g.src(x), g.rng(x)}) * 1000 + orbit_size[static_cast<std::size_t>(g.src(x))];
      arrow.emplace_back(g.is_unit(x), loop, order, size);
    }
  }
};

class AutSearch {
 public:
  AutSearch(const FiniteGroupoid& g, std::size_t limit)
      : g_(g), limit_(limit), inv_(g), theta_(g.size(), kNoArrow), used_(g.size(), false) {
    // Units first, then the other arrows by id.
    for (ArrowId u : g.units()) order_.push_back(u);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g.is_unit(static_cast<ArrowId>(i))) order_.push_back(static_cast<ArrowId>(i));
    }
  }

  std::vector<GroupoidAut> run() {
    search(0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void search(std::size_t k) {
    while (k < order_.size() && theta_[static_cast<std::size_t>(order_[k])] != kNoArrow) ++k;
    if (k == order_.size()) {
      if (out_.size() >= limit_) {
        throw SizeLimitExceeded("automorphism group has more than " + std::to_string(limit_) +
                                " elements");
      }
      out_.push_back(theta_);
      return;
    }
    const ArrowId x = order_[k];
    for (std::size_t j = 0; j < g_.size(); ++j) {
      const auto y = static_cast<ArrowId>(j);
      if (used_[j] || inv_.arrow[j] != inv_.arrow[static_cast<std::size_t>(x)]) continue;
      if (!g_.is_unit(x)) {
        if (theta_[static_cast<std::size_t>(g_.src(x))] != g_.src(y)) continue;
        if (theta_[static_cast<std::size_t>(g_.rng(x))] != g_.rng(y)) continue;
      }
      auto saved_theta = theta_;
      auto saved_used = used_;
      if (assign(x, y)) search(k + 1);
      theta_ = std::move(saved_theta);
      used_ = std::move(saved_used);
    }
  }

  bool set(ArrowId x, ArrowId y, std::vector<ArrowId>& work) {
    auto& cur = theta_[static_cast<std::size_t>(x)];
    if (cur != kNoArrow) return cur == y;
    if (used_[static_cast<std::size_t>(y)]) return false;
    if (inv_.arrow[static_cast<std::size_t>(x)] != inv_.arrow[static_cast<std::size_t>(y)]) return false;
    cur = y;
    used_[static_cast<std::size_t>(y)] = true;
    work.push_back(x);
    return true;
  }

  // Assign x -> y and close under comp and inv against every assigned arrow.
  bool assign(ArrowId x, ArrowId y) {
    std::vector<ArrowId> work;
    if (!set(x, y, work)) return false;
    auto t = [&](ArrowId a) { return theta_[static_cast<std::size_t>(a)]; };
    while (!work.empty()) {
      const ArrowId a = work.back();
      work.pop_back();
      const ArrowId ta = t(a);
      if (t(g_.src(a)) != kNoArrow && t(g_.src(a)) != g_.src(ta)) return false;
      if (t(g_.rng(a)) != kNoArrow && t(g_.rng(a)) != g_.rng(ta)) return false;
      if (g_.is_unit(a)) {
        if (!set(a, ta, work)) return false;
        continue;
      }
      if (!set(g_.src(a), g_.src(ta), work) || !set(g_.rng(a), g_.rng(ta), work)) return false;
      if (!set(g_.inv(a), g_.inv(ta), work)) return false;
      // a b for assigned b with r(b) = s(a), and b a for assigned b with s(b) = r(a).
      for (ArrowId b : g_.range_fiber(g_.src(a))) {
        if (t(b) == kNoArrow) continue;
        if (g_.src(ta) != g_.rng(t(b))) return false;
        if (!set(g_.comp(a, b), g_.comp(ta, t(b)), work)) return false;
      }
      for (ArrowId b : g_.source_fiber(g_.rng(a))) {
        if (t(b) == kNoArrow) continue;
        if (g_.src(t(b)) != g_.rng(ta)) return false;
        if (!set(g_.comp(b, a), g_.comp(t(b), ta), work)) return false;
      }
    }
    return true;
  }

  const FiniteGroupoid& g_;
  std::size_t limit_;
  Invariants inv_;
  GroupoidAut theta_;
  std::vector<bool> used_;
  std::vector<ArrowId> order_;
  std::vector<GroupoidAut> out_;
};

}  // namespace

std::vector<GroupoidAut> aut_group(const FiniteGroupoid& g, std::size_t limit) {
  return AutSearch(g, limit).run();
}

GroupoidAut ad(const FiniteGroupoid& g, const Bisection& b) {
  if (!is_full(g, b)) throw NotFullBisection(b.str() + " is not a full bisection");
  std::vector<ArrowId> by_source(g.size(), kNoArrow);
  for (ArrowId y : b.arrows()) by_source[static_cast<std::size_t>(g.src(y))] = y;
  GroupoidAut out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = static_cast<ArrowId>(i);
    const ArrowId left = by_source[static_cast<std::size_t>(g.rng(x))];
    const ArrowId right = g.inv(by_source[static_cast<std::size_t>(g.src(x))]);
    out[i] = g.comp(left, g.comp(x, right));
  }
  return out;
}

ExactMap identity_map(const FiniteGroupoid& g) {
  const auto m = static_cast<Eigen::Index>(g.size());
  ExactMap out = ExactMap::Constant(m, m, Cyclotomic(0));
  for (Eigen::Index i = 0; i < m; ++i) out(i, i) = Cyclotomic(1);
  return out;
}

ExactMap compose(const ExactMap& a, const ExactMap& b) {
  ExactMap out = ExactMap::Constant(a.rows(), b.cols(), Cyclotomic(0));
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      if (b(k, j).is_zero()) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (!a(i, k).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

ExactElement apply(const ExactMap& alpha, const ExactElement& a) {
  ExactElement out = ExactElement::zero(a.groupoid);
  for (Eigen::Index k = 0; k < a.coeffs.size(); ++k) {
    if (a.coeffs[k].is_zero()) continue;
    for (Eigen::Index i = 0; i < alpha.rows(); ++i) {
      if (!alpha(i, k).is_zero()) out.coeffs[i] += alpha(i, k) * a.coeffs[k];
    }
  }
  return out;
}

ExactMap gamma(const FiniteGroupoid& g, const Cocycle& xi) {
  CocycleCheck check = is_cocycle(g, xi);
  if (!check.ok) {
    throw NotACocycle("multiplicativity fails at (" + std::to_string(check.witness->first) + "," +
                      std::to_string(check.witness->second) + ")");
  }
  const auto m = static_cast<Eigen::Index>(g.size());
  ExactMap out = ExactMap::Constant(m, m, Cyclotomic(0));
  for (Eigen::Index i = 0; i < m; ++i) {
    out(i, i) = Cyclotomic::root_of_unity(xi[static_cast<std::size_t>(i)]);
  }
  return out;
}

ExactMap lift(const FiniteGroupoid& g, const GroupoidAut& theta) {
  const auto m = static_cast<Eigen::Index>(g.size());
  ExactMap out = ExactMap::Constant(m, m, Cyclotomic(0));
  for (Eigen::Index z = 0; z < m; ++z) out(theta[static_cast<std::size_t>(z)], z) = Cyclotomic(1);
  return out;
}

ExactMap inner(const GroupoidPtr& g, const LampertiElement& u) {
  const ExactElement v = to_element<Cyclotomic>(g, u);
  const ExactElement v_inv = to_element<Cyclotomic>(g, inverse_lamperti(*g, u));
  const auto m = static_cast<Eigen::Index>(g->size());
  ExactMap out(m, m);
  for (Eigen::Index z = 0; z < m; ++z) {
    ExactElement delta = ExactElement::zero(g);
    delta.coeffs[z] = Cyclotomic(1);
    out.col(z) = (v_inv * delta * v).coeffs;
  }
  return out;
}

UnitPermutation upsilon(const FiniteGroupoid& g, const ExactMap& alpha) {
  UnitPermutation p(g.unit_count(), -1);
  std::vector<bool> hit(g.unit_count(), false);
  for (std::size_t i = 0; i < g.unit_count(); ++i) {
    const ArrowId w = g.units()[i];
    ArrowId target = kNoArrow;
    bool ok = true;
    for (Eigen::Index r = 0; r < alpha.rows() && ok; ++r) {
      const Cyclotomic& c = alpha(r, w);
      if (c.is_zero()) continue;
      if (target != kNoArrow || !g.is_unit(static_cast<ArrowId>(r)) || c != Cyclotomic(1)) {
        ok = false;
      } else {
        target = static_cast<ArrowId>(r);
      }
    }
    if (!ok || target == kNoArrow || hit[static_cast<std::size_t>(g.unit_index(target))]) {
      throw DiagonalNotPreserved("image of the indicator of unit " + std::to_string(w) +
                                 " is not the indicator of a unit");
    }
    hit[static_cast<std::size_t>(g.unit_index(target))] = true;
    p[i] = g.unit_index(target);
  }
  return p;
}

Bisection phi(const GroupoidPtr& g, const ExactMap& alpha, const Bisection& b) {
  ExactElement img = apply(alpha, indicator<Cyclotomic>(g, b));
  try {
    return decompose_partial_isometry(img).bisection;
  } catch (const NotABisection& e) {
    throw NotSpatial("image of 1_" + b.str() + ": " + e.what());
  } catch (const NotCircleValued& e) {
    throw NotSpatial("image of 1_" + b.str() + ": " + e.what());
  }
}

GroupoidAut omega(const GroupoidPtr& gp, const ExactMap& alpha) {
  const FiniteGroupoid& g = *gp;
  const UnitPermutation ups = upsilon(g, alpha);
  GroupoidAut out(g.size(), kNoArrow);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = static_cast<ArrowId>(i);
    const ArrowId target_range =
        g.units()[static_cast<std::size_t>(ups[static_cast<std::size_t>(g.unit_index(g.rng(x)))])];
    const Bisection choices[] = {Bisection::from_arrows(g, {x}),
                                 maximal_bisection_containing(g, x)};
    for (const Bisection& b : choices) {
      ArrowId found = kNoArrow;
      const Bisection image_b = phi(gp, alpha, b);
      for (ArrowId y : image_b.arrows()) {
        if (g.rng(y) == target_range) found = y;
      }
      if (found == kNoArrow) {
        throw NotWellDefined("Phi(" + b.str() + ") has no arrow with range " +
                             std::to_string(target_range) + " (arrow " + std::to_string(x) + ")");
      }
      if (out[i] != kNoArrow && out[i] != found) {
        throw NotWellDefined("arrow " + std::to_string(x) + " maps to " + std::to_string(out[i]) +
                             " via {" + std::to_string(x) + "} but to " + std::to_string(found) +
                             " via " + b.str());
      }
      out[i] = found;
    }
  }
  if (!is_automorphism(g, out)) {
    throw NotAutomorphism("Omega image " + format_aut(out) + " is not a groupoid automorphism");
  }
  return out;
}

AutDecomposition decompose_aut(const GroupoidPtr& gp, const ExactMap& alpha) {
  const FiniteGroupoid& g = *gp;
  AutDecomposition out;
  try {
    out.theta = omega(gp, alpha);
  } catch (const Error& e) {
    throw NotAutomorphism(std::string("no groupoid automorphism underlies the map: ") + e.what());
  }
  // beta = alpha o lift(theta)^-1 is diagonal with the cocycle on it.
  const ExactMap beta = compose(alpha, lift(g, inverse(out.theta)));
  out.xi.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = static_cast<Eigen::Index>(i);
    auto angle = beta(x, x).as_root_of_unity();
    if (!angle) {
      throw NotAutomorphism("coefficient at arrow " + std::to_string(i) + " of the image of its " +
                            "indicator is " + beta(x, x).str() + ", not in the circle");
    }
    out.xi[i] = *angle;
  }
  ExactMap rebuilt;
  try {
    rebuilt = compose(gamma(g, out.xi), lift(g, out.theta));
  } catch (const NotACocycle& e) {
    throw NotAutomorphism(std::string("extracted phases are not a cocycle: ") + e.what());
  }
  for (Eigen::Index z = 0; z < alpha.cols(); ++z) {
    for (Eigen::Index r = 0; r < alpha.rows(); ++r) {
      if (rebuilt(r, z) != alpha(r, z)) {
        throw NotAutomorphism("reconstruction differs on delta_" + std::to_string(z));
      }
    }
  }
  return out;
}

MapCheck validate_linear_map(const GroupoidPtr& gp, const ExactMap& alpha) {
  const FiniteGroupoid& g = *gp;
  const auto m = static_cast<Eigen::Index>(g.size());
  if (alpha.rows() != m || alpha.cols() != m) {
    return {false, "map has shape " + std::to_string(alpha.rows()) + "x" +
                       std::to_string(alpha.cols()) + ", expected " + std::to_string(m) + "x" +
                       std::to_string(m)};
  }
  ExactElement unit = indicator<Cyclotomic>(gp, Bisection::units(g));
  if (!(apply(alpha, unit) == unit)) return {false, "not unital"};
  try {
    upsilon(g, alpha);
  } catch (const DiagonalNotPreserved& e) {
    return {false, e.what()};
  }
  std::vector<ExactElement> images;
  for (Eigen::Index z = 0; z < m; ++z) images.push_back({gp, alpha.col(z)});
  for (Eigen::Index x = 0; x < m; ++x) {
    for (Eigen::Index y = 0; y < m; ++y) {
      ExactElement lhs = ExactElement::zero(gp);
      if (g.composable(static_cast<ArrowId>(x), static_cast<ArrowId>(y))) {
        lhs = images[static_cast<std::size_t>(g.comp(static_cast<ArrowId>(x), static_cast<ArrowId>(y)))];
      }
      if (!(lhs == images[static_cast<std::size_t>(x)] * images[static_cast<std::size_t>(y)])) {
        return {false, "not multiplicative at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
      }
    }
  }
  return {};
}

std::optional<LampertiElement> inner_witness(const GroupoidPtr& gp, const CocycleGroup& z,
                                             const std::vector<Bisection>& full,
                                             const ExactMap& alpha) {
  const FiniteGroupoid& g = *gp;
  AutDecomposition d = decompose_aut(gp, alpha);
  auto h = is_coboundary(g, z, d.xi);
  if (!h) return std::nullopt;
  for (const Bisection& c : full) {
    if (ad(g, inverse(g, c)) != d.theta) continue;
    // inner(f 1_C) = gamma((f o rho_C)^) o lift(ad(C^-1)), so f = h o rho_C^-1.
    return LampertiElement{precompose(g, *h, inverse(rho(g, c))), c};
  }
  return std::nullopt;
}

}  // namespace ample
