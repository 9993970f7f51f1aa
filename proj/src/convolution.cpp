#include "ample/convolution.hpp"

#include <sstream>

namespace ample {

CircleFunction constant_circle_function(const std::vector<ArrowId>& domain, Angle value) {
  CircleFunction f;
  for (ArrowId u : domain) f[u] = value;
  return f;
}

std::string format_circle_function(const CircleFunction& f) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [u, t] : f) {
    if (!first) os << ",";
    first = false;
    os << u << ":" << t.str();
  }
  os << "]";
  return os.str();
}

FloatElement to_float(const ExactElement& a) {
  FloatElement out{a.groupoid, Coefficients<std::complex<double>>(a.coeffs.size())};
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i].to_complex();
  return out;
}

LampertiElement decompose_partial_isometry(const ExactElement& a) {
  const FiniteGroupoid& g = *a.groupoid;
  std::vector<ArrowId> supp = support(a);
  if (!is_bisection(g, supp)) {
    throw NotABisection("support " + format_arrows(supp) + " of element is not a bisection");
  }
  LampertiElement out;
  out.bisection = Bisection::from_arrows(g, supp);
  for (ArrowId x : supp) {
    auto angle = a[x].as_root_of_unity();
    if (!angle) {
      throw NotCircleValued("coefficient " + a[x].str() + " at arrow " + std::to_string(x) +
                            " is not a root of unity");
    }
    out.phase[g.rng(x)] = *angle;
  }
  return out;
}

LampertiElement decompose_isometry(const ExactElement& a) {
  const FiniteGroupoid& g = *a.groupoid;
  std::vector<ArrowId> supp = support(a);
  if (!is_bisection(g, supp) || supp.size() != g.unit_count()) {
    throw NotFullBisection("support " + format_arrows(supp) + " is not a full bisection");
  }
  return decompose_partial_isometry(a);
}

LampertiElement compose_lamperti(const FiniteGroupoid& g, const LampertiElement& u,
                                 const LampertiElement& v) {
  LampertiElement out;
  out.bisection = multiply(g, u.bisection, v.bisection);
  // Each x in AB factors uniquely as a b; r(x) = r(a) and rho_A^-1(r(a)) = s(a) = r(b).
  std::vector<ArrowId> by_range(g.size(), kNoArrow);
  for (ArrowId b : v.bisection.arrows()) by_range[static_cast<std::size_t>(g.rng(b))] = b;
  for (ArrowId a : u.bisection.arrows()) {
    if (by_range[static_cast<std::size_t>(g.src(a))] == kNoArrow) continue;
    auto fu = u.phase.find(g.rng(a));
    auto gv = v.phase.find(g.src(a));
    if (fu == u.phase.end() || gv == v.phase.end()) {
      throw PartialFunction("phase missing on the range of a factor");
    }
    out.phase[g.rng(a)] = fu->second + gv->second;
  }
  return out;
}

LampertiElement inverse_lamperti(const FiniteGroupoid& g, const LampertiElement& u) {
  UnitPermutation r = rho(g, u.bisection);
  return {precompose(g, conjugate(u.phase), r), inverse(g, u.bisection)};
}

LampertiElement identity_lamperti(const FiniteGroupoid& g) {
  return {constant_circle_function(g.units()), Bisection::units(g)};
}

Bisection pi0_class(const FiniteGroupoid& g, const LampertiElement& u) {
  if (!is_full(g, u.bisection)) {
    throw NotFullBisection(u.bisection.str() + " is not a full bisection");
  }
  return u.bisection;
}

CircleFunction multiply(const CircleFunction& f, const CircleFunction& h) {
  CircleFunction out;
  for (const auto& [u, t] : f) {
    auto it = h.find(u);
    if (it != h.end()) out[u] = t + it->second;
  }
  return out;
}

CircleFunction conjugate(const CircleFunction& f) {
  CircleFunction out;
  for (const auto& [u, t] : f) out[u] = -t;
  return out;
}

CircleFunction precompose(const FiniteGroupoid& g, const CircleFunction& f,
                          const UnitPermutation& p) {
  CircleFunction out;
  const auto& units = g.units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    auto it = f.find(units[static_cast<std::size_t>(p[i])]);
    if (it != f.end()) out[units[i]] = it->second;
  }
  return out;
}

std::string format_element(const ExactElement& a) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    if (!first) os << ",";
    first = false;
    os << i << ":" << a.coeffs[i].str();
  }
  os << "}";
  return os.str();
}

}  // namespace ample
