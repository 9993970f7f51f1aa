#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ample/bisection.hpp"
#include "ample/errors.hpp"
#include "ample/groupoid.hpp"
#include "ample/scalar.hpp"

namespace ample {

template <typename Scalar>
using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Finitely supported function on the arrows of a groupoid: an element of
// the convolution algebra C_c(G). Scalar is Cyclotomic (exact) or
// std::complex<double> (floating).
template <typename Scalar>
struct Element {
  GroupoidPtr groupoid;
  Coefficients<Scalar> coeffs;

  static Element zero(GroupoidPtr g) {
    Element e{std::move(g), {}};
    e.coeffs = Coefficients<Scalar>::Constant(static_cast<Eigen::Index>(e.groupoid->size()),
                                              Scalar(0));
    return e;
  }

  const Scalar& operator[](ArrowId a) const { return coeffs[a]; }
  Scalar& operator[](ArrowId a) { return coeffs[a]; }

  bool operator==(const Element& other) const {
    return same_groupoid(*groupoid, *other.groupoid) && coeffs == other.coeffs;
  }

  static bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return &a == &b || a == b;
  }
};

using ExactElement = Element<Cyclotomic>;
using FloatElement = Element<std::complex<double>>;

// Unit-space function into the circle with an explicit domain. Keys are unit
// arrow ids.
using CircleFunction = std::map<ArrowId, Angle>;

CircleFunction constant_circle_function(const std::vector<ArrowId>& domain, Angle value = {});
std::string format_circle_function(const CircleFunction& f);

// The spatial partial isometry f * 1_B, with f defined on r(B). Full when B
// is a full bisection; then it is an invertible isometry.
struct LampertiElement {
  CircleFunction phase;
  Bisection bisection;

  bool operator==(const LampertiElement&) const = default;
};

template <typename Scalar>
void require_same_groupoid(const Element<Scalar>& a, const Element<Scalar>& b) {
  if (!Element<Scalar>::same_groupoid(*a.groupoid, *b.groupoid)) {
    throw GroupoidMismatch("elements live over different groupoids");
  }
}

// (a * b)(x) = sum over y z = x of a(y) b(z).
template <typename Scalar>
Element<Scalar> convolve(const Element<Scalar>& a, const Element<Scalar>& b) {
  require_same_groupoid(a, b);
  const FiniteGroupoid& g = *a.groupoid;
  Element<Scalar> out = Element<Scalar>::zero(a.groupoid);
  for (std::size_t yi = 0; yi < g.size(); ++yi) {
    const auto y = static_cast<ArrowId>(yi);
    if (is_zero(a[y])) continue;
    for (ArrowId z : g.range_fiber(g.src(y))) {
      if (is_zero(b[z])) continue;
      out[g.comp(y, z)] += a[y] * b[z];
    }
  }
  return out;
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& a, const Element<Scalar>& b) {
  return convolve(a, b);
}

template <typename Scalar>
Element<Scalar> operator+(const Element<Scalar>& a, const Element<Scalar>& b) {
  require_same_groupoid(a, b);
  return {a.groupoid, a.coeffs + b.coeffs};
}

template <typename Scalar>
Element<Scalar> scaled(const Scalar& s, const Element<Scalar>& a) {
  Element<Scalar> out = a;
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = s * a.coeffs[i];
  return out;
}

template <typename Scalar>
Element<Scalar> indicator(GroupoidPtr g, const Bisection& b) {
  Element<Scalar> out = Element<Scalar>::zero(std::move(g));
  for (ArrowId x : b.arrows()) {
    if (!out.groupoid->contains(x)) throw GroupoidMismatch("bisection not over this groupoid");
    out[x] = Scalar(1);
  }
  return out;
}

// Arrows with nonzero coefficient; floating values count as zero within
// kSupportTolerance.
template <typename Scalar>
std::vector<ArrowId> support(const Element<Scalar>& a) {
  std::vector<ArrowId> out;
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) {
    if (!is_zero(a.coeffs[i])) out.push_back(static_cast<ArrowId>(i));
  }
  return out;
}

// Coefficientwise conversion from the exact to the floating path.
FloatElement to_float(const ExactElement& a);

// f * 1_B as a function on arrows: x -> f(r(x)) on B.
template <typename Scalar>
Element<Scalar> to_element(GroupoidPtr g, const LampertiElement& u) {
  Element<Scalar> out = Element<Scalar>::zero(std::move(g));
  const FiniteGroupoid& gr = *out.groupoid;
  for (ArrowId x : u.bisection.arrows()) {
    auto it = u.phase.find(gr.rng(x));
    if (it == u.phase.end()) {
      throw PartialFunction("phase undefined at unit " + std::to_string(gr.rng(x)));
    }
    out[x] = from_angle<Scalar>(it->second);
  }
  return out;
}

// Spatial decomposition a = f * 1_supp(a). Succeeds when supp(a) is a
// bisection and every coefficient on it is a root of unity; f(u) is the
// coefficient of the arrow of supp(a) with range u.
// Throws NotABisection or NotCircleValued.
LampertiElement decompose_partial_isometry(const ExactElement& a);

// Invertible isometries: as above, additionally requiring supp(a) to be
// full. Throws NotFullBisection or NotCircleValued.
LampertiElement decompose_isometry(const ExactElement& a);

// (f, A)(g, B) = (f . (g o rho_A^-1) restricted to r(AB), AB).
LampertiElement compose_lamperti(const FiniteGroupoid& g, const LampertiElement& u,
                                 const LampertiElement& v);

// (f, B)^-1 = (conj(f) o rho_B, B^-1), for full B.
LampertiElement inverse_lamperti(const FiniteGroupoid& g, const LampertiElement& u);

LampertiElement identity_lamperti(const FiniteGroupoid& g);

// The support homomorphism: sigma(f * 1_B) = B.
inline const Bisection& sigma(const LampertiElement& u) { return u.bisection; }

// Component of u in the invertible isometries; by the split exact sequence
// this is its support bisection. Throws NotFullBisection for partial u.
Bisection pi0_class(const FiniteGroupoid& g, const LampertiElement& u);

// Pointwise product and precomposition with a unit permutation on circle
// functions (indices are positions in g.units()).
CircleFunction multiply(const CircleFunction& f, const CircleFunction& h);
CircleFunction conjugate(const CircleFunction& f);
CircleFunction precompose(const FiniteGroupoid& g, const CircleFunction& f,
                          const UnitPermutation& p);

std::string format_element(const ExactElement& a);

}  // namespace ample
