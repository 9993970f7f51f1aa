#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "ample/convolution.hpp"

namespace ample {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// max over units u of the larger of sum_{r(x)=u} |a(x)| and sum_{s(x)=u} |a(x)|.
template <typename Scalar>
double i_norm(const Element<Scalar>& a) {
  const FiniteGroupoid& g = *a.groupoid;
  double best = 0.0;
  for (ArrowId u : g.units()) {
    double by_range = 0.0, by_source = 0.0;
    for (ArrowId x : g.range_fiber(u)) by_range += magnitude(a[x]);
    for (ArrowId x : g.source_fiber(u)) by_source += magnitude(a[x]);
    best = std::max({best, by_range, by_source});
  }
  return best;
}

// Exact I-norm when every coefficient is a rational multiple of a root of
// unity; std::nullopt otherwise (use the floating overload).
std::optional<Rational> i_norm_exact(const ExactElement& a);

// Left convolution by a on functions over arrows: M(x, z) = a(y) with y z = x.
template <typename Scalar>
Matrix<Scalar> regular_rep(const Element<Scalar>& a) {
  const FiniteGroupoid& g = *a.groupoid;
  const auto m = static_cast<Eigen::Index>(g.size());
  Matrix<Scalar> out = Matrix<Scalar>::Constant(m, m, Scalar(0));
  for (Eigen::Index zi = 0; zi < m; ++zi) {
    const auto z = static_cast<ArrowId>(zi);
    for (ArrowId y : g.source_fiber(g.rng(z))) out(g.comp(y, z), zi) = a[y];
  }
  return out;
}

struct PNormOptions {
  int iters = 200;
  int starts = 32;
  std::uint64_t seed = 0;
};

struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  Eigen::VectorXcd witness;  // ||witness||_p = 1 and ||M witness||_p = lower
};

// Throws InvalidExponent unless p >= 1 (p may be kInfinity).
void check_exponent(double p);

// Certified bounds on the l^p operator norm. `abs_entries` holds |M(i,j)|;
// passing exact magnitudes keeps the closed-form upper bound exact.
NormEstimate p_norm(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& abs_entries, double p,
                    const PNormOptions& options = {});

template <typename Scalar>
NormEstimate p_norm(const Matrix<Scalar>& m, double p, const PNormOptions& options = {}) {
  Eigen::MatrixXcd values = m.unaryExpr([](const Scalar& s) { return to_complex(s); });
  Eigen::MatrixXd abs_entries = m.unaryExpr([](const Scalar& s) { return magnitude(s); });
  return p_norm(values, abs_entries, p, options);
}

double vector_p_norm(const Eigen::VectorXcd& v, double p);

struct CertifyOptions {
  double tol = 1e-9;
  double margin = 1e-2;
  PNormOptions ascent;
};

struct IsometryCertificate {
  // true iff a = f 1_B with B full and f circle valued.
  bool invertible_isometry = false;
  std::optional<LampertiElement> decomposition;
  NormEstimate forward;   // bounds for lambda(a)
  NormEstimate backward;  // bounds for lambda(a)^-1
  // "certified", "refuted" or "inconclusive"
  std::string norm_status;
  // When refuted: the vector x with ||T x||_p > (1 + margin) ||x||_p and
  // which of T = lambda(a) ("forward") or lambda(a)^-1 ("backward") it is for.
  Eigen::VectorXcd witness;
  std::string witness_side;
};

// Throws InvalidExponent, NotInvertible when lambda(a) is singular, and
// ExponentTwoUnsupported when p = 2 and a is not of Lamperti form.
IsometryCertificate certify_invertible_isometry(const ExactElement& a, double p,
                                                const CertifyOptions& options = {});

// Accepts decimals, "inf", "infinity".
double parse_exponent(const std::string& text);
std::string format_exponent(double p);

}  // namespace ample
