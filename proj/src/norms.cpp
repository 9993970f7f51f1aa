#include "ample/norms.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <Eigen/LU>

namespace ample {

std::optional<Rational> i_norm_exact(const ExactElement& a) {
  const FiniteGroupoid& g = *a.groupoid;
  std::vector<Rational> abs_values(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto v = a.coeffs[static_cast<Eigen::Index>(x)].exact_abs();
    if (!v) return std::nullopt;
    abs_values[x] = *v;
  }
  Rational best = 0;
  for (ArrowId u : g.units()) {
    Rational by_range = 0, by_source = 0;
    for (ArrowId x : g.range_fiber(u)) by_range += abs_values[static_cast<std::size_t>(x)];
    for (ArrowId x : g.source_fiber(u)) by_source += abs_values[static_cast<std::size_t>(x)];
    if (by_range > best) best = by_range;
    if (by_source > best) best = by_source;
  }
  return best;
}

void check_exponent(double p) {
  if (!(p >= 1.0)) throw InvalidExponent("exponent must lie in [1, inf], got " + format_exponent(p));
}

double vector_p_norm(const Eigen::VectorXcd& v, double p) {
  if (std::isinf(p)) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  if (p == 1.0) return v.cwiseAbs().sum();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

namespace {

double conjugate_exponent(double p) {
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

std::complex<double> unit_phase(std::complex<double> z) {
  double r = std::abs(z);
  return r > 0.0 ? z / r : std::complex<double>(1.0, 0.0);
}

// y with ||y||_q = 1 (q conjugate to p) and <y, v> = ||v||_p.
Eigen::VectorXcd dual_vector(const Eigen::VectorXcd& v, double p) {
  const Eigen::Index n = v.size();
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
  if (n == 0) return y;
  if (std::isinf(p)) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    y[k] = unit_phase(v[k]);
    return y;
  }
  if (p == 1.0) {
    for (Eigen::Index i = 0; i < n; ++i) y[i] = std::abs(v[i]) > 0.0 ? unit_phase(v[i]) : 0.0;
    return y;
  }
  const double norm = vector_p_norm(v, p);
  if (norm == 0.0) return y;
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = std::pow(std::abs(v[i]) / norm, p - 1.0) * unit_phase(v[i]);
  }
  return y;
}

double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Candidate {
  double value = -1.0;
  Eigen::VectorXcd x;
};

// Duality-map ascent from x0; returns the best iterate seen.
Candidate ascend(const Eigen::MatrixXcd& m, Eigen::VectorXcd x, double p, int iters) {
  const double q = conjugate_exponent(p);
  Candidate best;
  for (int k = 0; k <= iters; ++k) {
    x /= vector_p_norm(x, p);
    Eigen::VectorXcd y = m * x;
    const double value = vector_p_norm(y, p);
    if (value > best.value) best = {value, x};
    if (k == iters || value == 0.0) break;
    Eigen::VectorXcd z = m.adjoint() * dual_vector(y, p);
    const double zq = vector_p_norm(z, q);
    if (zq <= z.dot(x).real() * (1.0 + 1e-15)) break;  // x is stationary
    x = dual_vector(z, q);
    if (vector_p_norm(x, p) == 0.0) break;
  }
  return best;
}

}  // namespace

NormEstimate p_norm(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& abs_entries, double p,
                    const PNormOptions& options) {
  check_exponent(p);
  const Eigen::Index n = m.cols();
  NormEstimate out;
  if (n == 0) return out;

  const double col_max = abs_entries.colwise().sum().maxCoeff();
  const double row_max = abs_entries.rowwise().sum().maxCoeff();
  if (p == 1.0) {
    out.upper = col_max;
  } else if (std::isinf(p)) {
    out.upper = row_max;
  } else {
    out.upper = std::pow(col_max, 1.0 / p) * std::pow(row_max, 1.0 - 1.0 / p);
  }

  // Basis vectors: ||M e_j||_p is a column norm, computed from exact magnitudes.
  Eigen::Index best_col = 0;
  double best_col_value = -1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double v;
    if (std::isinf(p)) {
      v = abs_entries.col(j).maxCoeff();
    } else if (p == 1.0) {
      v = abs_entries.col(j).sum();
    } else {
      double s = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) s += std::pow(abs_entries(i, j), p);
      v = std::pow(s, 1.0 / p);
    }
    if (v > best_col_value) {
      best_col_value = v;
      best_col = j;
    }
  }
  Candidate best{best_col_value, Eigen::VectorXcd::Unit(n, best_col)};

  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.starts; ++s) {
    Eigen::VectorXcd x0(n);
    if (s == 0) {
      x0 = Eigen::VectorXcd::Unit(n, best_col);
    } else if (s == 1) {
      x0 = Eigen::VectorXcd::Ones(n);
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double re = 2.0 * uniform(rng) - 1.0;
        const double im = 2.0 * uniform(rng) - 1.0;
        x0[i] = {re, im};
      }
    }
    if (vector_p_norm(x0, p) == 0.0) continue;
    Candidate c = ascend(m, x0, p, options.iters);
    if (c.value > best.value) best = std::move(c);  // ties keep the earlier start
  }
  out.lower = std::min(best.value, out.upper);
  out.witness = best.x / vector_p_norm(best.x, p);
  return out;
}

IsometryCertificate certify_invertible_isometry(const ExactElement& a, double p,
                                                const CertifyOptions& options) {
  check_exponent(p);
  IsometryCertificate cert;
  const FiniteGroupoid& g = *a.groupoid;
  try {
    LampertiElement u = decompose_isometry(a);
    cert.invertible_isometry = true;
    cert.forward = p_norm(regular_rep(a), p, options.ascent);
    ExactElement inv = to_element<Cyclotomic>(a.groupoid, inverse_lamperti(g, u));
    cert.backward = p_norm(regular_rep(inv), p, options.ascent);
    cert.decomposition = std::move(u);
    const bool bounds_ok = cert.forward.upper <= 1.0 + options.tol &&
                           cert.backward.upper <= 1.0 + options.tol &&
                           cert.forward.lower >= 1.0 - options.tol &&
                           cert.backward.lower >= 1.0 - options.tol;
    cert.norm_status = bounds_ok ? "certified" : "inconclusive";
    return cert;
  } catch (const NotFullBisection&) {
  } catch (const NotABisection&) {
  } catch (const NotCircleValued&) {
  }
  if (p == 2.0) {
    throw ExponentTwoUnsupported("at p = 2 non-spatial unitaries exist; refutation is undefined");
  }
  Matrix<Cyclotomic> exact = regular_rep(a);
  Eigen::MatrixXcd forward = exact.unaryExpr([](const Cyclotomic& s) { return s.to_complex(); });
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(forward);
  if (!lu.isInvertible()) throw NotInvertible("left regular representation is singular");
  Eigen::MatrixXcd backward = lu.inverse();
  cert.forward = p_norm(forward, Eigen::MatrixXd(forward.cwiseAbs()), p, options.ascent);
  cert.backward = p_norm(backward, Eigen::MatrixXd(backward.cwiseAbs()), p, options.ascent);
  if (cert.forward.lower > 1.0 + options.margin) {
    cert.norm_status = "refuted";
    cert.witness = cert.forward.witness;
    cert.witness_side = "forward";
  } else if (cert.backward.lower > 1.0 + options.margin) {
    cert.norm_status = "refuted";
    cert.witness = cert.backward.witness;
    cert.witness_side = "backward";
  } else {
    cert.norm_status = "inconclusive";
  }
  return cert;
}

double parse_exponent(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "inf" || t == "infinity" || t == "\xe2\x88\x9e") return kInfinity;
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(t, &used);
  } catch (const std::exception&) {
    throw InvalidExponent("cannot read exponent '" + text + "'");
  }
  if (used != t.size() || std::isnan(p)) throw InvalidExponent("cannot read exponent '" + text + "'");
  check_exponent(p);
  return p;
}

std::string format_exponent(double p) {
  if (std::isinf(p) && p > 0) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace ample
