#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include <Eigen/Core>

namespace ample {

using Rational = mpq_class;

// Element of the rational torus Q/Z, read as exp(2*pi*i*angle).
// Products of circle scalars are sums of angles.
class Angle {
 public:
  Angle() = default;
  Angle(std::int64_t num, std::int64_t den = 1);
  explicit Angle(boost::rational<std::int64_t> value);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  bool is_zero() const { return value_.numerator() == 0; }

  // The circle operation (multiplication on T, addition on Q/Z).
  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle operator-() const;
  Angle& operator+=(const Angle& other) { return *this = *this + other; }

  // n-fold power in T.
  Angle times(std::int64_t n) const;

  bool operator==(const Angle& other) const { return value_ == other.value_; }
  bool operator!=(const Angle& other) const { return !(*this == other); }
  bool operator<(const Angle& other) const { return value_ < other.value_; }

  double radians() const;
  std::complex<double> to_complex() const;

  // "0", "1/3", ...
  std::string str() const;
  static Angle parse(const std::string& text);

 private:
  boost::rational<std::int64_t> value_{0};
};

// Exact element of a cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial. Rationals
// live at order 1. Every circle scalar with rational angle is representable,
// as are finite Q-linear combinations of them.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}
  Cyclotomic(const Rational& value);
  Cyclotomic(const Rational& re, const Rational& im);

  static Cyclotomic root_of_unity(const Angle& angle);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const { return order_ == 1; }
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic conj() const;
  // Some angle t with *this == exp(2 pi i t), if any.
  std::optional<Angle> as_root_of_unity() const;
  // |*this| as an exact rational when *this = r * (root of unity).
  std::optional<Rational> exact_abs() const;
  double abs() const;
  std::complex<double> to_complex() const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator/(const Cyclotomic& other) const;  // rational divisors only
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }
  Cyclotomic& operator/=(const Cyclotomic& other) { return *this = *this / other; }

  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  std::string str() const;

 private:
  Cyclotomic(int order, std::vector<Rational> coords);
  Cyclotomic lifted(int order) const;
  void normalize();

  int order_ = 1;
  std::vector<Rational> coords_;
};

// Euler phi and the integer coefficients of Phi_N (low degree first).
int euler_phi(int n);
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Scalar helpers shared by the exact and floating paths.
inline constexpr double kSupportTolerance = 1e-12;

inline bool is_zero(const Cyclotomic& z) { return z.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return std::abs(z) <= kSupportTolerance; }
inline std::complex<double> to_complex(const Cyclotomic& z) { return z.to_complex(); }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }
inline Cyclotomic conjugate(const Cyclotomic& z) { return z.conj(); }
inline std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
// Exact 1.0 for unimodular exact scalars, which keeps closed-form norm bounds
// of phase-permutation matrices exact.
double magnitude(const Cyclotomic& z);
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

template <typename Scalar>
Scalar from_angle(const Angle& angle);
template <>
inline Cyclotomic from_angle<Cyclotomic>(const Angle& angle) {
  return Cyclotomic::root_of_unity(angle);
}
template <>
inline std::complex<double> from_angle<std::complex<double>>(const Angle& angle) {
  return angle.to_complex();
}

std::ostream& operator<<(std::ostream& os, const Angle& a);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace ample

namespace Eigen {

template <>
struct NumTraits<ample::Cyclotomic> : GenericNumTraits<ample::Cyclotomic> {
  typedef ample::Cyclotomic Real;
  typedef ample::Cyclotomic NonInteger;
  typedef ample::Cyclotomic Nested;
  typedef ample::Cyclotomic Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
