#include "ample/scalar.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ample {

namespace {

boost::rational<std::int64_t> reduce_mod_one(boost::rational<std::int64_t> v) {
  std::int64_t n = v.numerator();
  std::int64_t d = v.denominator();
  std::int64_t r = n % d;
  if (r < 0) r += d;
  return {r, d};
}

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic; quotient coefficients are integers.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t q = num[i];
    quot[i - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

// Reductions of x^k modulo Phi_N for k = 0..N-1.
struct PowerTable {
  int order = 1;
  int degree = 1;
  std::vector<std::vector<std::int64_t>> rows;
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

const PowerTable& power_table(int n) {
  static std::map<int, std::unique_ptr<PowerTable>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  auto table = std::make_unique<PowerTable>();
  table->order = n;
  table->degree = static_cast<int>(phi_poly.size()) - 1;
  const int deg = table->degree;
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    table->rows.push_back(cur);
    // multiply by x and reduce by the monic Phi_N
    std::int64_t top = cur[deg - 1];
    for (int j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < deg; ++j) cur[j] -= top * phi_poly[j];
    }
  }
  std::lock_guard<std::mutex> lock(table_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

std::string rational_str(const Rational& q) {
  return q.get_str();
}

}  // namespace

// --- Angle -----------------------------------------------------------------

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle with zero denominator");
  value_ = reduce_mod_one(boost::rational<std::int64_t>(num, den));
}

Angle::Angle(boost::rational<std::int64_t> value) : value_(reduce_mod_one(value)) {}

Angle Angle::operator+(const Angle& other) const { return Angle(value_ + other.value_); }
Angle Angle::operator-(const Angle& other) const { return Angle(value_ - other.value_); }
Angle Angle::operator-() const { return Angle(-value_); }
Angle Angle::times(std::int64_t n) const { return Angle(value_ * n); }

double Angle::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(value_.numerator()) /
         static_cast<double>(value_.denominator());
}

std::complex<double> Angle::to_complex() const {
  // Exact values on the quarter turns.
  const auto n = value_.numerator();
  const auto d = value_.denominator();
  if (n == 0) return {1.0, 0.0};
  if (d == 2) return {-1.0, 0.0};
  if (d == 4) return n == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  return std::polar(1.0, radians());
}

std::string Angle::str() const {
  if (value_.numerator() == 0) return "0";
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

Angle Angle::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Angle(n, 1);
    }
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    std::string rest = text.substr(slash + 1);
    std::int64_t d = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return Angle(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed angle '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

// --- cyclotomic polynomials ---------------------------------------------------

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::map<int, std::vector<std::int64_t>> cache;
  static std::recursive_mutex m;
  std::lock_guard<std::recursive_mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

// --- Cyclotomic --------------------------------------------------------------

// mpq_class(num, den) is not reduced on construction; equality needs it.
Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) {
    coords_.push_back(value);
    coords_.back().canonicalize();
  }
}

Cyclotomic::Cyclotomic(const Rational& re, const Rational& im) {
  if (im == 0) {
    *this = Cyclotomic(re);
    return;
  }
  order_ = 4;
  coords_ = {re, im};
  for (auto& c : coords_) c.canonicalize();
  normalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords)
    : order_(order), coords_(std::move(coords)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(const Angle& angle) {
  if (angle.is_zero()) return Cyclotomic(1);
  const int n = static_cast<int>(angle.denominator());
  const auto& row = power_table(n).rows[static_cast<std::size_t>(angle.numerator())];
  std::vector<Rational> coords(row.begin(), row.end());
  return Cyclotomic(n, std::move(coords));
}

void Cyclotomic::normalize() {
  bool all_zero = true;
  bool only_constant = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) {
      all_zero = false;
      if (i > 0) only_constant = false;
    }
  }
  if (all_zero) {
    coords_.clear();
    order_ = 1;
  } else if (only_constant) {
    coords_.resize(1);
    order_ = 1;
  } else {
    coords_.resize(static_cast<std::size_t>(euler_phi(order_)));
  }
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

Cyclotomic Cyclotomic::lifted(int order) const {
  if (order == order_ || coords_.empty()) return *this;
  if (order % order_ != 0) throw std::logic_error("cyclotomic lift to a non-multiple order");
  const PowerTable& table = power_table(order);
  const int step = order / order_;
  std::vector<Rational> out(static_cast<std::size_t>(table.degree), Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    const auto& row = table.rows[(j * step) % order];
    for (int t = 0; t < table.degree; ++t) {
      if (row[t] != 0) out[t] += coords_[j] * row[t];
    }
  }
  Cyclotomic result;
  result.order_ = order;
  result.coords_ = std::move(out);
  return result;  // deliberately not normalized; callers compare or combine
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2 || coords_.empty()) return *this;
  const PowerTable& table = power_table(order_);
  std::vector<Rational> out(static_cast<std::size_t>(table.degree), Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    const auto& row = table.rows[(order_ - static_cast<int>(j)) % order_];
    for (int t = 0; t < table.degree; ++t) {
      if (row[t] != 0) out[t] += coords_[j] * row[t];
    }
  }
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  if (other.coords_.empty()) return *this;
  if (coords_.empty()) return other;
  const int order = lcm_int(order_, other.order_);
  Cyclotomic a = lifted(order);
  Cyclotomic b = other.lifted(order);
  a.coords_.resize(std::max(a.coords_.size(), b.coords_.size()), Rational(0));
  for (std::size_t i = 0; i < b.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  a.normalize();
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const { return *this + (-other); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  if (coords_.empty() || other.coords_.empty()) return {};
  if (order_ == 1) {
    Cyclotomic out = other;
    for (auto& c : out.coords_) c *= coords_[0];
    out.normalize();
    return out;
  }
  if (other.order_ == 1) return other * *this;
  const int order = lcm_int(order_, other.order_);
  Cyclotomic a = lifted(order);
  Cyclotomic b = other.lifted(order);
  const PowerTable& table = power_table(order);
  std::vector<Rational> acc(static_cast<std::size_t>(order), Rational(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] == 0) continue;
      acc[(i + j) % order] += a.coords_[i] * b.coords_[j];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(table.degree), Rational(0));
  for (int k = 0; k < order; ++k) {
    if (acc[k] == 0) continue;
    if (k < table.degree) {
      out[k] += acc[k];
      continue;
    }
    const auto& row = table.rows[k];
    for (int t = 0; t < table.degree; ++t) {
      if (row[t] != 0) out[t] += acc[k] * row[t];
    }
  }
  return Cyclotomic(order, std::move(out));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& other) const {
  if (!other.is_rational() || other.is_zero()) {
    throw std::domain_error("cyclotomic division supports nonzero rational divisors only");
  }
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c /= other.coords_[0];
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  if (order_ == other.order_) return coords_ == other.coords_;
  if (coords_.empty() || other.coords_.empty()) return false;
  const int order = lcm_int(order_, other.order_);
  Cyclotomic a = lifted(order);
  Cyclotomic b = other.lifted(order);
  a.coords_.resize(b.coords_.size(), Rational(0));
  b.coords_.resize(a.coords_.size(), Rational(0));
  return a.coords_ == b.coords_;
}

std::optional<Angle> Cyclotomic::as_root_of_unity() const {
  if (coords_.empty()) return std::nullopt;
  if (order_ == 1) {
    if (coords_[0] == 1) return Angle(0);
    if (coords_[0] == -1) return Angle(1, 2);
    return std::nullopt;
  }
  // Roots of unity in Q(zeta_N) are the 2N-th (N odd) or N-th (N even) ones.
  const int m = (order_ % 2 == 0) ? order_ : 2 * order_;
  const PowerTable& table = power_table(m);
  Cyclotomic z = lifted(m);
  z.coords_.resize(static_cast<std::size_t>(table.degree), Rational(0));
  for (int k = 0; k < m; ++k) {
    const auto& row = table.rows[k];
    bool match = true;
    for (int t = 0; t < table.degree && match; ++t) match = (z.coords_[t] == row[t]);
    if (match) return Angle(k, m);
  }
  return std::nullopt;
}

std::optional<Rational> Cyclotomic::exact_abs() const {
  if (coords_.empty()) return Rational(0);
  if (order_ == 1) return Rational(::abs(coords_[0]));
  const int m = (order_ % 2 == 0) ? order_ : 2 * order_;
  const PowerTable& table = power_table(m);
  Cyclotomic z = lifted(m);
  z.coords_.resize(static_cast<std::size_t>(table.degree), Rational(0));
  for (int k = 0; k < m; ++k) {
    const auto& row = table.rows[k];
    std::optional<Rational> ratio;
    bool match = true;
    for (int t = 0; t < table.degree && match; ++t) {
      if (row[t] == 0) {
        match = (z.coords_[t] == 0);
      } else if (!ratio) {
        ratio = z.coords_[t] / Rational(row[t]);
      } else {
        match = (z.coords_[t] == *ratio * row[t]);
      }
    }
    if (match && ratio && *ratio != 0) return Rational(::abs(*ratio));
  }
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    sum += coords_[j].get_d() * Angle(static_cast<std::int64_t>(j), order_).to_complex();
  }
  return sum;
}

double Cyclotomic::abs() const { return std::abs(to_complex()); }

double magnitude(const Cyclotomic& z) {
  if (auto exact = z.exact_abs()) return exact->get_d();
  return z.abs();
}

std::string Cyclotomic::str() const {
  if (coords_.empty()) return "0";
  if (order_ == 1) return rational_str(coords_[0]);
  if (auto angle = as_root_of_unity()) return "e(" + angle->str() + ")";
  std::ostringstream os;
  os << "cyc" << order_ << "[";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) os << ",";
    os << rational_str(coords_[j]);
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace ample
