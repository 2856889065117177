/** @file rational.hpp
 *  @brief Exact arbitrary-precision rational numbers.
 *
 *  All measure values, percentiles and thresholds in this library are exact
 *  rationals; comparisons are done by cross multiplication, never through
 *  floating point. The representation is always in lowest terms with a
 *  positive denominator.
 */
#ifndef RANKRANGE_RATIONAL_HPP_
#define RANKRANGE_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankrange {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_, NoReduce{}); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Exact comparison by cross multiplication (denominators are positive).
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// (a+c)/(b+d) for this = a/b and other = c/d; always between the two.
  Rational mediant(const Rational& o) const {
    return Rational(num_ + o.num_, den_ + o.den_);
  }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Approximate double rendering; display only, never used in solver logic.
  double to_double() const {
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
  }

  /// Parses "p/q", "p", or a decimal string like "-12.75" exactly.
  static Rational parse(std::string_view text);

  /// Like parse() but returns nullopt instead of throwing.
  static std::optional<Rational> try_parse(std::string_view text);

 private:
  struct NoReduce {};
  Rational(BigInt n, BigInt d, NoReduce) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;  // > 0
};

/// mediant(a/b, c/d) = (a+c)/(b+d). Denominators must be positive as given;
/// the inputs are taken as written (not reduced first), which matches the
/// convex-combination identity used throughout the solvers.
inline Rational mediant_between(const BigInt& a, const BigInt& b, const BigInt& c,
                                const BigInt& d) {
  if (b <= 0 || d <= 0) throw std::domain_error("mediant_between: nonpositive denominator");
  return Rational(a + c, b + d);
}

inline Rational mediant_between(const Rational& x, const Rational& y) {
  return mediant_between(x.num(), x.den(), y.num(), y.den());
}

}  // namespace rankrange

#endif  // RANKRANGE_RATIONAL_HPP_
