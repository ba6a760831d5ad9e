#ifndef QPF_RATIONAL_HPP
#define QPF_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qpf {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator; zero is stored as 0/1. This is the scalar type
/// of the whole library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design, scalars are pervasive
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Exact integer value; caller must ensure is_integer().
  Integer to_integer() const;

  double to_double() const { return v_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational operator+(Rational a, const Rational& b) { a += b; return a; }
inline Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
inline Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
inline Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Parses "p", "-p/q", with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

Integer factorial(int n);

/// C(n, k) for small non-negative arguments.
Integer binomial(int n, int k);

/// C(t + l - 1, l - 1) as a polynomial in t, evaluated exactly; valid for
/// any rational t (including negative), l >= 1. This is the coefficient
/// pattern of the power series of 1/(1-x)^l.
Rational rising_binomial(const Rational& t, int l);

}  // namespace qpf

#endif  // QPF_RATIONAL_HPP
