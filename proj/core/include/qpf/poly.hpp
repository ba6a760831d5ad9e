#ifndef QPF_POLY_HPP
#define QPF_POLY_HPP

#include <complex>
#include <initializer_list>
#include <limits>
#include <vector>

#include "qpf/rational.hpp"

namespace qpf {

/// Dense univariate polynomial over Rational. Canonical form: no trailing
/// zero coefficients; the zero polynomial is the empty coefficient vector
/// and reports degree kNegInfDegree. Immutable value semantics; all
/// operations are pure.
class Poly {
 public:
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int k, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
  void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivModResult {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division: a = q*b + r with deg(r) < deg(b). Throws
/// "ZeroDivisor" when b = 0.
DivModResult divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

struct ExtGcdResult {
  Poly g;  // monic gcd
  Poly u;  // u*a + v*b = g
  Poly v;
};

/// Extended Euclid over Q[x]; g is normalized monic. With both inputs
/// nonzero and g = gcd, deg(u) < deg(b) - deg(g) and deg(v) < deg(a) - deg(g).
/// Throws "UndefinedGcd" when both inputs are zero.
ExtGcdResult ext_gcd(const Poly& a, const Poly& b);

/// 1 + x + ... + x^(m-1) = (1 - x^m)/(1 - x). Throws "InvalidOrder" for m < 1.
Poly psi(int m);

/// 1 - x^n.
Poly one_minus_xpow(int n);

/// d-th cyclotomic polynomial, by iterated exact division of x^d - 1.
Poly cyclotomic(int d);

Poly derivative(const Poly& p);

Poly pow(const Poly& base, int e);
Poly pow_mod(const Poly& base, int e, const Poly& mod);

/// p(1 - x). Involution; converts between the x basis and the (1-x) basis.
Poly compose_one_minus_x(const Poly& p);

std::complex<double> eval_complex(const Poly& p, std::complex<double> z);

/// Degree cap shared by all constructive operations, from QPF_MAX_DEGREE
/// (default 10000). Exceeding it throws "DegreeLimitExceeded".
long max_poly_degree();

}  // namespace qpf

#endif  // QPF_POLY_HPP
