#include "qpf/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include "qpf/error.hpp"
#include "qpf/format.hpp"

namespace qpf {

namespace {

constexpr long kDefaultMaxDegree = 10000;
constexpr std::size_t kKaratsubaThreshold = 64;

void check_degree(long deg) {
  if (deg > max_poly_degree())
    throw Error("DegreeLimitExceeded",
                "polynomial degree " + std::to_string(deg) + " exceeds QPF_MAX_DEGREE=" +
                    std::to_string(max_poly_degree()));
}

// Schoolbook product of coefficient ranges.
std::vector<Rational> mul_school(const Rational* a, std::size_t na, const Rational* b,
                                 std::size_t nb) {
  std::vector<Rational> r(na + nb - 1, Rational(0));
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rational> mul_rec(const Rational* a, std::size_t na, const Rational* b,
                              std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  if (std::min(na, nb) < kKaratsubaThreshold) return mul_school(a, na, b, nb);

  // Karatsuba split at h: a = a0 + x^h a1, b = b0 + x^h b1.
  std::size_t h = std::min(na, nb) / 2;
  std::vector<Rational> z0 = mul_rec(a, h, b, h);
  std::vector<Rational> z2 = mul_rec(a + h, na - h, b + h, nb - h);
  std::vector<Rational> sa(a, a + h), sb(b, b + h);
  sa.resize(std::max(h, na - h), Rational(0));
  sb.resize(std::max(h, nb - h), Rational(0));
  for (std::size_t i = 0; i < na - h; ++i) sa[i] += a[h + i];
  for (std::size_t i = 0; i < nb - h; ++i) sb[i] += b[h + i];
  std::vector<Rational> z1 = mul_rec(sa.data(), sa.size(), sb.data(), sb.size());

  std::vector<Rational> r(na + nb - 1, Rational(0));
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) r[2 * h + i] += z2[i];
  for (std::size_t i = 0; i < z1.size(); ++i) {
    Rational m = z1[i];
    if (i < z0.size()) m -= z0[i];
    if (i < z2.size()) m -= z2[i];
    r[h + i] += m;
  }
  return r;
}

}  // namespace

long max_poly_degree() {
  static const long limit = [] {
    const char* env = std::getenv("QPF_MAX_DEGREE");
    if (env == nullptr) return kDefaultMaxDegree;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    return (end == env || v <= 0) ? kDefaultMaxDegree : v;
  }();
  return limit;
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly{c}; }

Poly Poly::monomial(int k, const Rational& c) {
  if (c.is_zero()) return Poly();
  check_degree(k);
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  check_degree(static_cast<long>(a.degree()) + b.degree());
  return Poly(mul_rec(a.coeffs().data(), a.coeffs().size(), b.coeffs().data(),
                      b.coeffs().size()));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  std::vector<Rational> r = p.coeffs();
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

DivModResult divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("ZeroDivisor", "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};

  std::vector<Rational> r = a.coeffs();
  const auto& d = b.coeffs();
  const Rational lead = b.leading();
  const std::size_t nd = d.size();
  std::vector<Rational> q(r.size() - nd + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + nd - 1] / lead;
    if (f.is_zero()) continue;
    q[k] = f;
    for (std::size_t j = 0; j < nd; ++j) r[k + j] -= f * d[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

ExtGcdResult ext_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("UndefinedGcd", "gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    DivModResult qr = divmod(r0, r1);
    Poly r2 = qr.remainder;
    r0 = r1;
    r1 = std::move(r2);
    Poly s2 = s0 - qr.quotient * s1;
    s0 = s1;
    s1 = std::move(s2);
    Poly t2 = t0 - qr.quotient * t1;
    t0 = t1;
    t1 = std::move(t2);
  }
  const Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Poly psi(int m) {
  if (m < 1) throw Error("InvalidOrder", "psi(m) requires m >= 1");
  check_degree(m - 1);
  return Poly(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

Poly one_minus_xpow(int n) {
  if (n < 1) throw Error("InvalidOrder", "1 - x^n requires n >= 1");
  check_degree(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[0] = 1;
  c.back() = -1;
  return Poly(std::move(c));
}

Poly cyclotomic(int d) {
  if (d < 1) throw Error("InvalidOrder", "cyclotomic(d) requires d >= 1");
  // Phi_e for each divisor e of d: x^e - 1 divided by the cyclotomics of
  // the proper divisors of e.
  std::vector<Poly> table(static_cast<std::size_t>(d) + 1);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Poly num = -one_minus_xpow(e);
    for (int f = 1; f < e; ++f)
      if (e % f == 0) num = divmod(num, table[static_cast<std::size_t>(f)]).quotient;
    table[static_cast<std::size_t>(e)] = std::move(num);
  }
  return table[static_cast<std::size_t>(d)];
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rational> r(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    r[i - 1] = Rational(static_cast<long>(i)) * p.coeffs()[i];
  return Poly(std::move(r));
}

Poly pow(const Poly& base, int e) {
  Poly r = Poly::constant(1);
  Poly b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

Poly pow_mod(const Poly& base, int e, const Poly& mod) {
  Poly r = rem(Poly::constant(1), mod);
  Poly b = rem(base, mod);
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r = rem(r * b, mod);
    if (k > 1) b = rem(b * b, mod);
  }
  return r;
}

Poly compose_one_minus_x(const Poly& p) {
  Poly r;
  const Poly u{Rational(1), Rational(-1)};  // 1 - x
  for (int i = p.degree(); i >= 0; --i) r = r * u + Poly::constant(p.coeff(i));
  return r;
}

std::complex<double> eval_complex(const Poly& p, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    v = v * z + it->to_double();
  return v;
}

}  // namespace qpf
