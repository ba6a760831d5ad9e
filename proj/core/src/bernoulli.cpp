#include "qpf/bernoulli.hpp"

#include <string>

#include "qpf/error.hpp"
#include "qpf/evalop.hpp"

namespace qpf {

namespace {

// -(1/m) x psi'(m), the generator whose powers are reduced.
Poly step_poly(int m) {
  std::vector<Rational> w(static_cast<std::size_t>(m));
  for (int j = 1; j < m; ++j) w[static_cast<std::size_t>(j)] = Rational(-j, m);
  return Poly(std::move(w));
}

void require_order(int m) {
  if (m < 2) throw Error("InvalidOrder", "degenerate Bernoulli data requires m >= 2");
}

}  // namespace

Poly deg_bernoulli_poly(int m, int k) {
  require_order(m);
  const Poly w = step_poly(m);
  Poly f = Poly::constant(1);
  for (int i = 0; i < k; ++i) f = rem_psi(f * w, m);
  return f;
}

Poly deg_bernoulli_poly_fast(int m, int k) {
  require_order(m);
  if (k == 0) return Poly::constant(1);
  const Poly w = rem_psi(step_poly(m), m);
  Poly r = Poly::constant(1);
  Poly b = w;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r = rem_psi(r * b, m);
    if (e > 1) b = rem_psi(b * b, m);
  }
  return r;
}

DegBernoulli deg_bernoulli(int m, int k) {
  Poly f = deg_bernoulli_poly(m, k);
  Rational at_one = f(1);
  return {k, m, std::move(f), at_one};
}

Rational reciprocal_deg_bernoulli(int k, int m) {
  Rational v = Rational(factorial(k)) * deg_bernoulli_poly(m, k)(1);
  return (k % 2 != 0) ? -v : v;
}

std::vector<Rational> inv_psi_series(int m, int r, int count) {
  if (m < 1) throw Error("InvalidOrder", "inv_psi_series requires m >= 1");
  if (count <= 0) return {};
  std::vector<Rational> base(static_cast<std::size_t>(count), Rational(0));
  if (m == 1) {
    base[0] = 1;  // psi(1) = 1
  } else {
    const Poly w = step_poly(m);
    Poly f = Poly::constant(1);
    for (int i = 0; i < count; ++i) {
      base[static_cast<std::size_t>(i)] = f(1) / Rational(m);
      if (i + 1 < count) f = rem_psi(f * w, m);
    }
  }
  // r-fold truncated product
  std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
  out[0] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> next(static_cast<std::size_t>(count), Rational(0));
    for (int a = 0; a < count; ++a) {
      if (out[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; a + b < count; ++b)
        next[static_cast<std::size_t>(a + b)] +=
            out[static_cast<std::size_t>(a)] * base[static_cast<std::size_t>(b)];
    }
    out = std::move(next);
  }
  return out;
}

Rational reciprocal_deg_bernoulli_order(int k, int m, int r) {
  if (r < 1) throw Error("InvalidOrder", "order must be >= 1");
  require_order(m);
  // [u^k] of (m/psi)^r is (-1)^k beta_k / k!; scale out the series factor.
  std::vector<Rational> s = inv_psi_series(m, r, k + 1);
  Rational v = s[static_cast<std::size_t>(k)] * Rational(factorial(k));
  for (int i = 0; i < r; ++i) v *= m;
  return (k % 2 != 0) ? -v : v;
}

std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (int j = 0; j < i; ++j)
      acc += Rational(binomial(i + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(i)] = -acc / Rational(i + 1);
  }
  return b;
}

std::vector<std::vector<Integer>> stirling_first_unsigned(int n) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    s[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Integer(0));
    s[static_cast<std::size_t>(i)][0] = (i == 0) ? 1 : 0;
    for (int j = 1; j <= i; ++j) {
      Integer v = s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
      if (j <= i - 1) v += Integer(i - 1) * s[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  }
  return s;
}

StirlingBernoulliTables stirling_bernoulli_tables(int n) {
  return {bernoulli_numbers(n), stirling_first_unsigned(n)};
}

Rational gessel_closed_form(int k, int m) {
  if (k < 1) throw Error("IndexOutOfRange", "closed form starts at k = 1");
  require_order(m);
  if (k == 1) return Rational(m - 1, 2);
  const std::vector<Rational> B = bernoulli_numbers(k);
  const auto S = stirling_first_unsigned(k - 1);
  Rational acc = 0;
  Integer mpow = m;  // m^j
  for (int j = 2; j <= k; ++j) {
    mpow *= m;
    const Rational& Bj = B[static_cast<std::size_t>(j)];
    if (Bj.is_zero()) continue;
    Rational stir(S[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j) - 1]);
    acc += Bj / Rational(j) * stir * Rational(mpow - 1);
  }
  return acc / Rational(factorial(k - 1));
}

std::vector<Rational> interpolate_mk_fk(int k, const std::vector<int>& sample_ms) {
  if (static_cast<int>(sample_ms.size()) < 2 * k + 1)
    throw Error("NeedMoreSamples", "interpolation of degree <= " + std::to_string(2 * k) +
                                       " needs at least " + std::to_string(2 * k + 1) + " samples");
  for (std::size_t i = 0; i < sample_ms.size(); ++i) {
    if (sample_ms[i] < 2) throw Error("InvalidOrder", "samples must be >= 2");
    for (std::size_t j = i + 1; j < sample_ms.size(); ++j)
      if (sample_ms[i] == sample_ms[j]) throw Error("NeedMoreSamples", "samples must be distinct");
  }

  // Incremental Newton interpolation through (m, m^k f_k(1)).
  std::vector<Rational> xs, coef;
  for (int m : sample_ms) {
    Rational y = deg_bernoulli_poly(m, k)(1);
    for (int i = 0; i < k; ++i) y *= m;
    Rational v = y;
    for (std::size_t i = 0; i < coef.size(); ++i)
      v = (v - coef[i]) / (Rational(m) - xs[i]);
    xs.emplace_back(m);
    coef.push_back(v);
  }
  Poly p;
  Poly basis = Poly::constant(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    p += coef[i] * basis;
    basis = basis * Poly{-xs[i], Rational(1)};
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * k) + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 2 * k) throw Error("DecompositionCorrupt", "interpolant degree exceeds 2k");
    coeffs[static_cast<std::size_t>(i)] = p.coeff(i);
  }
  return coeffs;
}

}  // namespace qpf
