#include "qpf/evalop.hpp"

#include <numeric>
#include <string>

#include "qpf/error.hpp"

namespace qpf {

namespace {

// Inverse of s modulo a; both checks of eval() live here.
Poly inverse_mod(const Poly& s, const Poly& a) {
  if (a.degree() < 1)
    throw Error("InvalidModulus", "eval modulus must be non-constant");
  ExtGcdResult e = ext_gcd(s, a);
  if (e.g.degree() != 0)
    throw Error("NotInvertibleModulus",
                "denominator shares a factor with the modulus");
  return e.u;
}

void require_coprime(int m, int n) {
  if (std::gcd(m, n) != 1)
    throw Error("NotCoprime", std::to_string(m) + " and " + std::to_string(n) + " are not coprime");
}

}  // namespace

Poly rem_psi(const Poly& f, int m) {
  if (m < 2) throw Error("InvalidModulus", "rem_psi requires m >= 2");
  std::vector<Rational> res(static_cast<std::size_t>(m) - 1, Rational(0));
  Rational wrap = 0;  // total weight landing on x^(m-1), folded at the end
  for (int j = 0; j <= f.degree(); ++j) {
    const Rational& c = f.coeffs()[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    int r = j % m;
    if (r == m - 1)
      wrap += c;
    else
      res[static_cast<std::size_t>(r)] += c;
  }
  if (!wrap.is_zero())
    for (auto& c : res) c -= wrap;
  return Poly(std::move(res));
}

Poly rem_one_minus_xpow(const Poly& f, int m) {
  if (m < 1) throw Error("InvalidModulus", "rem_one_minus_xpow requires m >= 1");
  std::vector<Rational> res(static_cast<std::size_t>(m), Rational(0));
  for (int j = 0; j <= f.degree(); ++j)
    res[static_cast<std::size_t>(j % m)] += f.coeffs()[static_cast<std::size_t>(j)];
  return Poly(std::move(res));
}

Poly eval(const RationalExpr& expr, const Poly& a) {
  if (expr.den.is_zero()) throw Error("ZeroDivisor", "fraction with zero denominator");
  Poly alpha = inverse_mod(expr.den, a);
  return rem(alpha * rem(expr.num, a), a);
}

Poly eval_inv_psi_mod_psi(int n, int m) {
  require_coprime(m, n);
  if (m < 2 || n < 2)
    throw Error("InvalidModulus", "eval_inv_psi_mod_psi requires m, n >= 2");
  // smallest a > 0 with a*m = 1 mod n
  int a = 0;
  for (int cand = 1; cand <= n; ++cand)
    if ((static_cast<long long>(cand) * m) % n == 1) {
      a = cand;
      break;
    }
  std::vector<Rational> sum(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < a; ++j)
    sum[static_cast<std::size_t>((static_cast<long long>(j) * m) % n)] += 1;
  return rem_psi(Poly(std::move(sum)), n);
}

TwoTermPF pf_two_terms(int m, int n) {
  require_coprime(m, n);
  if (m < 2 || n < 3) throw Error("InvalidOrder", "pf_two_terms requires m >= 2, n >= 3");

  auto smallest_inverse = [](int u, int v) {
    // smallest a > 0 with a*u = 1 mod v
    for (int cand = 1; cand <= v; ++cand)
      if ((static_cast<long long>(cand) * u) % v == 1) return cand;
    return 0;  // unreachable for coprime u, v
  };
  const int a = smallest_inverse(m, n);
  const int b = (a * m - 1) / n;
  const int alpha = smallest_inverse(n, m);
  const int beta = (alpha * n - 1) / m;
  if (a == beta)
    throw Error("InvalidOrder", "degenerate two-term case a == beta");

  auto exp_sum = [](int count, int step, int offset, int mod) {
    std::vector<Rational> c(static_cast<std::size_t>(mod), Rational(0));
    for (int j = 0; j < count; ++j)
      c[static_cast<std::size_t>((static_cast<long long>(j) * step + offset) % mod)] += 1;
    return Poly(std::move(c));
  };

  TwoTermPF out;
  if (a > beta) {
    out.side = TwoTermPF::Side::A;
    out.num_m = exp_sum(alpha, n, 0, m);
    out.num_n = -exp_sum(beta, m, 1, n);
  } else {
    out.side = TwoTermPF::Side::B;
    out.num_n = exp_sum(a, m, 0, n);
    out.num_m = -exp_sum(b, n, 1, m);
  }
  return out;
}

std::vector<Poly> cover_up(const Poly& f, const std::vector<Poly>& factors) {
  long total_deg = 0;
  for (const Poly& p : factors) {
    if (p.degree() < 1) throw Error("InvalidModulus", "cover-up factors must be non-constant");
    total_deg += p.degree();
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (ext_gcd(factors[i], factors[j]).g.degree() != 0)
        throw Error("NotCoprime", "cover-up factors are not pairwise coprime");
  if (f.degree() >= total_deg)
    throw Error("ImproperFraction", "cover-up requires deg(f) < deg(product)");

  std::vector<Poly> out;
  out.reserve(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const Poly& pj = factors[j];
    Poly gj = Poly::constant(1);
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (i != j) gj = rem(gj * rem(factors[i], pj), pj);
    out.push_back(eval({f, gj}, pj));
  }
  return out;
}

Poly eval_mod_power(const RationalExpr& expr, const Poly& p, int n) {
  if (n < 1) throw Error("InvalidOrder", "eval_mod_power requires n >= 1");
  return eval(expr, pow(p, n));
}

Poly eval_mod_power_expansion(const RationalExpr& expr, const Poly& p, int n) {
  if (n < 1) throw Error("InvalidOrder", "eval_mod_power requires n >= 1");
  if (p.degree() < 1) throw Error("InvalidModulus", "eval modulus must be non-constant");
  ExtGcdResult e = ext_gcd(p, expr.den);
  if (e.g.degree() != 0)
    throw Error("NotInvertibleModulus", "denominator shares a factor with the modulus");
  const Poly a1 = e.u;  // a1*p + a2*den = 1
  const Poly a2 = e.v;
  const Poly mod = pow(p, n);

  // q collects the cross terms of the binomial expansion of the identity
  // raised to the n-th power, with one p factored out.
  Poly q;
  for (int k = 1; k <= n - 1; ++k) {
    Poly term = Rational(binomial(n, k)) * pow(a1, k) * pow(a2, n - k);
    term = term * pow(expr.den, n - k) * pow(p, k - 1);
    q += term;
  }
  Poly geo;  // sum_{k<n} (p*q)^k mod p^n
  Poly pq_pow = Poly::constant(1);
  const Poly pq = rem(p * q, mod);
  for (int k = 0; k < n; ++k) {
    geo += pq_pow;
    if (k + 1 < n) pq_pow = rem(pq_pow * pq, mod);
  }
  Poly inv_den = rem(rem(pow(expr.den, n - 1) * pow(a2, n), mod) * geo, mod);
  return rem(rem(expr.num, mod) * inv_den, mod);
}

}  // namespace qpf
