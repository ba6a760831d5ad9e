#ifndef QPF_EVALOP_HPP
#define QPF_EVALOP_HPP

#include <vector>

#include "qpf/poly.hpp"

namespace qpf {

/// A fraction of polynomials. No reduction to lowest terms is performed:
/// eval() is invariant under common factors coprime to the modulus.
struct RationalExpr {
  Poly num;
  Poly den;
};

/// Remainder of f modulo psi(m) in one linear pass: x^j maps to x^(j%m)
/// when j%m != m-1 and to -(x^(m-2) + ... + 1) otherwise. Requires m >= 2
/// ("InvalidModulus" otherwise).
Poly rem_psi(const Poly& f, int m);

/// Remainder of f modulo 1 - x^m: monomial-wise exponent reduction
/// x^k -> x^(k%m). Requires m >= 1.
Poly rem_one_minus_xpow(const Poly& f, int m);

/// The symbolic evaluation of num/den modulo a: rem(alpha*num, a) where
/// alpha*den = 1 mod a. Defined for non-constant a ("InvalidModulus") with
/// gcd(den, a) = 1 ("NotInvertibleModulus"). The result has degree < deg(a).
Poly eval(const RationalExpr& expr, const Poly& a);

/// eval(1/psi(m); psi(n)) for coprime m, n >= 2, computed directly from
/// the smallest a, b > 0 with a*m - b*n = 1 as rem_psi of a sparse
/// exponent sum, without an extended-gcd call.
Poly eval_inv_psi_mod_psi(int n, int m);

/// Exact two-term partial fraction of (1-x) / ((1-x^m)(1-x^n)) for coprime
/// m >= 2, n >= 3. num_m sits over 1-x^m and num_n over 1-x^n:
/// num_m*(1-x^n) + num_n*(1-x^m) = 1-x. `side` reports which of the two
/// closed forms applied (A when the m-inverse coefficient dominates).
struct TwoTermPF {
  enum class Side { A, B };
  Side side;
  Poly num_m;
  Poly num_n;
};
TwoTermPF pf_two_terms(int m, int n);

/// Extended cover-up method: numerators a_j with
///   f / (p_1 ... p_k) = sum_j a_j / p_j,
/// i.e. sum_j a_j * g_j = f with g_j the product of the other factors.
/// Factors must be pairwise coprime ("NotCoprime") and deg(f) must be less
/// than the degree of the product ("ImproperFraction").
std::vector<Poly> cover_up(const Poly& f, const std::vector<Poly>& factors);

/// eval(expr; p^n) by direct extended gcd against p^n.
Poly eval_mod_power(const RationalExpr& expr, const Poly& p, int n);

/// Same value through the binomial expansion of the Bezout identity raised
/// to the n-th power; kept as an independent route for differential tests.
Poly eval_mod_power_expansion(const RationalExpr& expr, const Poly& p, int n);

}  // namespace qpf

#endif  // QPF_EVALOP_HPP
