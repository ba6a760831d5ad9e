#ifndef QPF_DEDEKIND_HPP
#define QPF_DEDEKIND_HPP

#include <optional>
#include <string>
#include <vector>

#include "qpf/poly.hpp"
#include "qpf/waves.hpp"

namespace qpf {

/// Parameters of the generalized Fourier-Dedekind sum
///   S_t = (1/b^r) sum_{j=1}^{b-1} p(xi^j) xi^(jt)
///          / ((1-xi^j)^m prod_i (1-xi^(j n_i))^r),   xi = e^(2 pi i / b).
/// b must be coprime to every modulus; the moduli list may be empty
/// (the 0-dimensional sum).
struct FDSParams {
  int m = 0;
  int r = 1;
  Poly p = Poly::constant(1);
  std::vector<int> moduli;
  int b = 1;
  long t = 0;
};

/// Direct root-of-unity summation in floating complex arithmetic. The
/// cross-check route; exact values come from fds_exact*.
ComplexPoint fds_numeric(const FDSParams& params);

/// Exact value for r = 1 via the eval route: the sum is a finite-Fourier
/// coefficient of (1-x) * eval(p / ((1-x)^(m+1) prod (1-x^(n_i))); psi_b)
/// over 1 - x^b, whose xi^0 term vanishes by construction.
Rational fds_exact(const FDSParams& params);

/// Exact value for any r >= 1: coefficient of eval(p / D; psi_b) with
/// D = (1-x)^m prod (1-x^(n_i))^r, with the xi^0 term removed explicitly.
/// Agrees with fds_exact when r = 1.
Rational fds_exact_general(const FDSParams& params);

/// Numerator polynomial of the Zagier-type sum: prod (1+x^(n_i)) +
/// prod (1-x^(n_i)) = 2 sum over even-cardinality subsets of x^(subset sum).
Poly zagier_theta(const std::vector<int>& moduli);

/// Zagier-type higher-dimensional sum for an odd number of moduli
/// ("OddArityRequired" otherwise); delegates to fds_exact with p = theta.
Rational zagier_sum(int m, const std::vector<int>& moduli, int b, long t);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

/// Reciprocity for r = 1: checks, exactly,
///   sum_j S_t(..., hat n_j, ...; n_j) = p(0) - poly(0)   at t = 0,
///                                     = -poly(-t)        for 1 <= t < s+m-d,
/// with poly the polynomial part of p / ((1-x)^m prod (1-x^(n_j))),
/// s = sum n_j and d = deg p. t_cap < 0 means the full stated range.
CheckReport verify_reciprocity_r1(const std::vector<int>& moduli, int m, const Poly& p,
                                  long t_cap = -1);

/// Inputs of the higher-order theorem: all multiplicities equal r,
/// N = prod n_j, lambda = m + r*sum(n_j) - (r-1)*N - deg p.
struct ReciprocityCase {
  std::vector<int> moduli;
  int m = 0;
  int r = 1;
  Poly p = Poly::constant(1);
  long N = 1;
  long lambda = 0;
};

ReciprocityCase make_reciprocity_case(const std::vector<int>& moduli, int m, int r,
                                      const Poly& p);

/// Higher-order reciprocity: the left side sum_j S_t^(m,r,p) is computed
/// exactly through the wave route (the binomial-alternating sum of
/// denumerant values divided by N^(r-1)) and must equal
/// (p(0) - poly'(0))/N^(r-1) at t = 0 and -poly'(-t)/N^(r-1) for
/// 1 <= t < lambda. Each t also cross-checks the FDS routes (exact
/// general-r and floating). Requires lambda > 0 ("InsufficientM").
CheckReport verify_reciprocity_general(const ReciprocityCase& rc, long t_cap = -1);

/// Coefficient-form reciprocity identities for two or three pairwise
/// coprime moduli, over the periodic tables of the canonical decomposition
/// with the trailing polynomial-part constant absorbed. Reports the
/// identities in their published form over the full windows, and the
/// corrected full-range forms (with the denumerant correction term and
/// divisor exclusions) that the decomposition provably satisfies.
CheckReport rademacher_checks(int n1, int n2, std::optional<int> n3 = std::nullopt);

}  // namespace qpf

#endif  // QPF_DEDEKIND_HPP
