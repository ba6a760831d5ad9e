#ifndef QPF_BERNOULLI_HPP
#define QPF_BERNOULLI_HPP

#include <vector>

#include "qpf/poly.hpp"

namespace qpf {

/// f_k = ((-1/m) x psi'(m))^k rem psi(m), the k-th coefficient polynomial
/// of the expansion of m/psi(m) in powers of (1-x); equals the inverse of
/// (1-x)^k modulo psi(m). f_0 = 1. Computed iteratively, one multiply and
/// one linear remainder per step. Requires m >= 2 ("InvalidOrder").
Poly deg_bernoulli_poly(int m, int k);

/// Same value by square-and-multiply modulo psi(m); the fast route behind
/// the same contract, differentially tested against the iterative one.
Poly deg_bernoulli_poly_fast(int m, int k);

/// Bundle of one degenerate Bernoulli datum, as exposed by the CLI.
struct DegBernoulli {
  int k;
  int m;
  Poly value_poly;        // f_k
  Rational value_at_one;  // f_k(1)
};
DegBernoulli deg_bernoulli(int m, int k);

/// Reciprocal degenerate Bernoulli number: (-1)^k * k! * f_k(1).
Rational reciprocal_deg_bernoulli(int k, int m);

/// Order-r version: the r-fold multinomial convolution of the order-1
/// numbers; order 1 reduces to reciprocal_deg_bernoulli.
Rational reciprocal_deg_bernoulli_order(int k, int m, int r);

/// First `count` coefficients, in the (1-x) basis, of (1/psi(m))^r as a
/// power series; m = 1 gives the constant series {1}.
std::vector<Rational> inv_psi_series(int m, int r, int count);

/// B_0 .. B_n with the B_1 = -1/2 convention.
std::vector<Rational> bernoulli_numbers(int n);

/// Unsigned Stirling numbers of the first kind, rows 0..n.
std::vector<std::vector<Integer>> stirling_first_unsigned(int n);

struct StirlingBernoulliTables {
  std::vector<Rational> bernoulli;                 // B_1 = -1/2
  std::vector<std::vector<Integer>> stirling;      // unsigned first kind
};
StirlingBernoulliTables stirling_bernoulli_tables(int n);

/// The Bernoulli/Stirling closed form for f_k(1), k >= 1
/// ("IndexOutOfRange" for k = 0). Uses unsigned Stirling numbers of the
/// first kind; the convention is pinned by tests against the remainder
/// route for small k.
Rational gessel_closed_form(int k, int m);

/// Interpolates the unique polynomial of degree <= 2k in m through the
/// points (m, m^k * f_k(1)) for the sample orders given, and returns its
/// coefficients (constant first). Needs at least 2k+1 distinct samples
/// ("NeedMoreSamples"); all must be >= 2.
std::vector<Rational> interpolate_mk_fk(int k, const std::vector<int>& sample_ms);

}  // namespace qpf

#endif  // QPF_BERNOULLI_HPP
