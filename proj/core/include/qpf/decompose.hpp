#ifndef QPF_DECOMPOSE_HPP
#define QPF_DECOMPOSE_HPP

#include <vector>

#include "qpf/poly.hpp"

namespace qpf {

/// Non-empty multiset of positive part sizes with gcd 1
/// ("NonCoprimeTuple") — the denominator exponents of the generating
/// function 1 / prod (1 - x^a_i).
struct PartTuple {
  std::vector<int> parts;
};
void validate(const PartTuple& parts);

struct Block {
  int n = 0;  // pairwise-coprime modulus, >= 2
  int r = 0;  // multiplicity, >= 1
  friend bool operator==(const Block&, const Block&) = default;
};

/// Reduced representation p(x) / ((1-x)^m * prod_j (1-x^(n_j))^(r_j)) of
/// the generating function, with pairwise coprime n_j.
struct CoprimeForm {
  int m = 0;
  Poly p = Poly::constant(1);
  std::vector<Block> blocks;
  friend bool operator==(const CoprimeForm&, const CoprimeForm&) = default;
};

/// Canonical reduction of a part tuple: group the nontrivial divisors of
/// the parts into gcd-connected components; each component contributes one
/// block with n = lcm of the component and r = the largest divisor
/// multiplicity in it. p(x) collects the cyclotomic factors needed to make
/// the identity
///   (1-x)^m * prod_j (1-x^(n_j))^(r_j) = p(x) * prod_i (1-x^(a_i))
/// exact. Blocks are sorted by n.
CoprimeForm reduce(const PartTuple& parts);

/// One block of a q-partial-fraction decomposition: the numerator h over
/// (1-x^n)^r plus its expansion h = sum_i h_sub[i] * (1-x^n)^i with
/// deg(h_sub[i]) < n (all scalar factors folded in).
struct DecomposedBlock {
  int n = 0;
  int r = 0;
  Poly h;
  std::vector<Poly> h_sub;
};

/// Full q-partial fraction of a coprime form:
///   p / ((1-x)^m prod (1-x^(n_j))^(r_j))
///     = sum_{j<s} c[j] / (1-x)^(s-j)  +  sum_j h_j / (1-x^(n_j))^(r_j),
/// with s = m + sum r_j. The recombination identity is exact by
/// construction and re-checkable via recombined_numerator().
struct QPFDecomposition {
  CoprimeForm form;
  int s = 0;
  std::vector<Rational> c;
  std::vector<DecomposedBlock> blocks;
};

QPFDecomposition decompose(const CoprimeForm& form);

/// Clears all denominators of the decomposition and returns the resulting
/// numerator; equals form.p exactly when the decomposition is consistent.
Poly recombined_numerator(const QPFDecomposition& dec);

/// D_b: x^k -> floor(k/b) x^(k-b), dropping k < b terms. The Taylor-like
/// differentiation for the (1-x^b) basis; b = 1 is the ordinary derivative
/// on monomials.
Poly d_b_derivative(const Poly& h, int b);

/// Expansion pieces h^(0..r-1) with h^(j) = rem(D_b^j h, 1 - x^b), so that
///   h = sum_j (-1)^j h^(j) / j! * (1-x^b)^j
/// exactly. Requires deg(h) < r*b ("DegreeOverflow").
std::vector<Poly> taylor_db(const Poly& h, int b, int r);

}  // namespace qpf

#endif  // QPF_DECOMPOSE_HPP
