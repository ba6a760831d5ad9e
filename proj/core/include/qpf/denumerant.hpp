#ifndef QPF_DENUMERANT_HPP
#define QPF_DENUMERANT_HPP

#include <vector>

#include "qpf/decompose.hpp"

namespace qpf {

/// Number of solutions of sum x_i * a_i = t in non-negative integers,
/// by bounded power-series extraction (unbounded-knapsack DP, O(r*t)).
/// Independent of the decomposition machinery; serves as its oracle.
Integer oracle_count(const PartTuple& parts, long t);

/// One periodic block of the closed-form evaluator: for each i < r a
/// length-n table of the coefficients of h_sub[i].
struct PeriodicBlockTable {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Rational>> table;
};

/// Closed-form counting function assembled from a decomposition:
///   d(t) = sum_j c[j] C(t+s-j-1, t)
///        + sum_blocks sum_i C(floor(t/n)+r-i-1, r-i-1) table[i][t mod n].
struct QuasiPolynomial {
  int s = 0;
  std::vector<Rational> c;
  std::vector<PeriodicBlockTable> blocks;
};

QuasiPolynomial quasi_polynomial(const QPFDecomposition& dec);

/// Exact evaluation; computed in rationals with an integrality check at
/// the end ("DecompositionCorrupt" if the total is not a non-negative
/// integer, which signals an upstream bug).
Integer evaluate(const QuasiPolynomial& q, const Integer& t);

/// Rational-valued evaluation without the integrality tripwire, for
/// generating functions whose coefficients are not counts.
Rational evaluate_rational(const QuasiPolynomial& q, const Integer& t);

}  // namespace qpf

#endif  // QPF_DENUMERANT_HPP
