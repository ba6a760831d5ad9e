#ifndef QPF_WAVES_HPP
#define QPF_WAVES_HPP

#include <cstddef>
#include <vector>

#include "qpf/decompose.hpp"
#include "qpf/denumerant.hpp"

namespace qpf {

/// Result of a floating-point cross check. Exact results never flow
/// through this type.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;
};

/// Sylvester-wave view of a decomposition: the polynomial wave (binomial
/// basis coefficients) plus one periodic table per block modulus. The sum
/// of all wave values at t is d(t).
struct WaveSet {
  int s = 0;
  std::vector<Rational> w1_coeffs;
  std::vector<PeriodicBlockTable> waves;
};

WaveSet wave_set(const QPFDecomposition& dec);

/// Polynomial wave W_1(t) from the reduced form's polynomial-part block.
Rational w1(const CoprimeForm& form, const Integer& t);

/// W_1(t) straight from the part tuple via the degenerate Bernoulli
/// series, without reducing; agrees with the form route.
Rational w1_from_parts(const PartTuple& parts, const Integer& t);

/// Exact value of the periodic wave attached to block j at t.
Rational wave_eval(const WaveSet& ws, std::size_t j, const Integer& t);

/// Exact coefficient of t^(r-1)/(r-1)! in wave j, a period-n function of
/// t, read off the top table row. For r = 1 this is the wave value itself.
Rational top_coefficient(const WaveSet& ws, std::size_t j, const Integer& t);

/// Root-of-unity evaluation of the same top coefficient
/// (1/n^r) sum_{a=1}^{n-1} p(xi^a) xi^(-at) / ((1-xi^a)^m prod (1-xi^(a n_i))^(r_i)),
/// floating complex; the imaginary part is a cross-check residual.
ComplexPoint structure_check_numeric(const CoprimeForm& form, std::size_t j, long t);

/// (1/b) sum_k h(xi_b^k) xi_b^(-tk): the inverse-DFT form of coefficient
/// extraction; matches the exact coefficient h_(t mod b) for deg(h) < b.
ComplexPoint finite_fourier_numeric(const Poly& h, int b, long t);

}  // namespace qpf

#endif  // QPF_WAVES_HPP
