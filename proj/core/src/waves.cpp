#include "qpf/waves.hpp"

#include <complex>
#include <numbers>

#include "qpf/bernoulli.hpp"
#include "qpf/error.hpp"

namespace qpf {

WaveSet wave_set(const QPFDecomposition& dec) {
  QuasiPolynomial q = quasi_polynomial(dec);
  return {q.s, std::move(q.c), std::move(q.blocks)};
}

Rational w1(const CoprimeForm& form, const Integer& t) {
  QPFDecomposition dec = decompose(form);
  Rational total = 0;
  const Rational tr(t);
  for (std::size_t j = 0; j < dec.c.size(); ++j)
    total += dec.c[j] * rising_binomial(tr, dec.s - static_cast<int>(j));
  return total;
}

Rational w1_from_parts(const PartTuple& parts, const Integer& t) {
  validate(parts);
  const int r = static_cast<int>(parts.parts.size());
  std::vector<Rational> prod(static_cast<std::size_t>(r), Rational(0));
  prod[0] = 1;
  for (int a : parts.parts) {
    const std::vector<Rational> series = inv_psi_series(a, 1, r);
    std::vector<Rational> next(static_cast<std::size_t>(r), Rational(0));
    for (int i = 0; i < r; ++i) {
      if (prod[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j < r; ++j)
        next[static_cast<std::size_t>(i + j)] +=
            prod[static_cast<std::size_t>(i)] * series[static_cast<std::size_t>(j)];
    }
    prod = std::move(next);
  }
  Rational total = 0;
  const Rational tr(t);
  for (int j = 0; j < r; ++j)
    total += prod[static_cast<std::size_t>(j)] * rising_binomial(tr, r - j);
  return total;
}

namespace {

const PeriodicBlockTable& block_at(const std::vector<PeriodicBlockTable>& blocks, std::size_t j) {
  if (j >= blocks.size()) throw Error("IndexOutOfRange", "no such wave block");
  return blocks[j];
}

std::size_t residue_mod(const Integer& t, int n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), Integer(n).get_mpz_t());
  return static_cast<std::size_t>(r.get_ui());
}

}  // namespace

Rational wave_eval(const WaveSet& ws, std::size_t j, const Integer& t) {
  const PeriodicBlockTable& b = block_at(ws.waves, j);
  Integer quot, remv;
  mpz_fdiv_qr(quot.get_mpz_t(), remv.get_mpz_t(), t.get_mpz_t(), Integer(b.n).get_mpz_t());
  const auto residue = static_cast<std::size_t>(remv.get_ui());
  const Rational qr(quot);
  Rational total = 0;
  for (int i = 0; i < b.r; ++i)
    total += b.table[static_cast<std::size_t>(i)][residue] * rising_binomial(qr, b.r - i);
  return total;
}

Rational top_coefficient(const WaveSet& ws, std::size_t j, const Integer& t) {
  const PeriodicBlockTable& b = block_at(ws.waves, j);
  Rational v = b.table[0][residue_mod(t, b.n)];
  for (int i = 1; i < b.r; ++i) v /= Rational(b.n);
  return v;
}

ComplexPoint structure_check_numeric(const CoprimeForm& form, std::size_t j, long t) {
  if (j >= form.blocks.size()) throw Error("IndexOutOfRange", "no such block");
  const Block& blk = form.blocks[j];
  const int n = blk.n;
  using C = std::complex<double>;
  const double tau = 2.0 * std::numbers::pi / n;
  C sum = 0.0;
  for (int a = 1; a < n; ++a) {
    const C xi = std::polar(1.0, tau * a);
    C term = eval_complex(form.p, xi);
    term *= std::polar(1.0, -tau * static_cast<double>(a) * static_cast<double>(t % n));
    term /= std::pow(C(1.0) - xi, form.m);
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
      if (i == j) continue;
      const Block& other = form.blocks[i];
      term /= std::pow(C(1.0) - std::polar(1.0, tau * a * other.n), other.r);
    }
    sum += term;
  }
  sum /= std::pow(static_cast<double>(n), blk.r);
  return {sum.real(), sum.imag()};
}

ComplexPoint finite_fourier_numeric(const Poly& h, int b, long t) {
  if (b < 1) throw Error("InvalidOrder", "finite Fourier requires b >= 1");
  using C = std::complex<double>;
  const double tau = 2.0 * std::numbers::pi / b;
  C sum = 0.0;
  for (int k = 0; k < b; ++k) {
    C xi = std::polar(1.0, tau * k);
    sum += eval_complex(h, xi) * std::polar(1.0, -tau * static_cast<double>(k) * static_cast<double>(t % b));
  }
  sum /= static_cast<double>(b);
  return {sum.real(), sum.imag()};
}

}  // namespace qpf
