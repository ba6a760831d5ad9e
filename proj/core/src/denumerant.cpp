#include "qpf/denumerant.hpp"

#include "qpf/error.hpp"

namespace qpf {

Integer oracle_count(const PartTuple& parts, long t) {
  validate(parts);
  if (t < 0) return 0;
  std::vector<Integer> dp(static_cast<std::size_t>(t) + 1, Integer(0));
  dp[0] = 1;
  for (int a : parts.parts)
    for (long i = a; i <= t; ++i)
      dp[static_cast<std::size_t>(i)] += dp[static_cast<std::size_t>(i - a)];
  return dp[static_cast<std::size_t>(t)];
}

QuasiPolynomial quasi_polynomial(const QPFDecomposition& dec) {
  QuasiPolynomial q;
  q.s = dec.s;
  q.c = dec.c;
  for (const DecomposedBlock& b : dec.blocks) {
    PeriodicBlockTable tab;
    tab.n = b.n;
    tab.r = b.r;
    for (const Poly& piece : b.h_sub) {
      std::vector<Rational> row(static_cast<std::size_t>(b.n), Rational(0));
      for (int i = 0; i <= piece.degree(); ++i) row[static_cast<std::size_t>(i)] = piece.coeff(i);
      tab.table.push_back(std::move(row));
    }
    q.blocks.push_back(std::move(tab));
  }
  return q;
}

Rational evaluate_rational(const QuasiPolynomial& q, const Integer& t) {
  Rational total = 0;
  const Rational tr(t);
  for (std::size_t j = 0; j < q.c.size(); ++j)
    total += q.c[j] * rising_binomial(tr, q.s - static_cast<int>(j));
  for (const PeriodicBlockTable& b : q.blocks) {
    Integer quot, remv;
    mpz_fdiv_qr(quot.get_mpz_t(), remv.get_mpz_t(), t.get_mpz_t(), Integer(b.n).get_mpz_t());
    const auto residue = static_cast<std::size_t>(remv.get_ui());
    const Rational qr(quot);
    for (int i = 0; i < b.r; ++i)
      total += b.table[static_cast<std::size_t>(i)][residue] * rising_binomial(qr, b.r - i);
  }
  return total;
}

Integer evaluate(const QuasiPolynomial& q, const Integer& t) {
  Rational total = evaluate_rational(q, t);
  if (!total.is_integer() || total.sign() < 0)
    throw Error("DecompositionCorrupt",
                "expected a non-negative integer count, got " + total.str());
  return total.to_integer();
}

}  // namespace qpf
