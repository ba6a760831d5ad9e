#include <numeric>

#include "doctest.h"
#include "qpf/decompose.hpp"
#include "qpf/denumerant.hpp"
#include "qpf/error.hpp"
#include "qpf/format.hpp"
#include "test_util.hpp"

using namespace qpf;
using testutil::Rng;

namespace {

// parts -> product of (1 - x^a); the left side of the reduction identity.
Poly parts_product(const PartTuple& parts) {
  Poly prod = Poly::constant(1);
  for (int a : parts.parts) prod = prod * one_minus_xpow(a);
  return prod;
}

void check_reduction_identity(const PartTuple& parts, const CoprimeForm& form) {
  Poly lhs = pow(parse_poly("1 - x"), form.m);
  for (const Block& b : form.blocks) lhs = lhs * pow(one_minus_xpow(b.n), b.r);
  CHECK(lhs == form.p * parts_product(parts));
}

PartTuple random_tuple(Rng& rng) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> value(1, 12);
  while (true) {
    PartTuple t;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) t.parts.push_back(value(rng));
    int g = 0;
    for (int a : t.parts) g = std::gcd(g, a);
    if (g == 1) return t;
  }
}

}  // namespace

TEST_CASE("reduce golden examples") {
  const CoprimeForm f5 = reduce({{1, 2, 3, 4, 5}});
  CHECK(f5.m == 1);
  CHECK(f5.p == parse_poly("1 + x^2"));
  CHECK(f5.blocks == std::vector<Block>{{3, 1}, {4, 2}, {5, 1}});

  const CoprimeForm f311 = reduce({{3, 11, 11}});
  CHECK(f311.m == 0);
  CHECK(f311.p == Poly::constant(1));
  CHECK(f311.blocks == std::vector<Block>{{3, 1}, {11, 2}});

  const CoprimeForm f9 = reduce({{9, 17, 31}});
  CHECK(f9.m == 0);
  CHECK(f9.p == Poly::constant(1));
  CHECK(f9.blocks == std::vector<Block>{{9, 1}, {17, 1}, {31, 1}});

  CHECK_THROWS_WITH_AS(reduce({{2, 4}}), "NonCoprimeTuple: gcd of parts is 2, expected 1",
                       Error);
}

TEST_CASE("reduce identity on random tuples") {
  Rng rng(818283);
  for (int iter = 0; iter < 60; ++iter) {
    const PartTuple parts = random_tuple(rng);
    const CoprimeForm form = reduce(parts);
    check_reduction_identity(parts, form);
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
      CHECK(form.blocks[i].n >= 2);
      for (std::size_t j = i + 1; j < form.blocks.size(); ++j)
        CHECK(std::gcd(form.blocks[i].n, form.blocks[j].n) == 1);
    }
    CHECK(form.m >= 0);
  }
}

TEST_CASE("decompose golden: single block with unit part") {
  // 1/((1-x)(1-x^2)): c = [1/2, 1/4], block numerator (1-x)/4
  const QPFDecomposition dec = decompose(reduce({{1, 2}}));
  CHECK(dec.s == 2);
  CHECK(dec.c == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  REQUIRE(dec.blocks.size() == 1);
  CHECK(dec.blocks[0].h == Rational(1, 4) * parse_poly("1 - x"));
  CHECK(recombined_numerator(dec) == dec.form.p);

  const QuasiPolynomial q = quasi_polynomial(dec);
  for (long t = 0; t <= 50; ++t)
    CHECK(evaluate(q, t) == Integer(t / 2 + 1));  // floor(t/2) + 1
}

TEST_CASE("decompose golden: geometric series") {
  CoprimeForm form;
  form.m = 1;
  const QPFDecomposition dec = decompose(form);
  CHECK(dec.c == std::vector<Rational>{Rational(1)});
  CHECK(dec.blocks.empty());
  const QuasiPolynomial q = quasi_polynomial(dec);
  for (long t = 0; t <= 5; ++t) CHECK(evaluate(q, t) == 1);
}

TEST_CASE("decompose recombination and oracle agreement") {
  Rng rng(5150);
  int tuples = 0;
  while (tuples < 50) {
    const PartTuple parts = random_tuple(rng);
    const CoprimeForm form = reduce(parts);
    const QPFDecomposition dec = decompose(form);
    CHECK(recombined_numerator(dec) == form.p);

    // degree bounds of the theorem
    for (const DecomposedBlock& b : dec.blocks) {
      CHECK(b.h.degree() < b.n * b.r);
      for (const Poly& piece : b.h_sub) CHECK(piece.degree() < b.n);
      // numerators recombine across the power ladder
      Poly back;
      for (std::size_t i = 0; i < b.h_sub.size(); ++i)
        back += b.h_sub[i] * pow(one_minus_xpow(b.n), static_cast<int>(i));
      CHECK(back == b.h);
      // the periodic numerator vanishes at 1
      CHECK(b.h(1) == Rational(0));
    }

    // c_0 positivity for p(1) > 0
    if (form.p(1) > Rational(0)) CHECK(dec.c[0] > Rational(0));

    const QuasiPolynomial q = quasi_polynomial(dec);
    for (long t = 0; t <= 60; ++t) CHECK(evaluate(q, t) == oracle_count(parts, t));
    ++tuples;
  }
}

TEST_CASE("d_b_derivative") {
  CHECK(d_b_derivative(Poly::monomial(7), 3) == Rational(2) * Poly::monomial(4));
  CHECK(d_b_derivative(parse_poly("1 + x"), 2).is_zero());
  Rng rng(22222);
  for (int iter = 0; iter < 20; ++iter) {
    const Poly h = testutil::random_poly(rng, 8);
    CHECK(d_b_derivative(h, 1) == derivative(h));  // b = 1 on monomials is D
  }
}

TEST_CASE("taylor_db expansion") {
  for (int b : {2, 3, 5}) {
    const auto pieces = taylor_db(Poly::monomial(b), b, 2);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0] == Poly::constant(1));
    CHECK(pieces[1] == Poly::constant(1));  // x^b = 1 - (1 - x^b)
  }
  const Poly low = parse_poly("3 - x");
  CHECK(taylor_db(low, 4, 1) == std::vector<Poly>{low});

  Rng rng(60606);
  std::uniform_int_distribution<int> bd(2, 6), rd(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    const int b = bd(rng), r = rd(rng);
    std::uniform_int_distribution<int> degd(0, b * r - 1);
    Poly h = testutil::random_poly(rng, degd(rng));
    const auto pieces = taylor_db(h, b, r);
    Poly back;
    Rational fact = 1;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j > 0) fact *= Rational(static_cast<long>(j));
      Rational scale = Rational(1) / fact;
      if (j % 2 != 0) scale = -scale;
      back += scale * (pieces[j] * pow(one_minus_xpow(b), static_cast<int>(j)));
    }
    CHECK(back == h);
  }
  CHECK_THROWS_AS(taylor_db(Poly::monomial(8), 4, 2), Error);
}
