#include "doctest.h"
#include "qpf/denumerant.hpp"
#include "qpf/error.hpp"
#include "test_util.hpp"

using namespace qpf;

TEST_CASE("oracle_count basics") {
  CHECK(oracle_count({{3, 5, 7}}, 0) == 1);
  CHECK(oracle_count({{1, 2}}, 100) == 51);  // floor(t/2) + 1
  for (long t : {0L, 1L, 17L, 300L}) CHECK(oracle_count({{1}}, t) == 1);
  CHECK(oracle_count({{2, 3}}, 1) == 0);

  // cross-check one value by direct enumeration
  long count = 0;
  for (int a = 0; 9 * a <= 60; ++a)
    for (int b = 0; 9 * a + 17 * b <= 60; ++b)
      if ((60 - 9 * a - 17 * b) % 31 == 0) ++count;
  CHECK(oracle_count({{9, 17, 31}}, 60) == Integer(count));
}

TEST_CASE("quasi polynomial for {9,17,31}") {
  const QuasiPolynomial q = quasi_polynomial(decompose(reduce({{9, 17, 31}})));
  const PartTuple parts{{9, 17, 31}};
  for (long t = 0; t <= 1000; ++t) CHECK(evaluate(q, t) == oracle_count(parts, t));
  CHECK(evaluate(q, 4743) == oracle_count(parts, 4743));
  CHECK(evaluate(q, 4743) == 2401);
}

TEST_CASE("quasi polynomial for (1,2,3,4,5) at t = 100") {
  const QuasiPolynomial q = quasi_polynomial(decompose(reduce({{1, 2, 3, 4, 5}})));
  CHECK(evaluate(q, 100) == oracle_count({{1, 2, 3, 4, 5}}, 100));
  CHECK(evaluate(q, 0) == 1);
}

TEST_CASE("sylvester two-part reciprocity away from part multiples") {
  // d(t) + d(n1*n2 - t) = 1 needs t coprime to the parts; at multiples of
  // a part both sides count the pure multiple and the sum is 2.
  const PartTuple parts{{5, 7}};
  for (long t = 1; t < 35; ++t) {
    const Integer sum = oracle_count(parts, t) + oracle_count(parts, 35 - t);
    if (t % 5 != 0 && t % 7 != 0)
      CHECK(sum == 1);
    else
      CHECK(sum == 2);
  }
}

TEST_CASE("euler recurrence for (3,3,4)") {
  const QuasiPolynomial q334 = quasi_polynomial(decompose(reduce({{3, 3, 4}})));
  const QuasiPolynomial q34 = quasi_polynomial(decompose(reduce({{3, 4}})));
  for (long t = 3; t <= 100; ++t)
    CHECK(evaluate(q334, t) - evaluate(q334, t - 3) == evaluate(q34, t));
}

TEST_CASE("periodic difference has polynomial growth") {
  // d(t + N) - d(t) with N = prod n_j kills the periodic parts, leaving a
  // polynomial of degree s - 2 whose (s-1)-st finite difference vanishes.
  const PartTuple parts{{2, 3}};
  const QuasiPolynomial q = quasi_polynomial(decompose(reduce(parts)));
  const long N = 6;
  auto diff = [&](long t) -> Integer { return evaluate(q, t + N) - evaluate(q, t); };
  // s = 2: the difference must be constant in t
  for (long t = 0; t < 24; ++t) CHECK(diff(t) == diff(0));
}

TEST_CASE("integrality tripwire") {
  QuasiPolynomial broken;
  broken.s = 1;
  broken.c = {Rational(1, 3)};
  CHECK_THROWS_WITH_AS(evaluate(broken, 0),
                       "DecompositionCorrupt: expected a non-negative integer count, got 1/3",
                       Error);
}
