#include <complex>

#include "doctest.h"
#include "qpf/bernoulli.hpp"
#include "qpf/error.hpp"
#include "qpf/evalop.hpp"
#include "qpf/format.hpp"
#include "test_util.hpp"

using namespace qpf;

TEST_CASE("deg_bernoulli_poly small values") {
  for (int m : {2, 3, 5, 9})
    CHECK(deg_bernoulli_poly(m, 0) == Poly::constant(1));
  CHECK(deg_bernoulli_poly(9, 1)(1) == Rational(4));   // (m-1)/2
  CHECK(deg_bernoulli_poly(5, 2)(1) == Rational(2));   // (m^2-1)/12
  CHECK_THROWS_AS(deg_bernoulli_poly(1, 3), Error);
}

TEST_CASE("deg_bernoulli_poly equals inverse of (1-x)^k mod psi") {
  for (int m : {2, 3, 4, 7, 10})
    for (int k = 1; k <= 5; ++k) {
      const Poly inv = eval({Poly::constant(1), pow(parse_poly("1 - x"), k)}, psi(m));
      CHECK(deg_bernoulli_poly(m, k) == inv);
    }
}

TEST_CASE("fast route agrees with the iterative route") {
  for (int m : {2, 3, 6, 11, 17})
    for (int k : {0, 1, 2, 5, 9, 16})
      CHECK(deg_bernoulli_poly_fast(m, k) == deg_bernoulli_poly(m, k));
}

TEST_CASE("reciprocal degenerate Bernoulli numbers") {
  for (int m : {2, 5, 9}) CHECK(reciprocal_deg_bernoulli(0, m) == Rational(1));
  CHECK(reciprocal_deg_bernoulli(1, 7) == Rational(-3));  // -(m-1)/2 at m=7
  CHECK(reciprocal_deg_bernoulli(2, 5) == Rational(4));   // 2*(m^2-1)/12 at m=5
}

TEST_CASE("order-r numbers reduce and convolve") {
  for (int k : {0, 1, 2, 3})
    for (int m : {2, 3, 5})
      CHECK(reciprocal_deg_bernoulli_order(k, m, 1) == reciprocal_deg_bernoulli(k, m));
  for (int r : {1, 2, 3, 4}) CHECK(reciprocal_deg_bernoulli_order(0, 4, r) == Rational(1));
  // k = 1, r = 2: the two splits (0,1), (1,0) double the order-1 value
  CHECK(reciprocal_deg_bernoulli_order(1, 3, 2) == Rational(-2));

  // direct multinomial convolution as the oracle for k = 3, r = 3
  for (int m : {2, 5}) {
    Rational conv = 0;
    for (int k1 = 0; k1 <= 3; ++k1)
      for (int k2 = 0; k1 + k2 <= 3; ++k2) {
        const int k3 = 3 - k1 - k2;
        Rational weight = Rational(factorial(3)) /
                          (Rational(factorial(k1)) * Rational(factorial(k2)) * Rational(factorial(k3)));
        conv += weight * reciprocal_deg_bernoulli(k1, m) * reciprocal_deg_bernoulli(k2, m) *
                reciprocal_deg_bernoulli(k3, m);
      }
    CHECK(reciprocal_deg_bernoulli_order(3, m, 3) == conv);
  }
}

TEST_CASE("series identity: psi * truncated series = m mod (1-x)^N") {
  for (int m = 2; m <= 10; ++m)
    for (int N : {3, 5, 8}) {
      const std::vector<Rational> series = inv_psi_series(m, 1, N);
      // work in the (1-x) basis: psi(m)(1-u) * m * series(u) = m mod u^N
      const Poly psi_u = compose_one_minus_x(psi(m));
      std::vector<Rational> series_m(series.size());
      for (std::size_t i = 0; i < series.size(); ++i) series_m[i] = series[i] * m;
      Poly prod = psi_u * Poly(std::move(series_m));
      std::vector<Rational> trunc(static_cast<std::size_t>(N), Rational(0));
      for (int i = 0; i < N; ++i) trunc[static_cast<std::size_t>(i)] = prod.coeff(i);
      CHECK(Poly(std::move(trunc)) == Poly::constant(m));
    }
}

TEST_CASE("bernoulli numbers and stirling tables") {
  const auto B = bernoulli_numbers(8);
  CHECK(B[0] == Rational(1));
  CHECK(B[1] == Rational(-1, 2));
  CHECK(B[2] == Rational(1, 6));
  CHECK(B[3] == Rational(0));
  CHECK(B[4] == Rational(-1, 30));
  CHECK(B[6] == Rational(1, 42));
  CHECK(B[8] == Rational(-1, 30));

  const auto S = stirling_first_unsigned(5);
  CHECK(S[0][0] == 1);
  CHECK(S[3][1] == 2);
  CHECK(S[4][2] == 11);
  CHECK(S[5][2] == 50);
  // row sums are factorials
  Integer sum = 0;
  for (const auto& v : S[5]) sum += v;
  CHECK(sum == factorial(5));
}

TEST_CASE("closed form pins the Stirling convention for small k") {
  // k <= 4 against the remainder-power route decides between the signed
  // and unsigned first-kind conventions; only unsigned matches.
  for (int m = 2; m <= 12; ++m)
    for (int k = 1; k <= 4; ++k)
      CHECK(gessel_closed_form(k, m) == deg_bernoulli_poly(m, k)(1));
  CHECK(gessel_closed_form(1, 9) == Rational(4));
  CHECK(gessel_closed_form(2, 5) == Rational(2));
  CHECK_THROWS_AS(gessel_closed_form(0, 5), Error);
}

TEST_CASE("closed form agreement across the full grid") {
  for (int k = 1; k <= 8; ++k)
    for (int m = 2; m <= 20; ++m)
      CHECK(gessel_closed_form(k, m) == deg_bernoulli_poly(m, k)(1));
}

TEST_CASE("sum over roots of unity of (1-xi^j)^-k") {
  // complex sum equals m - sum_{j<=k} f_j(1), within 1e-9
  for (int m = 2; m <= 12; ++m)
    for (int k = 1; k <= 5; ++k) {
      std::complex<double> sum = 0.0;
      for (int j = 1; j < m; ++j) {
        const std::complex<double> xi = std::polar(1.0, 2.0 * 3.14159265358979323846 * j / m);
        sum += 1.0 / std::pow(1.0 - xi, k);
      }
      Rational expect = m;
      for (int j = 0; j <= k; ++j) expect -= deg_bernoulli_poly(m, j)(1);
      CHECK(std::abs(sum.real() - expect.to_double()) < 1e-9);
      CHECK(std::abs(sum.imag()) < 1e-9);
    }
}

TEST_CASE("interpolation of m^k f_k(1)") {
  const auto lin = interpolate_mk_fk(1, {2, 3, 4});
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == Rational(0));
  CHECK(lin[1] == Rational(-1, 2));
  CHECK(lin[2] == Rational(1, 2));  // m(m-1)/2

  const auto flat = interpolate_mk_fk(0, {5});
  CHECK(flat[0] == Rational(1));

  for (int k = 1; k <= 6; ++k) {
    std::vector<int> samples;
    for (int m = 2; m < 2 + 2 * k + 1; ++m) samples.push_back(m);
    const auto coeffs = interpolate_mk_fk(k, samples);
    for (int i = 0; i < k; ++i) CHECK(coeffs[static_cast<std::size_t>(i)] == Rational(0));
  }
  CHECK_THROWS_WITH_AS(interpolate_mk_fk(2, {2, 3, 4}),
                       "NeedMoreSamples: interpolation of degree <= 4 needs at least 5 samples",
                       Error);
}
