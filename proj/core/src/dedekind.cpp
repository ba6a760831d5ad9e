#include "qpf/dedekind.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qpf/error.hpp"
#include "qpf/evalop.hpp"

namespace qpf {

namespace {

void validate_params(const FDSParams& params) {
  if (params.b < 1) throw Error("InvalidOrder", "b must be >= 1");
  if (params.r < 1) throw Error("InvalidOrder", "r must be >= 1");
  if (params.m < 0) throw Error("InvalidOrder", "m must be >= 0");
  for (int n : params.moduli) {
    if (n < 1) throw Error("InvalidOrder", "moduli must be positive");
    if (std::gcd(n, params.b) != 1)
      throw Error("NotCoprime", "b shares a factor with modulus " + std::to_string(n));
  }
}

// Index of x^t in a period-b coefficient table, for any sign of t.
std::size_t phase_index(long t, int b) {
  long r = t % b;
  if (r < 0) r += b;
  return static_cast<std::size_t>(r);
}

std::string str_of(const Rational& r) { return r.str(); }

void check_coprime_moduli(const std::vector<int>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) throw Error("InvalidOrder", "moduli must be >= 2");
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (std::gcd(moduli[i], moduli[j]) != 1)
        throw Error("NotCoprime", "moduli are not pairwise coprime");
  }
}

// Polynomial part of the decomposition evaluated at a rational argument
// (the binomial pattern extends to negative t as a polynomial).
Rational poly_part_at(const QPFDecomposition& dec, const Rational& t) {
  Rational total = 0;
  for (std::size_t j = 0; j < dec.c.size(); ++j)
    total += dec.c[j] * rising_binomial(t, dec.s - static_cast<int>(j));
  return total;
}

}  // namespace

ComplexPoint fds_numeric(const FDSParams& params) {
  validate_params(params);
  using C = std::complex<double>;
  const double tau = 2.0 * std::numbers::pi / params.b;
  C sum = 0.0;
  for (int j = 1; j < params.b; ++j) {
    const C xi = std::polar(1.0, tau * j);
    C term = eval_complex(params.p, xi);
    term *= std::polar(1.0, tau * static_cast<double>(j) * static_cast<double>(params.t % params.b));
    term /= std::pow(C(1.0) - xi, params.m);
    for (int n : params.moduli)
      term /= std::pow(C(1.0) - std::polar(1.0, tau * static_cast<double>(j) * n), params.r);
    sum += term;
  }
  sum /= std::pow(static_cast<double>(params.b), params.r);
  return {sum.real(), sum.imag()};
}

Rational fds_exact(const FDSParams& params) {
  validate_params(params);
  if (params.r != 1) throw Error("InvalidOrder", "fds_exact handles r = 1; see fds_exact_general");
  if (params.b == 1) return 0;
  Poly den = pow(Poly{Rational(1), Rational(-1)}, params.m + 1);
  const Poly mod = psi(params.b);
  den = rem(den, mod);
  for (int n : params.moduli) den = rem(den * rem(one_minus_xpow(n), mod), mod);
  const Poly h = Poly{Rational(1), Rational(-1)} * eval({params.p, den}, mod);
  return h.coeff(static_cast<int>(phase_index(-params.t, params.b)));
}

Rational fds_exact_general(const FDSParams& params) {
  validate_params(params);
  if (params.b == 1) return 0;
  const Poly mod = psi(params.b);
  Poly den = rem(pow(Poly{Rational(1), Rational(-1)}, params.m), mod);
  for (int n : params.moduli)
    den = rem(den * pow_mod(one_minus_xpow(n), params.r, mod), mod);
  const Poly e = eval({params.p, den}, mod);
  Rational v = e.coeff(static_cast<int>(phase_index(-params.t, params.b))) -
               e(1) / Rational(params.b);
  for (int i = 1; i < params.r; ++i) v /= Rational(params.b);
  return v;
}

Poly zagier_theta(const std::vector<int>& moduli) {
  Poly plus = Poly::constant(1);
  Poly minus = Poly::constant(1);
  for (int n : moduli) {
    if (n < 1) throw Error("InvalidOrder", "moduli must be positive");
    plus = plus * (Poly::constant(1) + Poly::monomial(n));
    minus = minus * (Poly::constant(1) - Poly::monomial(n));
  }
  return plus + minus;
}

Rational zagier_sum(int m, const std::vector<int>& moduli, int b, long t) {
  if (moduli.size() % 2 == 0)
    throw Error("OddArityRequired", "the Zagier-type sum needs an odd number of moduli");
  FDSParams params;
  params.m = m;
  params.r = 1;
  params.p = zagier_theta(moduli);
  params.moduli = moduli;
  params.b = b;
  params.t = t;
  return fds_exact(params);
}

bool CheckReport::all_pass() const {
  for (const CheckItem& item : items)
    if (!item.pass) return false;
  return true;
}

namespace {

void add_item(CheckReport& report, const std::string& name, bool pass,
              const std::string& detail = "") {
  report.items.push_back({name, pass, detail});
}

Rational sum_fds_exact_over_blocks(const std::vector<int>& moduli, int m, int r, const Poly& p,
                                   long t, bool general_route) {
  Rational total = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    FDSParams params;
    params.m = m;
    params.r = r;
    params.p = p;
    params.b = moduli[j];
    params.t = t;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      if (i != j) params.moduli.push_back(moduli[i]);
    total += general_route ? fds_exact_general(params) : fds_exact(params);
  }
  return total;
}

double sum_fds_numeric_over_blocks(const std::vector<int>& moduli, int m, int r, const Poly& p,
                                   long t) {
  double total = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    FDSParams params;
    params.m = m;
    params.r = r;
    params.p = p;
    params.b = moduli[j];
    params.t = t;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      if (i != j) params.moduli.push_back(moduli[i]);
    total += fds_numeric(params).re;
  }
  return total;
}

}  // namespace

CheckReport verify_reciprocity_r1(const std::vector<int>& moduli, int m, const Poly& p,
                                  long t_cap) {
  check_coprime_moduli(moduli);
  if (moduli.empty()) throw Error("InvalidOrder", "need at least one modulus");
  if (p.is_zero()) throw Error("InvalidOrder", "numerator must be nonzero");

  CoprimeForm form;
  form.m = m;
  form.p = p;
  for (int n : moduli) form.blocks.push_back({n, 1});
  const QPFDecomposition dec = decompose(form);

  long s = 0;
  for (int n : moduli) s += n;
  const long window_end = s + m - p.degree();

  CheckReport report;
  {
    const Rational lhs = sum_fds_exact_over_blocks(moduli, m, 1, p, 0, false);
    const Rational rhs = p(0) - poly_part_at(dec, 0);
    add_item(report, "t=0", lhs == rhs, "lhs=" + str_of(lhs) + " rhs=" + str_of(rhs));
  }
  const long t_end = (t_cap >= 0) ? std::min(window_end, t_cap + 1) : window_end;
  for (long t = 1; t < t_end; ++t) {
    const Rational lhs = sum_fds_exact_over_blocks(moduli, m, 1, p, t, false);
    const Rational rhs = -poly_part_at(dec, Rational(-t));
    add_item(report, "t=" + std::to_string(t), lhs == rhs,
             "lhs=" + str_of(lhs) + " rhs=" + str_of(rhs));
  }
  return report;
}

ReciprocityCase make_reciprocity_case(const std::vector<int>& moduli, int m, int r,
                                      const Poly& p) {
  check_coprime_moduli(moduli);
  if (moduli.empty()) throw Error("InvalidOrder", "need at least one modulus");
  if (r < 1) throw Error("InvalidOrder", "r must be >= 1");
  if (p.is_zero()) throw Error("InvalidOrder", "numerator must be nonzero");
  ReciprocityCase rc;
  rc.moduli = moduli;
  rc.m = m;
  rc.r = r;
  rc.p = p;
  rc.N = 1;
  long s = 0;
  for (int n : moduli) {
    rc.N *= n;
    s += n;
  }
  rc.lambda = m + static_cast<long>(r) * s - static_cast<long>(r - 1) * rc.N - p.degree();
  return rc;
}

CheckReport verify_reciprocity_general(const ReciprocityCase& rc, long t_cap) {
  if (rc.lambda <= 0)
    throw Error("InsufficientM", "lambda = " + std::to_string(rc.lambda) +
                                     "; increase m until lambda > 0");
  CoprimeForm form;
  form.m = rc.m;
  form.p = rc.p;
  for (int n : rc.moduli) form.blocks.push_back({n, rc.r});
  const QPFDecomposition dec = decompose(form);
  const QuasiPolynomial qp = quasi_polynomial(dec);

  const Rational Nr = [&] {  // N^(r-1)
    Rational v = 1;
    for (int i = 1; i < rc.r; ++i) v *= Rational(rc.N);
    return v;
  }();

  // a(t) sequence values (0 for t < 0) and the polynomial wave at any
  // rational argument.
  auto seq = [&](long t) -> Rational {
    if (t < 0) return 0;
    return evaluate_rational(qp, Integer(t));
  };
  auto poly_prime = [&](const Rational& t) {
    Rational acc = 0;
    for (int q = 0; q < rc.r; ++q) {
      Rational term = Rational(binomial(rc.r - 1, q)) *
                      poly_part_at(dec, t - Rational(static_cast<long>(q) * rc.N));
      acc += (q % 2 != 0) ? -term : term;
    }
    return acc;
  };
  // Left side via the wave route: the binomial-alternating sum of
  // denumerant values at a phase-compatible argument large enough that no
  // negative index is truncated.
  auto lhs_wave = [&](long t) {
    const long tp = ((-t) % rc.N + rc.N) % rc.N + static_cast<long>(rc.r - 1) * rc.N;
    Rational b = 0;
    for (int q = 0; q < rc.r; ++q) {
      Rational term = Rational(binomial(rc.r - 1, q)) * seq(tp - static_cast<long>(q) * rc.N);
      b += (q % 2 != 0) ? -term : term;
    }
    return (b - poly_prime(Rational(tp))) / Nr;
  };

  CheckReport report;
  const long t_end = (t_cap >= 0) ? std::min(rc.lambda, t_cap + 1) : rc.lambda;
  for (long t = 0; t < t_end; ++t) {
    const Rational lhs = lhs_wave(t);
    const Rational rhs = (t == 0) ? (rc.p(0) - poly_prime(0)) / Nr
                                  : -poly_prime(Rational(-t)) / Nr;
    add_item(report, "t=" + std::to_string(t), lhs == rhs,
             "lhs=" + str_of(lhs) + " rhs=" + str_of(rhs));

    const Rational via_fds = sum_fds_exact_over_blocks(rc.moduli, rc.m, rc.r, rc.p, t, true);
    add_item(report, "t=" + std::to_string(t) + " fds-route", via_fds == lhs,
             "fds=" + str_of(via_fds) + " wave=" + str_of(lhs));
    const double numeric = sum_fds_numeric_over_blocks(rc.moduli, rc.m, rc.r, rc.p, t);
    const bool close = std::abs(numeric - lhs.to_double()) < 1e-9;
    add_item(report, "t=" + std::to_string(t) + " numeric", close,
             "numeric=" + std::to_string(numeric));
  }
  return report;
}

CheckReport rademacher_checks(int n1, int n2, std::optional<int> n3) {
  std::vector<int> moduli{n1, n2};
  if (n3) moduli.push_back(*n3);
  check_coprime_moduli(moduli);

  CoprimeForm form;
  form.m = 0;
  form.p = Poly::constant(1);
  for (int n : moduli) form.blocks.push_back({n, 1});
  const QPFDecomposition dec = decompose(form);
  const QuasiPolynomial qp = quasi_polynomial(dec);

  // Period-n coefficient tables, with the trailing polynomial-part
  // constant absorbed into the periodic part (the published convention).
  const Rational absorbed = dec.c.back();
  auto periodic_sum = [&](long n) {
    Rational v = absorbed;
    for (const PeriodicBlockTable& b : qp.blocks) v += b.table[0][phase_index(-n, b.n)];
    return v;
  };

  CheckReport report;
  long N = 1, s = 0;
  for (int n : moduli) {
    N *= n;
    s += n;
  }

  if (!n3) {
    auto lhs = [&](long n) { return Rational(N) * periodic_sum(n); };
    add_item(report, "k2-rademacher[n=0]", lhs(0) == Rational(N - 1),
             "lhs=" + str_of(lhs(0)) + " rhs=" + std::to_string(N - 1));
    {
      bool ok = true;
      std::ostringstream detail;
      for (long n = 1; n < N && ok; ++n)
        if (lhs(n) != Rational(n - 1)) {
          ok = false;
          detail << "first failure at n=" << n << ": lhs=" << lhs(n).str() << " claimed "
                 << (n - 1);
        }
      add_item(report, "k2-rademacher[1<=n<N]", ok, detail.str());
    }
    {
      bool ok = true;
      std::ostringstream detail;
      PartTuple parts{{n1, n2}};
      for (long n = 1; n < N && ok; ++n) {
        const Rational expected =
            Rational(n - 1) - Rational(N) * Rational(oracle_count(parts, n - s));
        if (lhs(n) != expected) {
          ok = false;
          detail << "failed at n=" << n;
        }
      }
      add_item(report, "k2-rademacher-corrected[0<=n<N]",
               ok && lhs(0) == Rational(N - 1), detail.str());
    }
    auto sylv = [&](long n) {
      Rational v = 2 * absorbed;
      for (const PeriodicBlockTable& b : qp.blocks)
        v += b.table[0][phase_index(n, b.n)] + b.table[0][phase_index(-n, b.n)];
      return Rational(-N, 2) * v;
    };
    {
      bool ok = true;
      std::ostringstream detail;
      for (long n = 1; n < N && ok; ++n)
        if (sylv(n) != Rational(1)) {
          ok = false;
          detail << "first failure at n=" << n << ": lhs=" << sylv(n).str() << " claimed 1";
        }
      add_item(report, "sylvester-form[1<=n<N]", ok, detail.str());
    }
    {
      bool ok = true;
      std::ostringstream detail;
      for (long n = 1; n < N && ok; ++n) {
        const int hits = (n % n1 == 0 ? 1 : 0) + (n % n2 == 0 ? 1 : 0);
        const Rational expected = Rational(1) - Rational(N, 2) * Rational(hits);
        if (sylv(n) != expected) {
          ok = false;
          detail << "failed at n=" << n;
        }
      }
      add_item(report, "sylvester-form-corrected[1<=n<N]", ok, detail.str());
    }
  } else {
    auto lhs = [&](long n) { return Rational(N) * periodic_sum(n); };
    const Rational claimed0 = Rational(2 * N - s + 1);
    add_item(report, "k3-rademacher[n=0]", lhs(0) == claimed0,
             "lhs=" + str_of(lhs(0)) + " rhs=" + claimed0.str());
    {
      bool ok = true;
      std::ostringstream detail;
      for (long n = 1; n < N && ok; ++n) {
        const Rational claimed = Rational((n - 1) * (n + 1 - s), 2);
        if (lhs(n) != claimed) {
          ok = false;
          detail << "first failure at n=" << n << ": lhs=" << lhs(n).str() << " claimed "
                 << claimed.str();
        }
      }
      add_item(report, "k3-rademacher[1<=n<s']", ok, detail.str());
    }
    {
      bool ok = lhs(0) == Rational(2 * N - s + 1, 2);
      std::ostringstream detail;
      if (!ok) detail << "failed at n=0";
      PartTuple parts{{moduli[0], moduli[1], moduli[2]}};
      for (long n = 1; n < N && ok; ++n) {
        const Rational expected = Rational((n - 1) * (s - 1 - n), 2) +
                                  Rational(N) * Rational(oracle_count(parts, n - s));
        if (lhs(n) != expected) {
          ok = false;
          detail << "failed at n=" << n;
        }
      }
      add_item(report, "k3-rademacher-corrected[0<=n<s']", ok, detail.str());
    }
  }
  return report;
}

}  // namespace qpf
