#include "qpf/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "qpf/bernoulli.hpp"
#include "qpf/error.hpp"
#include "qpf/evalop.hpp"

namespace qpf {

void validate(const PartTuple& parts) {
  if (parts.parts.empty()) throw Error("NonCoprimeTuple", "empty part tuple");
  int g = 0;
  for (int a : parts.parts) {
    if (a < 1) throw Error("NonCoprimeTuple", "parts must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1)
    throw Error("NonCoprimeTuple", "gcd of parts is " + std::to_string(g) + ", expected 1");
}

CoprimeForm reduce(const PartTuple& parts) {
  validate(parts);

  // Multiplicity e_d = #{i : d | a_i} for every divisor d > 1 of any part.
  std::map<long long, int> mult;
  for (int a : parts.parts)
    for (int d = 2; d <= a; ++d)
      if (a % d == 0) ++mult[d];

  // Union-find over the divisors, joined when gcd > 1.
  std::vector<long long> divisors;
  divisors.reserve(mult.size());
  for (const auto& [d, e] : mult) divisors.push_back(d);
  std::vector<std::size_t> parent(divisors.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j)
      if (std::gcd(divisors[i], divisors[j]) > 1) parent[find(i)] = find(j);

  // One block per component: n = lcm, r = max multiplicity.
  std::map<std::size_t, Block> comp;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    std::size_t root = find(i);
    Block& b = comp.try_emplace(root).first->second;
    long long n = b.n == 0 ? divisors[i] : std::lcm<long long>(b.n, divisors[i]);
    if (n > max_poly_degree())
      throw Error("DegreeLimitExceeded", "block modulus " + std::to_string(n) +
                                             " exceeds QPF_MAX_DEGREE");
    b.n = static_cast<int>(n);
    b.r = std::max(b.r, mult[divisors[i]]);
  }

  CoprimeForm form;
  for (const auto& [root, b] : comp) form.blocks.push_back(b);
  std::sort(form.blocks.begin(), form.blocks.end(),
            [](const Block& a, const Block& b) { return a.n < b.n; });

  int sum_r = 0;
  for (const Block& b : form.blocks) sum_r += b.r;
  form.m = static_cast<int>(parts.parts.size()) - sum_r;

  // p(x) = prod_d Phi_d^(r_j(d) - e_d) over every divisor d > 1 of a block
  // modulus, where r_j(d) is the multiplicity of the unique block whose
  // modulus d divides and e_d = 0 for d dividing no part.
  form.p = Poly::constant(1);
  for (const Block& b : form.blocks)
    for (int d = 2; d <= b.n; ++d) {
      if (b.n % d != 0) continue;
      auto it = mult.find(d);
      const int e = (it == mult.end()) ? 0 : it->second;
      const int exp = b.r - e;
      if (exp < 0) throw Error("DecompositionCorrupt", "negative cyclotomic exponent");
      if (exp > 0) form.p = form.p * pow(cyclotomic(d), exp);
    }
  return form;
}

namespace {

void validate_form(const CoprimeForm& form) {
  if (form.m < 0) throw Error("InvalidOrder", "negative (1-x) exponent");
  long long deg_bound = form.m;
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    const Block& b = form.blocks[i];
    if (b.n < 2 || b.r < 1) throw Error("InvalidOrder", "block moduli must be >= 2 with r >= 1");
    deg_bound += static_cast<long long>(b.n) * b.r;
    for (std::size_t j = i + 1; j < form.blocks.size(); ++j)
      if (std::gcd(b.n, form.blocks[j].n) != 1)
        throw Error("NotCoprime", "block moduli are not pairwise coprime");
  }
  if (form.p.is_zero() || form.p.degree() >= deg_bound)
    throw Error("ImproperFraction", "numerator degree out of range");
}

}  // namespace

QPFDecomposition decompose(const CoprimeForm& form) {
  validate_form(form);
  QPFDecomposition dec;
  dec.form = form;
  int s = form.m;
  for (const Block& b : form.blocks) s += b.r;
  dec.s = s;

  // Polynomial-part coefficients: the product of p and the inverse-psi
  // series in the (1-x) basis, truncated to s terms.
  std::vector<Rational> prod(static_cast<std::size_t>(s), Rational(0));
  {
    const Poly pu = compose_one_minus_x(form.p);  // p(1-u)
    for (int i = 0; i <= pu.degree() && i < s; ++i) prod[static_cast<std::size_t>(i)] = pu.coeff(i);
    for (const Block& b : form.blocks) {
      const std::vector<Rational> series = inv_psi_series(b.n, b.r, s);
      std::vector<Rational> next(static_cast<std::size_t>(s), Rational(0));
      for (int i = 0; i < s; ++i) {
        if (prod[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j < s; ++j)
          next[static_cast<std::size_t>(i + j)] +=
              prod[static_cast<std::size_t>(i)] * series[static_cast<std::size_t>(j)];
      }
      prod = std::move(next);
    }
  }
  dec.c = std::move(prod);

  // Periodic blocks by the extended cover-up method.
  for (std::size_t j = 0; j < form.blocks.size(); ++j) {
    const Block& blk = form.blocks[j];
    const Poly mod = pow(psi(blk.n), blk.r);
    Poly den = pow_mod(Poly{Rational(1), Rational(-1)}, s, mod);  // (1-x)^s
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
      if (i == j) continue;
      den = rem(den * pow_mod(psi(form.blocks[i].n), form.blocks[i].r, mod), mod);
    }
    Poly h = pow(Poly{Rational(1), Rational(-1)}, blk.r) * eval({form.p, den}, mod);

    DecomposedBlock out;
    out.n = blk.n;
    out.r = blk.r;
    std::vector<Poly> pieces = taylor_db(h, blk.n, blk.r);
    out.h_sub.reserve(pieces.size());
    Rational fact = 1;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0) fact *= Rational(static_cast<long>(i));
      Rational scale = Rational(1) / fact;
      if (i % 2 != 0) scale = -scale;
      out.h_sub.push_back(scale * pieces[i]);
    }
    out.h = std::move(h);
    dec.blocks.push_back(std::move(out));
  }
  return dec;
}

Poly recombined_numerator(const QPFDecomposition& dec) {
  Poly all_psi = Poly::constant(1);
  for (const DecomposedBlock& b : dec.blocks) all_psi = all_psi * pow(psi(b.n), b.r);

  Poly total;
  const Poly u{Rational(1), Rational(-1)};  // 1 - x
  for (std::size_t j = 0; j < dec.c.size(); ++j)
    total += dec.c[j] * (pow(u, static_cast<int>(j)) * all_psi);
  for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
    Poly rest = Poly::constant(1);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i)
      if (i != j) rest = rest * pow(psi(dec.blocks[i].n), dec.blocks[i].r);
    total += dec.blocks[j].h * pow(u, dec.s - dec.blocks[j].r) * rest;
  }
  return total;
}

Poly d_b_derivative(const Poly& h, int b) {
  if (b < 1) throw Error("InvalidOrder", "D_b requires b >= 1");
  if (h.degree() < b) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(h.degree() - b) + 1, Rational(0));
  for (int k = b; k <= h.degree(); ++k)
    out[static_cast<std::size_t>(k - b)] = Rational(k / b) * h.coeff(k);
  return Poly(std::move(out));
}

std::vector<Poly> taylor_db(const Poly& h, int b, int r) {
  if (b < 1 || r < 1) throw Error("InvalidOrder", "taylor_db requires b, r >= 1");
  if (h.degree() >= static_cast<long long>(r) * b)
    throw Error("DegreeOverflow", "taylor_db requires deg(h) < r*b");
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(r));
  Poly cur = h;
  for (int j = 0; j < r; ++j) {
    out.push_back(rem_one_minus_xpow(cur, b));
    if (j + 1 < r) cur = d_b_derivative(cur, b);
  }
  return out;
}

}  // namespace qpf
