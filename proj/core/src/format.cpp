#include "qpf/format.hpp"

#include <cctype>
#include <sstream>

#include "qpf/error.hpp"

namespace qpf {

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0) {
      os << a.str();
    } else {
      os << a.str() << "*x";
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  Integer read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("ParseError", "expected number at position " + std::to_string(pos) + " in '" + s + "'");
    return Integer(s.substr(start, pos - start));
  }

  // coefficient [*] [x [^ power]]  |  x [^ power]
  void read_term(Poly& acc, int sign) {
    Rational coef = 1;
    bool have_coef = false;
    if (peek_digit()) {
      Integer num = read_integer();
      if (eat('/')) {
        Integer den = read_integer();
        coef = Rational(num, den);
      } else {
        coef = Rational(num);
      }
      have_coef = true;
      eat('*');
    }
    int power = 0;
    skip_ws();
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      power = 1;
      if (eat('^')) power = static_cast<int>(read_integer().get_si());
    } else if (!have_coef) {
      throw Error("ParseError", "expected term at position " + std::to_string(pos) + " in '" + s + "'");
    }
    acc += Poly::monomial(power, sign < 0 ? -coef : coef);
  }

  Poly parse() {
    Poly acc;
    int sign = 1;
    skip_ws();
    if (eat('-')) sign = -1;
    else eat('+');
    read_term(acc, sign);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else throw Error("ParseError", "unexpected character at position " + std::to_string(pos) + " in '" + s + "'");
      read_term(acc, sign);
    }
    return acc;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p(text);
  return p.parse();
}

}  // namespace qpf
