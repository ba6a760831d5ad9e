#ifndef QPF_FORMAT_HPP
#define QPF_FORMAT_HPP

#include <string>

#include "qpf/poly.hpp"

namespace qpf {

/// Text form shared across the repo: "c0 + c1*x + c2*x^2 + ..." with
/// rational coefficients rendered "p/q". The zero polynomial is "0".
std::string to_string(const Poly& p);

/// Parses the polynomial text format. Accepts '^' powers, optional '*',
/// arbitrary term order and repeated terms (summed), e.g. "x^2 - 3/4*x + 1".
Poly parse_poly(const std::string& text);

}  // namespace qpf

#endif  // QPF_FORMAT_HPP
