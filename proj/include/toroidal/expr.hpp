#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "toroidal/json_util.hpp"
#include "toroidal/toroidal_algebra.hpp"

namespace toroidal {

/// Syntax error at a byte offset of the input.
struct ParseError : InputError {
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// expr := term (('+'|'-') term)*, term := [rational '*'] atom, rational := int['/'int].
/// Atoms: g[label], k[i], d[s] each with optional *t0^j and *t^(m1,...,mN);
/// d0*t0^n (or d0); Cvir. A lone "0" is the zero element. Whitespace is
/// ignored. The result is canonical.
/// Unknown labels and wrong t-tuple lengths throw InputError.
ToroidalElement parse_element(const std::string& text, const ToroidalAlgebra& alg);

/// Canonical text form; parse_element(print_element(x)) == x for canonical x.
std::string print_element(const ToroidalElement& x, const ToroidalAlgebra& alg);
std::string print_symbol(const Symbol& s, const ToroidalAlgebra& alg);

}  // namespace toroidal
