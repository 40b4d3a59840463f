#pragma once

#include <stdexcept>
#include <string>

#include "crossprod/element.hpp"

namespace crossprod {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos + 1)), position(pos) {}
};

/// Polynomial over the base variables only. Grammar: terms joined by +/-,
/// integer or a/b coefficients, '*' products, '^' powers, parentheses.
CommPoly parse_poly(const std::string& text, const BaseDomain& base);

/// Element expression over base variables and generators (declared names or
/// canonical g1..gn). Products are evaluated left to right in B.
CrossedElement parse_element(const std::string& text, const AlgebraPresentation& pres);

}  // namespace crossprod
