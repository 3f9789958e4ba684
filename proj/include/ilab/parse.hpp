#ifndef ILAB_PARSE_HPP
#define ILAB_PARSE_HPP

#include <string>

#include "ilab/poly.hpp"

namespace ilab {

struct SyntaxError : std::runtime_error {
    size_t offset;
    SyntaxError(const std::string& what, size_t off)
        : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct UnknownVariable : std::runtime_error {
    size_t offset;
    UnknownVariable(char c, size_t off)
        : std::runtime_error(std::string("unknown variable '") + c + "' at offset " +
                             std::to_string(off)),
          offset(off) {}
};

/// Polynomial expression grammar shared with the CLI: integer literals, the
/// variables t, x, v, y (t and v denote the parameter, x and y the main
/// variable), operators + - *, exponent ^, parentheses; whitespace
/// insensitive.  Example: "x^3 + t*x + t - 1".
BiPoly parse_poly(const std::string& text);

}  // namespace ilab

#endif
